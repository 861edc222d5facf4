#pragma once

#include "realhurwitz/partitions.hpp"
#include "realhurwitz/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace realhurwitz {

// Monomial q^degree prod_i p_{i, branches[i]} prod_{j in insertions} t_j.
// Branch i carries a multiset of part values (a partition); the insertion
// variables t_j are square-free, one per completed-cycle insertion.
struct Monomial {
    int degree = 0;
    std::vector<Partition> branches;
    std::uint32_t insertions = 0;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

    bool divides(const Monomial& other) const;
    bool is_constant() const;
};

std::string to_string(const Monomial& m);

// Truncated multivariate series. All arithmetic keeps only monomials that
// divide the ceiling, which is enough to read off the ceiling's coefficient
// of exp or log.
class MultiSeries {
public:
    explicit MultiSeries(Monomial ceiling);

    const Monomial& ceiling() const { return ceiling_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Rational coefficient(const Monomial& m) const;
    // Adds c to the coefficient of m; ignored when m does not divide the ceiling.
    void add(const Monomial& m, const Rational& c);

    MultiSeries operator*(const MultiSeries& other) const;
    MultiSeries operator+(const MultiSeries& other) const;
    MultiSeries scaled(const Rational& s) const;

    bool operator==(const MultiSeries& other) const;

private:
    Monomial ceiling_;
    std::map<Monomial, Rational> terms_;  // no zero coefficients
};

// Connected to disconnected. The argument must have zero constant term.
MultiSeries series_exp(const MultiSeries& s);
// Disconnected to connected. Throws ValidationError unless the constant term is 1.
MultiSeries series_log(const MultiSeries& s);

}  // namespace realhurwitz
