#pragma once

#include "realhurwitz/partitions.hpp"
#include "realhurwitz/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace realhurwitz {

inline constexpr int kDefaultDegreeCap = 24;

// chi_mu(lambda) by the Murnaghan-Nakayama rule. Shapes must have equal size.
// Results are memoized process-wide; safe to call from several threads.
std::int64_t mn_character(const Partition& mu, const Partition& lambda);

// Character table of S_d. Rows are irreducibles mu, columns classes lambda,
// both in canonical (reverse-lexicographic) order.
class SymCharTable {
public:
    int degree() const { return degree_; }
    const std::vector<Partition>& partitions() const { return partitions_; }
    std::size_t size() const { return partitions_.size(); }
    std::size_t index_of(const Partition& p) const;

    std::int64_t operator()(std::size_t mu, std::size_t lambda) const { return values_[mu][lambda]; }
    std::int64_t value(const Partition& mu, const Partition& lambda) const {
        return values_[index_of(mu)][index_of(lambda)];
    }
    // Row of chi_mu as a class function in canonical order.
    std::vector<Rational> row(std::size_t mu) const;

    friend SymCharTable sym_char_table(int d, int degree_cap);

private:
    int degree_ = 0;
    std::vector<Partition> partitions_;
    std::vector<std::vector<std::int64_t>> values_;
};

// Throws ResourceError when d exceeds degree_cap.
SymCharTable sym_char_table(int d, int degree_cap = kDefaultDegreeCap);

// z_lambda = prod_i i^{m_i} m_i!
Integer z_lambda(const Partition& lambda);
// |lambda|! / z_lambda
Integer class_size(const Partition& lambda);
// Cycle type of sigma^2 for sigma of cycle type lambda.
Partition square_class(const Partition& lambda);

// f_lambda(mu) = #c_lambda chi_mu(lambda) / dim(mu), same-size shapes.
Rational f_value(const Partition& lambda, const Partition& mu);
// Extension to arbitrary sizes: zero when |mu| < |lambda|, otherwise
// binom(m1(lambda) + |mu| - |lambda|, m1(lambda)) f_{lambda 1^{|mu|-|lambda|}}(mu).
Rational f_extended(const Partition& lambda, const Partition& mu);

// (-1)^{(d - r(mu))/2} when mu is self-conjugate, zero otherwise.
int sfs_symmetric_closed(const Partition& mu);

struct ConjugacyClass {
    std::string id;
    Integer size;
    int epsilon = 1;
    std::size_t square = 0;  // index of the class containing the squares
};

struct Irreducible {
    std::string id;
    std::vector<Rational> character;  // indexed like GroupSpec::classes()
};

// A finite group with a sign morphism, described by class data and an exact
// rational character table. Instances only come out of validating
// constructors, so the documented invariants always hold.
class GroupSpec {
public:
    const Integer& order() const { return order_; }
    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    const std::vector<Irreducible>& irreducibles() const { return irreducibles_; }
    std::size_t class_count() const { return classes_.size(); }
    std::size_t irrep_count() const { return irreducibles_.size(); }
    std::size_t identity_class() const { return identity_; }

    const Rational& chi(std::size_t rho, std::size_t c) const { return irreducibles_[rho].character[c]; }
    const Integer& dim(std::size_t rho) const { return dims_[rho]; }
    // z_c = #G / #c
    Rational z(std::size_t c) const {
        Rational r(order_, classes_[c].size);
        r.canonicalize();
        return r;
    }
    int epsilon(std::size_t c) const { return classes_[c].epsilon; }

    // Index of rho tensored with epsilon.
    std::size_t transpose_irrep(std::size_t rho) const { return transpose_[rho]; }
    bool is_symmetric_irrep(std::size_t rho) const { return transpose_[rho] == rho; }

    std::optional<std::size_t> find_class(std::string_view id) const;
    std::optional<std::size_t> find_irrep(std::string_view id) const;
    std::size_t class_index(std::string_view id) const;  // throws ValidationError

    // f_c(rho) = #c chi_rho(c) / dim(rho)
    Rational f_value(std::size_t c, std::size_t rho) const;
    std::vector<Rational> row(std::size_t rho) const { return irreducibles_[rho].character; }

    // Symmetric group S_d with the sign morphism; ids are partition strings.
    static GroupSpec symmetric(int d, int degree_cap = kDefaultDegreeCap);
    // Checks every invariant; throws ValidationError naming the first violation.
    // A trivial eps is only accepted on request (S_0 and S_1).
    static GroupSpec validated(Integer order, std::vector<ConjugacyClass> classes,
                               std::vector<Irreducible> irreducibles, bool allow_trivial_epsilon = false);

private:
    Integer order_;
    std::vector<ConjugacyClass> classes_;
    std::vector<Irreducible> irreducibles_;
    std::vector<Integer> dims_;
    std::vector<std::size_t> transpose_;
    std::size_t identity_ = 0;
};

using GroupHandle = std::shared_ptr<const GroupSpec>;

// Group spec file (JSON syntax). Throws ParseError or ValidationError.
GroupSpec load_group_spec(std::string_view text);
GroupSpec load_group_spec_file(const std::string& path);
std::string to_json(const GroupSpec& g);

// (1/#G) sum_c #c chi(square(c))
Rational fs_indicator(std::span<const Rational> chi, const GroupSpec& g);
// (1/#G) sum_c #c eps(c) chi(square(c))
Rational sfs_indicator(std::span<const Rational> chi, const GroupSpec& g);
// Frobenius-Schur indicator of the restriction to ker(eps), expressed over G:
// (1/#G) sum_c #c (1 + eps(c)) chi(square(c))
Rational fs_kernel_indicator(std::span<const Rational> chi, const GroupSpec& g);

// The same indicators over S_d, computed from the partition-level square map.
Rational fs_indicator(std::span<const Rational> chi, const SymCharTable& t);
Rational sfs_indicator(std::span<const Rational> chi, const SymCharTable& t);

}  // namespace realhurwitz
