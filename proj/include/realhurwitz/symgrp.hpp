#pragma once

#include "realhurwitz/partitions.hpp"
#include "realhurwitz/rational.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace realhurwitz {

// Raised when an oracle query would enumerate more tuples than allowed.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultOracleBudget = 1e8;

// A bijection of {1..d}, stored 0-based.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image);  // validates bijectivity
    static Permutation identity(int d);
    // "(1 2 3)(4 5)" in degree d; "()" or "" is the identity.
    static Permutation parse_cycles(std::string_view text, int d);

    int degree() const { return static_cast<int>(image_.size()); }
    int operator()(int x) const { return image_[x]; }
    const std::vector<int>& image() const { return image_; }

    // (*this * other)(x) = (*this)(other(x))
    Permutation operator*(const Permutation& other) const;
    Permutation inverse() const;
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    std::string to_cycle_string() const;

private:
    std::vector<int> image_;
};

Partition cycle_type(const Permutation& s);
int sign(const Permutation& s);

// All of S_d in lexicographic order of images.
std::vector<Permutation> all_permutations(int d);
std::vector<Permutation> class_members(const Partition& lambda);

struct OracleQuery {
    int handles = 0;     // h
    int crosscaps = 1;   // k + 1; zero means none (the Complex relation)
    int degree = 0;
    std::vector<Partition> profiles;
    bool transitive_only = false;
    // Bit i set: additionally weight each tuple by eps(profile i).
    std::uint64_t twist_mask = 0;
    double budget = kDefaultOracleBudget;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct OracleResult {
    Integer positive;  // tuples with sign +1
    Integer negative;  // tuples with sign -1
    Integer group_order;
    Rational value() const;
    Rational positive_part() const;
    Rational negative_part() const;
};

// Estimated number of enumerated tuples: (d!)^{2h + k + 1} prod_{i<n} #c_i.
double oracle_search_size(const OracleQuery& q);

// Counts tuples with [a1,b1]...[ah,bh] = g0^2...gk^2 d1...dn, d_i in c_{lambda_i},
// each signed by eps(g0)...eps(gk).
OracleResult oracle_count(const OracleQuery& q);

Rational oracle_real_disconnected(const OracleQuery& q);
Rational oracle_real_connected(OracleQuery q);
Rational oracle_complex_disconnected(int g, int d, const std::vector<Partition>& profiles,
                                     double budget = kDefaultOracleBudget);
Rational oracle_complex_connected(int g, int d, const std::vector<Partition>& profiles,
                                  double budget = kDefaultOracleBudget);

// Coefficients N_x with c_a c_b = sum_x N_x c_x, by multiplying class members;
// indexed like partitions_of(d).
std::vector<Rational> brute_class_product(const Partition& a, const Partition& b);

// Character table of S_d from permutation characters on tabloids and Kostka
// numbers; rows/columns in canonical order. Independent of Murnaghan-Nakayama.
std::vector<std::vector<std::int64_t>> brute_character_table(int d);

}  // namespace realhurwitz
