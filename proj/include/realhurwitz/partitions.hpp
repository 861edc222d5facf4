#pragma once

#include "realhurwitz/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace realhurwitz {

// An integer partition: weakly decreasing positive parts. The empty partition
// is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    // Sorts and validates; throws ValidationError on non-positive parts.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    // Number of parts equal to v.
    int multiplicity(int v) const;

    // Parts of both partitions, merged.
    Partition merged(const Partition& other) const;
    // This partition padded with ones up to the given size.
    Partition padded_to(int size) const;

    bool operator==(const Partition&) const = default;
    // Lexicographic on parts; reverse of this order is the canonical one.
    std::strong_ordering operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// All partitions of d in reverse-lexicographic order: (d), (d-1,1), ..., (1^d).
std::vector<Partition> partitions_of(int d);

Partition transpose(const Partition& lambda);
int diagonal_length(const Partition& lambda);
// (-1)^{|lambda| - l(lambda)}: the sign of any permutation of this cycle type.
int parity_sign(const Partition& lambda);
int m1(const Partition& lambda);
bool is_symmetric(const Partition& lambda);

// Number of standard Young tableaux (hook-length formula).
Integer dimension(const Partition& mu);

// Every ordered pair (plus, minus) of sub-multisets whose union is lambda,
// each distinct pair exactly once.
std::vector<std::pair<Partition, Partition>> splittings(const Partition& lambda);

// Whether every part of `sub` occurs in `whole` at least as often.
bool is_submultiset(const Partition& sub, const Partition& whole);
// All sub-multisets of lambda (including empty and lambda itself).
std::vector<Partition> submultisets(const Partition& lambda);

// "4,2,1,1"; the empty partition renders as "-".
std::string to_string(const Partition& lambda);
// Inverse of to_string. Also accepts the empty string as the empty partition.
Partition parse_partition(std::string_view text);
// "(4,2,1,1)" / "()".
std::string to_paren_string(const Partition& lambda);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace realhurwitz
