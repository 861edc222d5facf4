#pragma once

#include "realhurwitz/symgrp.hpp"

#include <vector>

namespace realhurwitz {

// Monodromy eps around a fixed circle together with the involution tau
// induced on the fiber.
class BoundaryMonodromy {
public:
    // Throws ValidationError unless tau^2 = id and eps tau = tau eps.
    BoundaryMonodromy(Permutation eps, Permutation tau);

    const Permutation& eps() const { return eps_; }
    const Permutation& tau() const { return tau_; }
    int degree() const { return eps_.degree(); }

private:
    Permutation eps_;
    Permutation tau_;
};

// Indexed by cycle length i = 0..d (entry 0 unused).
//   m: i-cycles of eps; k: pairs of i-cycles swapped by tau;
//   a: tau-stable i-cycles with tau the identity on them;
//   b: tau-stable i-cycles with tau the half-turn on them (i even).
struct LocalInvariants {
    std::vector<int> m, k, a, b;
};

LocalInvariants decompose(const BoundaryMonodromy& bm);
// (-1)^{sum k_i + sum b_{2j}}
int local_sign(const BoundaryMonodromy& bm);
int local_sign(const LocalInvariants& inv);
// No tau-stable even cycle carries the identity and no cycle carries the half-turn.
bool is_contributing(const BoundaryMonodromy& bm);
bool is_contributing(const LocalInvariants& inv);

int compose_global_sign(int base_sign, const std::vector<int>& locals);
// Refuses (ValidationError) when any local piece is not contributing.
int compose_global_sign(int base_sign, const std::vector<BoundaryMonodromy>& pieces);

// Block-diagonal union: the second pair acts on points shifted by the first degree.
BoundaryMonodromy disjoint_union(const BoundaryMonodromy& x, const BoundaryMonodromy& y);

// (1/d!) sum over eps of cycle type eta and commuting involutions tau of the
// local sign; with contributing_only, non-contributing pairs are skipped.
Rational aggregate_local_signs(const Partition& eta, bool contributing_only = false);

}  // namespace realhurwitz
