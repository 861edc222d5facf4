#pragma once

#include "realhurwitz/hurwitz.hpp"

#include <map>
#include <vector>

namespace realhurwitz {

// Coefficients c_0..c_N of 1/S(z), S(z) = sinh(z/2)/(z/2).
struct RatSeries {
    int order = 0;
    std::vector<Rational> coeffs;  // size order + 1
};

RatSeries s_inverse_coeffs(int N);
// c_n alone, from a shared memoized expansion.
Rational s_inverse_coeff(int n);

// p_k^*(mu) = k! c_{k+1} + sum_i [(mu_i - i + 1/2)^k - (-i + 1/2)^k]
Rational p_star(int k, const Partition& mu);

// (k) + sum_{|nu| < k} q_{k,nu} nu; `coefficients` includes (k) -> 1 and
// omits zero coefficients.
struct CompletedCycle {
    int k = 0;
    std::map<Partition, Rational, std::greater<>> coefficients;  // canonical order

    Rational q(const Partition& nu) const;
    // "(4):1 (2,1):2 (2):5/4", largest partitions first
    std::string to_string(bool strict = false) const;
};

// Solved size by size, then checked on all partitions up to size k + 3.
// Throws std::logic_error if the defining identity fails anywhere.
CompletedCycle completed_cycle(int k);

// sum_nu q_{k,nu} f_nu(mu), which should reproduce p_k^*(mu)/k.
Rational completed_cycle_value(const CompletedCycle& cc, const Partition& mu);

Rational complex_completed_disconnected(int g, int d, const Profiles& profiles, const std::vector<int>& cycles);
Rational real_completed_disconnected(int g, int d, const Profiles& profiles, const std::vector<int>& cycles);

Rational complex_completed_connected(int g, int d, const Profiles& profiles, const std::vector<int>& cycles);
Rational real_completed_connected(int g, int d, const Profiles& profiles, const std::vector<int>& cycles);

// ((-1)^{d'(g-1)}/2) prod_j (1 + (-1)^{k_j - 1}) sum over splittings of
// prod_i eps(lambda_i^{s(i)}) H_{g,d'}(lambda^+, lambda^-; k) with connected
// Complex completed-cycle numbers.
Rational doublet_contribution_completed(int g, int d, const Profiles& profiles, const std::vector<int>& cycles,
                                        const std::vector<int>& choice = {});

}  // namespace realhurwitz
