#pragma once

#include "realhurwitz/chartab.hpp"

#include <vector>

namespace realhurwitz {

// Shared, cached S_d with its sign morphism.
GroupHandle symmetric_group(int d, int degree_cap = kDefaultDegreeCap);
GroupHandle make_group(GroupSpec g);

// Element of the center of the group algebra, stored by its coordinates in
// the basis of orthogonal central idempotents v_rho.
class CenterElement {
public:
    CenterElement(GroupHandle g, std::vector<Rational> spectral);

    const GroupHandle& group() const { return group_; }
    const std::vector<Rational>& spectral() const { return x_; }
    const Rational& operator[](std::size_t rho) const { return x_[rho]; }

    // Coefficients a_c in x = sum_c a_c c.
    std::vector<Rational> class_coordinates() const;

    bool operator==(const CenterElement& other) const;

private:
    GroupHandle group_;
    std::vector<Rational> x_;
};

CenterElement unit(const GroupHandle& g);
CenterElement idempotent(const GroupHandle& g, std::size_t rho);
CenterElement from_class(const GroupHandle& g, std::size_t c);
CenterElement from_class_coordinates(const GroupHandle& g, const std::vector<Rational>& a);

CenterElement multiply(const CenterElement& x, const CenterElement& y);
CenterElement add(const CenterElement& x, const CenterElement& y);
CenterElement scale(const CenterElement& x, const Rational& s);
CenterElement power(const CenterElement& x, unsigned e);

// Coefficient of the identity element. Expanding v_rho = (dim rho / #G)
// sum_c chi_rho(c) c gives sum_rho x_rho dim(rho)^2 / #G.
Rational identity_coefficient(const CenterElement& x);

// sum_c z_c c c-bar, spectral coordinates (#G / dim rho)^2.
CenterElement kappa(const GroupHandle& g);
// sum_tau eps(tau) tau^2, spectral coordinates (#G / dim rho) SFS(rho).
CenterElement ell(const GroupHandle& g);

// Symmetric tensor in the spectral basis: entries T[rho][rho'].
struct PairTensor {
    GroupHandle group;
    std::vector<std::vector<Rational>> entries;
};

// sum_c z_c c (x) c-bar = sum_rho (#G / dim rho)^2 v_rho (x) v_rho.
PairTensor delta(const GroupHandle& g);

}  // namespace realhurwitz
