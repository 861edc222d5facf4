#pragma once

#include "realhurwitz/centeralg.hpp"
#include "realhurwitz/series.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace realhurwitz {

using Profiles = std::vector<Partition>;
using ClassList = std::vector<std::size_t>;

// --- Symmetric group, disconnected --------------------------------------

// sum_mu (dim mu / d!)^{2-2g} prod_i f_{lambda_i}(mu)
Rational complex_disconnected(int g, int d, const Profiles& profiles);
// sum_{mu = mu^T} ((-1)^{(d - r(mu))/2} dim mu / d!)^{1-g} prod_i f_{lambda_i}(mu)
Rational real_disconnected(int g, int d, const Profiles& profiles);
// (1/d!) [e] K^h L^{k+1} c_{lambda_1} ... c_{lambda_n} with g = 2h + k; h defaults to 0.
Rational real_disconnected_via_operator(int g, int d, const Profiles& profiles,
                                        std::optional<int> handles = std::nullopt);
// prod_{i in marking} eps(lambda_i) times the Complex number. Marking indices are 0-based.
Rational doublet(int g, int d, const Profiles& profiles, const std::vector<int>& marking, bool connected = false);

// --- Generic (G, eps) ----------------------------------------------------

Rational complex_disconnected_generic(const GroupHandle& G, int g, const ClassList& classes);
Rational real_disconnected_generic(const GroupHandle& G, int g, const ClassList& classes);
// (1/#G) [e] K^h L^{k+1} prod c_i, the operator product on an arbitrary group.
Rational real_disconnected_operator_generic(const GroupHandle& G, int h, int k, const ClassList& classes);
Rational doublet_generic(const GroupHandle& G, int g, const ClassList& classes, const std::vector<int>& marking);

// --- Connected numbers -------------------------------------------------------

// Disconnected number for a sub-query: degree, per-branch profiles (all of
// that degree) and the subset of completed-cycle insertions present.
using DisconnectedEvaluator = std::function<Rational(int, const Profiles&, std::uint32_t)>;

// Disconnected generating series truncated at q^d prod p_{i, lambda_i} prod t_j.
MultiSeries disconnected_series(int d, const Profiles& profiles, int insertions, const DisconnectedEvaluator& eval);
// Coefficient of the ceiling in log of the disconnected series.
Rational connected_from_disconnected(int d, const Profiles& profiles, int insertions, const DisconnectedEvaluator& eval);

Rational complex_connected(int g, int d, const Profiles& profiles);
Rational real_connected(int g, int d, const Profiles& profiles);

// Connected Complex number used inside doublet contributions: degree d' and
// 2n profiles (plus parts first, then minus parts).
using ConnectedComplex = std::function<Rational(int, const Profiles&)>;

// ((-1)^{d'(g-1)} / 2) sum over splittings lambda_i = lambda_i^+ u lambda_i^-
// with |lambda_i^pm| = d' of prod_i eps(lambda_i^{s(i)}) H_{g,d'}(lambda^+, lambda^-).
// choice[i] is +1 or -1; empty means all +1. Throws ValidationError for odd d.
Rational doublet_contribution(int g, int d, const Profiles& profiles, const std::vector<int>& choice = {});
Rational doublet_contribution_with(int g, int d, const Profiles& profiles, const std::vector<int>& choice,
                                   const ConnectedComplex& connected);
// Real connected number minus the doublet contribution (zero contribution for odd d).
Rational connected_surface_contribution(int g, int d, const Profiles& profiles);

// --- Verification -------------------------------------------------------------

struct DegenerationReport {
    char type = 'a';
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

// (a) RH_g(c, c') = sum_x z_x RH_h(c, x) RH_{g-h-1}(x, c')
// (b) RH_g(c, c') = sum_x z_x RH_h(c, x) H_{(g-h)/2}(x, c')
// (c) RH_g(c)     = sum_x z_x RH_{g-2}(c, x, x)
// (d) RH_g(c)     = sum_x eps(x) z_x H_{(g-1)/2}(c, x, x)
// For (c) and (d) `h` is ignored and `second` must be empty.
DegenerationReport check_degeneration(char type, const GroupHandle& G, int g, int h, const ClassList& first,
                                      const ClassList& second = {});

struct IdentityReport {
    Integer lhs;
    Integer rhs;
    bool equal = false;
};

// Number of self-conjugate partitions of d against sum_{|lambda| = d} eps(lambda).
IdentityReport symmetric_diagram_identity(int d);

}  // namespace realhurwitz
