#include "realhurwitz/centeralg.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace realhurwitz {

GroupHandle symmetric_group(int d, int degree_cap) {
    static std::mutex mutex;
    static std::map<int, GroupHandle> cache;
    if (d > degree_cap)
        throw ResourceError("degree " + std::to_string(d) + " exceeds the character table cap " +
                            std::to_string(degree_cap));
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(d); it != cache.end()) return it->second;
    }
    auto g = std::make_shared<const GroupSpec>(GroupSpec::symmetric(d, degree_cap));
    std::lock_guard lock(mutex);
    return cache.emplace(d, std::move(g)).first->second;
}

GroupHandle make_group(GroupSpec g) { return std::make_shared<const GroupSpec>(std::move(g)); }

CenterElement::CenterElement(GroupHandle g, std::vector<Rational> spectral)
    : group_(std::move(g)), x_(std::move(spectral)) {
    if (!group_) throw std::invalid_argument("center element without a group");
    if (x_.size() != group_->irrep_count())
        throw std::invalid_argument("spectral coordinate vector has the wrong length");
}

std::vector<Rational> CenterElement::class_coordinates() const {
    const GroupSpec& g = *group_;
    std::vector<Rational> a(g.class_count(), Rational(0));
    for (std::size_t c = 0; c < g.class_count(); ++c) {
        for (std::size_t rho = 0; rho < g.irrep_count(); ++rho)
            a[c] += x_[rho] * Rational(g.dim(rho)) * g.chi(rho, c);
        a[c] /= Rational(g.order());
    }
    return a;
}

bool CenterElement::operator==(const CenterElement& other) const {
    return (group_ == other.group_ || group_->order() == other.group_->order()) && x_ == other.x_;
}

namespace {

void require_same_group(const CenterElement& x, const CenterElement& y) {
    if (x.group() != y.group()) throw std::invalid_argument("center elements belong to different groups");
}

}  // namespace

CenterElement unit(const GroupHandle& g) {
    return CenterElement(g, std::vector<Rational>(g->irrep_count(), Rational(1)));
}

CenterElement idempotent(const GroupHandle& g, std::size_t rho) {
    std::vector<Rational> x(g->irrep_count(), Rational(0));
    x.at(rho) = 1;
    return CenterElement(g, std::move(x));
}

CenterElement from_class(const GroupHandle& g, std::size_t c) {
    if (c >= g->class_count()) throw std::out_of_range("class index out of range");
    std::vector<Rational> x;
    for (std::size_t rho = 0; rho < g->irrep_count(); ++rho) x.push_back(g->f_value(c, rho));
    return CenterElement(g, std::move(x));
}

CenterElement from_class_coordinates(const GroupHandle& g, const std::vector<Rational>& a) {
    if (a.size() != g->class_count()) throw std::invalid_argument("class coordinate vector has the wrong length");
    std::vector<Rational> x(g->irrep_count(), Rational(0));
    for (std::size_t c = 0; c < a.size(); ++c) {
        if (a[c] == 0) continue;
        for (std::size_t rho = 0; rho < x.size(); ++rho) x[rho] += a[c] * g->f_value(c, rho);
    }
    return CenterElement(g, std::move(x));
}

CenterElement multiply(const CenterElement& x, const CenterElement& y) {
    require_same_group(x, y);
    std::vector<Rational> z(x.spectral().size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = x[i] * y[i];
    return CenterElement(x.group(), std::move(z));
}

CenterElement add(const CenterElement& x, const CenterElement& y) {
    require_same_group(x, y);
    std::vector<Rational> z(x.spectral().size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = x[i] + y[i];
    return CenterElement(x.group(), std::move(z));
}

CenterElement scale(const CenterElement& x, const Rational& s) {
    std::vector<Rational> z = x.spectral();
    for (auto& v : z) v *= s;
    return CenterElement(x.group(), std::move(z));
}

CenterElement power(const CenterElement& x, unsigned e) {
    std::vector<Rational> z = x.spectral();
    for (auto& v : z) v = pow(v, static_cast<long>(e));
    return CenterElement(x.group(), std::move(z));
}

Rational identity_coefficient(const CenterElement& x) {
    const GroupSpec& g = *x.group();
    Rational s = 0;
    for (std::size_t rho = 0; rho < g.irrep_count(); ++rho) s += x[rho] * Rational(g.dim(rho) * g.dim(rho));
    return s / Rational(g.order());
}

CenterElement kappa(const GroupHandle& g) {
    std::vector<Rational> x;
    for (std::size_t rho = 0; rho < g->irrep_count(); ++rho) x.push_back(pow(Rational(g->order(), g->dim(rho)), 2));
    return CenterElement(g, std::move(x));
}

CenterElement ell(const GroupHandle& g) {
    std::vector<Rational> x;
    for (std::size_t rho = 0; rho < g->irrep_count(); ++rho) {
        Rational r(g->order(), g->dim(rho));
        r.canonicalize();
        x.push_back(r * sfs_indicator(g->irreducibles()[rho].character, *g));
    }
    return CenterElement(g, std::move(x));
}

PairTensor delta(const GroupHandle& g) {
    std::size_t n = g->irrep_count();
    PairTensor t{g, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0)))};
    auto k = kappa(g);
    for (std::size_t rho = 0; rho < n; ++rho) t.entries[rho][rho] = k[rho];
    return t;
}

}  // namespace realhurwitz
