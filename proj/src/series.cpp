#include "realhurwitz/series.hpp"

#include <bit>
#include <stdexcept>

namespace realhurwitz {

bool Monomial::divides(const Monomial& other) const {
    if (degree > other.degree) return false;
    if ((insertions & ~other.insertions) != 0) return false;
    if (branches.size() != other.branches.size()) return false;
    for (std::size_t i = 0; i < branches.size(); ++i)
        if (!is_submultiset(branches[i], other.branches[i])) return false;
    return true;
}

bool Monomial::is_constant() const {
    if (degree != 0 || insertions != 0) return false;
    for (const auto& b : branches)
        if (!b.empty()) return false;
    return true;
}

std::string to_string(const Monomial& m) {
    std::string s = "q^" + std::to_string(m.degree);
    for (std::size_t i = 0; i < m.branches.size(); ++i) s += " p" + std::to_string(i + 1) + to_paren_string(m.branches[i]);
    for (int j = 0; j < 32; ++j)
        if (m.insertions >> j & 1u) s += " t" + std::to_string(j + 1);
    return s;
}

MultiSeries::MultiSeries(Monomial ceiling) : ceiling_(std::move(ceiling)) {}

Rational MultiSeries::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiSeries::add(const Monomial& m, const Rational& c) {
    if (c == 0 || !m.divides(ceiling_)) return;
    Rational v = c;
    v.canonicalize();
    auto [it, inserted] = terms_.emplace(m, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

void require_compatible(const MultiSeries& a, const MultiSeries& b) {
    if (!(a.ceiling() == b.ceiling())) throw std::invalid_argument("series with different truncation");
}

}  // namespace

MultiSeries MultiSeries::operator*(const MultiSeries& other) const {
    require_compatible(*this, other);
    MultiSeries out(ceiling_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) {
            if (ma.insertions & mb.insertions) continue;
            Monomial m;
            m.degree = ma.degree + mb.degree;
            m.insertions = ma.insertions | mb.insertions;
            m.branches.reserve(ma.branches.size());
            for (std::size_t i = 0; i < ma.branches.size(); ++i) m.branches.push_back(ma.branches[i].merged(mb.branches[i]));
            out.add(m, ca * cb);
        }
    return out;
}

MultiSeries MultiSeries::operator+(const MultiSeries& other) const {
    require_compatible(*this, other);
    MultiSeries out = *this;
    for (const auto& [m, c] : other.terms_) out.add(m, c);
    return out;
}

MultiSeries MultiSeries::scaled(const Rational& s) const {
    MultiSeries out(ceiling_);
    for (const auto& [m, c] : terms_) out.add(m, c * s);
    return out;
}

bool MultiSeries::operator==(const MultiSeries& other) const {
    return ceiling_ == other.ceiling_ && terms_ == other.terms_;
}

namespace {

Monomial constant_monomial(const Monomial& ceiling) {
    Monomial one;
    one.branches.assign(ceiling.branches.size(), Partition());
    return one;
}

// Every non-constant monomial raises degree + #insertions by at least one,
// so powers beyond this bound vanish below the ceiling.
int nilpotency_bound(const Monomial& ceiling) {
    return ceiling.degree + std::popcount(ceiling.insertions);
}

}  // namespace

MultiSeries series_exp(const MultiSeries& s) {
    Monomial one = constant_monomial(s.ceiling());
    if (s.coefficient(one) != 0) throw ValidationError("exp requires a series without constant term");
    MultiSeries result(s.ceiling());
    result.add(one, 1);
    MultiSeries power = result;
    for (int n = 1; n <= nilpotency_bound(s.ceiling()); ++n) {
        power = (power * s).scaled(Rational(1, n));
        if (power.terms().empty()) break;
        result = result + power;
    }
    return result;
}

MultiSeries series_log(const MultiSeries& s) {
    Monomial one = constant_monomial(s.ceiling());
    if (s.coefficient(one) != 1)
        throw ValidationError("log requires constant term 1, got " + to_string(s.coefficient(one)));
    MultiSeries x = s;
    x.add(one, -1);
    MultiSeries result(s.ceiling());
    MultiSeries power = x;
    for (int n = 1; n <= nilpotency_bound(s.ceiling()) && !power.terms().empty(); ++n) {
        result = result + power.scaled(Rational(n % 2 ? 1 : -1, n));
        power = power * x;
    }
    return result;
}

}  // namespace realhurwitz
