#include "realhurwitz/frobenius.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace realhurwitz {

TqftMap::TqftMap(GroupHandle g, int inputs, int outputs)
    : group_(std::move(g)), inputs_(inputs), outputs_(outputs) {
    if (!group_) throw std::invalid_argument("map without a group");
    if (inputs < 0 || outputs < 0) throw std::invalid_argument("negative slot count");
}

Rational TqftMap::at(const Key& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? Rational(0) : it->second;
}

void TqftMap::set(const Key& key, const Rational& value) {
    if (key.size() != static_cast<std::size_t>(inputs_ + outputs_)) throw std::invalid_argument("key has wrong arity");
    if (value == 0)
        entries_.erase(key);
    else
        entries_[key] = value;
}

bool TqftMap::is_diagonal() const {
    for (const auto& [key, v] : entries_)
        if (std::adjacent_find(key.begin(), key.end(), std::not_equal_to<>()) != key.end()) return false;
    return true;
}

bool TqftMap::operator==(const TqftMap& other) const {
    return inputs_ == other.inputs_ && outputs_ == other.outputs_ && entries_ == other.entries_;
}

namespace {

Rational dim_ratio(const GroupSpec& G, std::size_t rho) {
    Rational r(G.dim(rho), G.order());
    r.canonicalize();
    return r;
}

TqftMap diagonal_map(const GroupHandle& g, int inputs, int outputs, const std::vector<Rational>& diag) {
    TqftMap f(g, inputs, outputs);
    if (inputs + outputs == 0) {
        Rational total = 0;
        for (const auto& v : diag) total += v;
        f.set({}, total);
        return f;
    }
    for (std::size_t rho = 0; rho < diag.size(); ++rho) f.set(TqftMap::Key(inputs + outputs, rho), diag[rho]);
    return f;
}

TqftMap classical(const GroupHandle& g, int genus, int inputs, int outputs) {
    std::vector<Rational> diag;
    for (std::size_t rho = 0; rho < g->irrep_count(); ++rho)
        diag.push_back(pow(dim_ratio(*g, rho), 2 - 2L * genus - 2L * outputs));
    return diagonal_map(g, inputs, outputs, diag);
}

TqftMap connected_real(const GroupHandle& g, int genus, int inputs, int outputs) {
    std::vector<Rational> diag(g->irrep_count(), Rational(0));
    for (std::size_t rho = 0; rho < g->irrep_count(); ++rho) {
        if (!g->is_symmetric_irrep(rho)) continue;
        Rational sfs = sfs_indicator(g->irreducibles()[rho].character, *g);
        diag[rho] = pow(sfs * dim_ratio(*g, rho), 1L - genus - 2L * outputs);
    }
    return diagonal_map(g, inputs, outputs, diag);
}

}  // namespace

TqftMap z_map(const GroupHandle& g, const SurfaceDescriptor& s) {
    if (s.genus < 0 || s.inputs < 0 || s.outputs < 0) throw ValidationError("negative surface data");
    switch (s.kind) {
        case SurfaceKind::ClassicalOriented:
            return classical(g, s.genus, s.inputs, s.outputs);
        case SurfaceKind::Doublet: {
            TqftMap f = classical(g, s.genus, s.inputs, s.outputs);
            std::set<int> seen;
            for (int slot : s.marked) {
                if (slot < 0 || slot >= s.inputs + s.outputs || !seen.insert(slot).second)
                    throw ValidationError("invalid marked slot " + std::to_string(slot));
                f = apply_omega(f, slot);
            }
            return f;
        }
        case SurfaceKind::ConnectedReal:
            return connected_real(g, s.genus, s.inputs, s.outputs);
    }
    throw std::logic_error("unknown surface kind");
}

TqftMap identity_map(const GroupHandle& g) { return classical(g, 0, 1, 1); }
TqftMap product_map(const GroupHandle& g) { return classical(g, 0, 2, 1); }
TqftMap unit_map(const GroupHandle& g) { return classical(g, 0, 0, 1); }
TqftMap pairing_map(const GroupHandle& g) { return classical(g, 0, 2, 0); }
TqftMap copairing_map(const GroupHandle& g) { return classical(g, 0, 0, 2); }

TqftMap omega(const GroupHandle& g) {
    TqftMap f(g, 1, 1);
    for (std::size_t rho = 0; rho < g->irrep_count(); ++rho) f.set({rho, g->transpose_irrep(rho)}, 1);
    return f;
}

TqftMap multiplication_by(const CenterElement& w) { return diagonal_map(w.group(), 1, 1, w.spectral()); }
TqftMap vector_map(const CenterElement& w) { return diagonal_map(w.group(), 0, 1, w.spectral()); }

CenterElement as_vector(const TqftMap& f) {
    if (f.inputs() != 0 || f.outputs() != 1) throw std::invalid_argument("map is not a vector");
    std::vector<Rational> x(f.group()->irrep_count(), Rational(0));
    for (const auto& [key, v] : f.entries()) x[key[0]] = v;
    return CenterElement(f.group(), std::move(x));
}

CenterElement u_vector(const GroupHandle& g) { return ell(g); }

TqftMap compose(const TqftMap& f, const TqftMap& g, const std::vector<std::pair<int, int>>& links) {
    if (f.group() != g.group()) throw std::invalid_argument("maps over different groups");
    std::vector<bool> f_out_linked(f.outputs(), false), g_in_linked(g.inputs(), false);
    for (auto [o, i] : links) {
        if (o < 0 || o >= f.outputs() || i < 0 || i >= g.inputs())
            throw std::invalid_argument("link refers to a missing slot");
        if (f_out_linked[o] || g_in_linked[i]) throw std::invalid_argument("slot linked twice");
        f_out_linked[o] = g_in_linked[i] = true;
    }
    int inputs = f.inputs() + g.inputs() - static_cast<int>(links.size());
    int outputs = f.outputs() + g.outputs() - static_cast<int>(links.size());
    TqftMap out(f.group(), inputs, outputs);
    std::map<TqftMap::Key, Rational> acc;
    for (const auto& [fk, fv] : f.entries())
        for (const auto& [gk, gv] : g.entries()) {
            bool match = true;
            for (auto [o, i] : links)
                if (fk[f.inputs() + o] != gk[i]) {
                    match = false;
                    break;
                }
            if (!match) continue;
            TqftMap::Key key(fk.begin(), fk.begin() + f.inputs());
            for (int i = 0; i < g.inputs(); ++i)
                if (!g_in_linked[i]) key.push_back(gk[i]);
            for (int o = 0; o < f.outputs(); ++o)
                if (!f_out_linked[o]) key.push_back(fk[f.inputs() + o]);
            key.insert(key.end(), gk.begin() + g.inputs(), gk.end());
            acc[key] += fv * gv;
        }
    for (const auto& [k, v] : acc) out.set(k, v);
    return out;
}

TqftMap trace(const TqftMap& f, int out, int in) {
    if (out < 0 || out >= f.outputs() || in < 0 || in >= f.inputs()) throw std::invalid_argument("trace of a missing slot");
    TqftMap result(f.group(), f.inputs() - 1, f.outputs() - 1);
    std::map<TqftMap::Key, Rational> acc;
    const std::size_t out_pos = static_cast<std::size_t>(f.inputs() + out);
    for (const auto& [key, v] : f.entries()) {
        if (key[out_pos] != key[in]) continue;
        TqftMap::Key k;
        for (std::size_t s = 0; s < key.size(); ++s)
            if (s != out_pos && s != static_cast<std::size_t>(in)) k.push_back(key[s]);
        acc[k] += v;
    }
    for (const auto& [k, v] : acc) result.set(k, v);
    return result;
}

TqftMap tensor(const TqftMap& f, const TqftMap& g) {
    if (f.group() != g.group()) throw std::invalid_argument("maps over different groups");
    TqftMap out(f.group(), f.inputs() + g.inputs(), f.outputs() + g.outputs());
    for (const auto& [fk, fv] : f.entries())
        for (const auto& [gk, gv] : g.entries()) {
            TqftMap::Key key(fk.begin(), fk.begin() + f.inputs());
            key.insert(key.end(), gk.begin(), gk.begin() + g.inputs());
            key.insert(key.end(), fk.begin() + f.inputs(), fk.end());
            key.insert(key.end(), gk.begin() + g.inputs(), gk.end());
            out.set(key, fv * gv);
        }
    return out;
}

TqftMap apply_omega(const TqftMap& f, int slot) {
    if (slot < 0 || slot >= f.inputs() + f.outputs()) throw std::invalid_argument("no such slot");
    // Omega is a symmetric permutation matrix, so composing before an input
    // or after an output both just relabel that index.
    TqftMap out(f.group(), f.inputs(), f.outputs());
    for (const auto& [fk, v] : f.entries()) {
        TqftMap::Key key = fk;
        key[slot] = f.group()->transpose_irrep(key[slot]);
        out.set(key, v);
    }
    return out;
}

std::map<std::vector<std::size_t>, Rational> to_class_basis(const TqftMap& f) {
    const GroupSpec& G = *f.group();
    const std::size_t C = G.class_count();
    const int arity = f.inputs() + f.outputs();
    std::map<std::vector<std::size_t>, Rational> out;
    std::vector<std::size_t> cls(arity, 0);
    while (true) {
        Rational total = 0;
        for (const auto& [key, v] : f.entries()) {
            Rational term = v;
            for (int s = 0; s < f.inputs() && term != 0; ++s) term *= G.f_value(cls[s], key[s]);
            for (int s = f.inputs(); s < arity && term != 0; ++s)
                term *= dim_ratio(G, key[s]) * G.chi(key[s], cls[s]);
            total += term;
        }
        if (total != 0) out[cls] = total;
        int s = arity - 1;
        while (s >= 0 && ++cls[s] == C) cls[s--] = 0;
        if (s < 0) break;
    }
    return out;
}

std::string to_string(const TqftMap& f) {
    const GroupSpec& G = *f.group();
    std::string out;
    for (const auto& [key, v] : f.entries()) {
        if (!out.empty()) out += '\n';
        for (std::size_t s = 0; s < key.size(); ++s) {
            if (s) out += static_cast<int>(s) == f.inputs() ? " -> " : " ";
            out += G.irreducibles()[key[s]].id;
        }
        if (f.inputs() == static_cast<int>(key.size())) out += " ->";
        out += " : " + to_string(v);
    }
    return out;
}

namespace {

CenterElement apply(const TqftMap& f, const CenterElement& x) {
    return as_vector(compose(vector_map(x), f, {{0, 0}}));
}

std::string vector_string(const CenterElement& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.spectral().size(); ++i) s += (i ? ", " : "") + to_string(x[i]);
    return s + ")";
}

}  // namespace

std::vector<AxiomCheck> verify_extended_axioms(const GroupHandle& g) {
    std::vector<AxiomCheck> report;
    auto record = [&](std::string name, bool ok, std::string detail = {}) {
        report.push_back({std::move(name), ok, std::move(detail)});
    };
    const std::size_t C = g->class_count();
    TqftMap om = omega(g);
    TqftMap om2 = compose(om, om, {{0, 0}});
    record("omega is an involution", om2 == identity_map(g));

    CenterElement e = unit(g);
    record("omega fixes the unit", apply(om, e) == e);

    bool mult = true, pairing = true, u_fixed = true;
    CenterElement U = u_vector(g);
    for (std::size_t a = 0; a < C; ++a) {
        CenterElement x = from_class(g, a);
        CenterElement ox = apply(om, x);
        if (!(apply(om, multiply(x, U)) == multiply(x, U))) u_fixed = false;
        for (std::size_t b = 0; b < C; ++b) {
            CenterElement y = from_class(g, b);
            CenterElement oy = apply(om, y);
            if (!(apply(om, multiply(x, y)) == multiply(ox, oy))) mult = false;
            if (identity_coefficient(multiply(ox, oy)) != identity_coefficient(multiply(x, y))) pairing = false;
        }
    }
    record("omega is multiplicative", mult);
    record("omega preserves the pairing", pairing);
    record("omega(x * U) = x * U", u_fixed);

    // U * U against m((Omega (x) id) Delta), both as 0-in 1-out maps.
    TqftMap uu = compose(tensor(vector_map(U), vector_map(U)), product_map(g), {{0, 0}, {1, 1}});
    TqftMap twisted = compose(apply_omega(copairing_map(g), 0), product_map(g), {{0, 0}, {1, 1}});
    std::vector<Rational> expected(g->irrep_count(), Rational(0));
    for (std::size_t rho = 0; rho < g->irrep_count(); ++rho)
        if (g->is_symmetric_irrep(rho)) expected[rho] = pow(dim_ratio(*g, rho), -2);
    CenterElement expect(g, expected);
    bool uu_ok = as_vector(uu) == as_vector(twisted) && as_vector(uu) == expect;
    record("U * U = m((omega x id) Delta)", uu_ok,
           uu_ok ? "" : "U*U = " + vector_string(as_vector(uu)) + ", m((omega x id) Delta) = " +
                            vector_string(as_vector(twisted)));

    bool invariant = true;
    for (int genus = 0; genus <= 1; ++genus)
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n + m <= 3; ++n)
                for (int mask = 0; mask < (1 << (m + n)); ++mask) {
                    SurfaceDescriptor s{SurfaceKind::Doublet, genus, m, n, {}};
                    SurfaceDescriptor flipped = s;
                    for (int slot = 0; slot < m + n; ++slot) {
                        if (mask >> slot & 1)
                            s.marked.push_back(slot);
                        else
                            flipped.marked.push_back(slot);
                    }
                    if (!(z_map(g, s) == z_map(g, flipped))) invariant = false;
                }
    record("doublet maps are invariant under swapping the marking", invariant);
    return report;
}

FunctorialityReport verify_functoriality(const GroupHandle& g, const SurfaceDescriptor& s, char type, int h, int m1,
                                         int n1) {
    if (s.kind != SurfaceKind::ConnectedReal) throw ValidationError("functoriality is checked on connected Real surfaces");
    const int genus = s.genus, m = s.inputs, n = s.outputs;
    auto invalid = [&](const std::string& why) {
        throw ValidationError(std::string("invalid degeneration of type ") + type + ": " + why);
    };
    TqftMap original = z_map(g, s);
    auto real = [&](int gg, int in, int out) { return z_map(g, {SurfaceKind::ConnectedReal, gg, in, out, {}}); };
    std::optional<TqftMap> glued;
    switch (type) {
        case 'a':
        case 'b': {
            if (m1 < 0 || m1 > m || n1 < 0 || n1 > n) invalid("slot split out of range");
            int h2 = type == 'a' ? genus - h - 1 : (genus - h) / 2;
            if (h < 0 || h2 < 0 || (type == 'b' && (genus - h) % 2)) invalid("genus does not split");
            TqftMap first = real(h, m1, n1 + 1);
            TqftMap second = type == 'a' ? real(h2, 1 + m - m1, n - n1)
                                         : z_map(g, {SurfaceKind::Doublet, h2, 1 + m - m1, n - n1, {}});
            glued = compose(first, second, {{n1, 0}});
            break;
        }
        case 'c': {
            if (genus < 2) invalid("need g = h + 2");
            glued = trace(real(genus - 2, m + 1, n + 1), n, m);
            break;
        }
        case 'd': {
            if (genus % 2 == 0) invalid("need g = 2h + 1");
            SurfaceDescriptor piece{SurfaceKind::Doublet, (genus - 1) / 2, m + 1, n + 1, {m}};
            glued = trace(z_map(g, piece), n, m);
            break;
        }
        default:
            invalid("unknown type");
    }
    bool equal = *glued == original;
    return FunctorialityReport{equal, std::move(original), std::move(*glued)};
}

TqftMap glued_real_surface(const GroupHandle& g, int h, int k, int inputs, int outputs) {
    if (h < 0 || k < 0 || inputs < 0 || outputs < 0) throw ValidationError("invalid gluing data");
    TqftMap merged = classical(g, 0, inputs, 1);
    CenterElement w = multiply(power(u_vector(g), static_cast<unsigned>(k + 1)), power(kappa(g), static_cast<unsigned>(h)));
    TqftMap acted = compose(merged, multiplication_by(w), {{0, 0}});
    return compose(acted, classical(g, 0, 1, outputs), {{0, 0}});
}

}  // namespace realhurwitz
