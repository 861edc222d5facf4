#include "realhurwitz/realsign.hpp"

namespace realhurwitz {

BoundaryMonodromy::BoundaryMonodromy(Permutation eps, Permutation tau) : eps_(std::move(eps)), tau_(std::move(tau)) {
    if (eps_.degree() != tau_.degree()) throw ValidationError("eps and tau act on fibers of different sizes");
    if (!(tau_ * tau_).is_identity()) throw ValidationError("tau is not an involution");
    if (!(eps_ * tau_ == tau_ * eps_)) throw ValidationError("eps and tau do not commute");
}

LocalInvariants decompose(const BoundaryMonodromy& bm) {
    const int d = bm.degree();
    const Permutation& eps = bm.eps();
    const Permutation& tau = bm.tau();
    LocalInvariants inv;
    inv.m.assign(d + 1, 0);
    inv.k.assign(d + 1, 0);
    inv.a.assign(d + 1, 0);
    inv.b.assign(d + 1, 0);

    std::vector<int> cycle_of(d, -1);
    std::vector<std::vector<int>> cycles;
    for (int x = 0; x < d; ++x) {
        if (cycle_of[x] >= 0) continue;
        std::vector<int> c;
        for (int y = x; cycle_of[y] < 0; y = eps(y)) {
            cycle_of[y] = static_cast<int>(cycles.size());
            c.push_back(y);
        }
        cycles.push_back(std::move(c));
    }
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        const auto& cyc = cycles[c];
        int len = static_cast<int>(cyc.size());
        ++inv.m[len];
        int image = cycle_of[tau(cyc[0])];
        if (image != static_cast<int>(c)) {
            if (image > static_cast<int>(c)) ++inv.k[len];
            continue;
        }
        // tau commutes with eps on this cycle, so it is a rotation eps^j.
        int j = 0;
        while (cyc[j] != tau(cyc[0])) ++j;
        if (j == 0)
            ++inv.a[len];
        else
            ++inv.b[len];  // 2j = len since tau^2 = id
    }
    return inv;
}

int local_sign(const LocalInvariants& inv) {
    long e = 0;
    for (std::size_t i = 1; i < inv.k.size(); ++i) {
        e += inv.k[i];
        if (i % 2 == 0) e += inv.b[i];
    }
    return sign_power(e);
}

int local_sign(const BoundaryMonodromy& bm) { return local_sign(decompose(bm)); }

bool is_contributing(const LocalInvariants& inv) {
    for (std::size_t i = 1; i < inv.a.size(); ++i) {
        if (i % 2 == 0 && inv.a[i] != 0) return false;
        if (inv.b[i] != 0) return false;
    }
    return true;
}

bool is_contributing(const BoundaryMonodromy& bm) { return is_contributing(decompose(bm)); }

int compose_global_sign(int base_sign, const std::vector<int>& locals) {
    if (base_sign != 1 && base_sign != -1) throw ValidationError("signs must be +1 or -1");
    int s = base_sign;
    for (int l : locals) {
        if (l != 1 && l != -1) throw ValidationError("signs must be +1 or -1");
        s *= l;
    }
    return s;
}

int compose_global_sign(int base_sign, const std::vector<BoundaryMonodromy>& pieces) {
    std::vector<int> locals;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        LocalInvariants inv = decompose(pieces[i]);
        if (!is_contributing(inv))
            throw ValidationError("local piece " + std::to_string(i + 1) +
                                  " is not contributing; its sign depends on the marking");
        locals.push_back(local_sign(inv));
    }
    return compose_global_sign(base_sign, locals);
}

BoundaryMonodromy disjoint_union(const BoundaryMonodromy& x, const BoundaryMonodromy& y) {
    int d1 = x.degree();
    auto join = [d1](const Permutation& p, const Permutation& q) {
        std::vector<int> image(p.image());
        for (int v : q.image()) image.push_back(v + d1);
        return Permutation(std::move(image));
    };
    return BoundaryMonodromy(join(x.eps(), y.eps()), join(x.tau(), y.tau()));
}

Rational aggregate_local_signs(const Partition& eta, bool contributing_only) {
    const int d = eta.size();
    auto all = all_permutations(d);
    std::vector<const Permutation*> involutions;
    for (const auto& p : all)
        if ((p * p).is_identity()) involutions.push_back(&p);
    long total = 0;
    for (const auto& e : all) {
        if (cycle_type(e) != eta) continue;
        for (const Permutation* t : involutions) {
            if (!(e * *t == *t * e)) continue;
            LocalInvariants inv = decompose(BoundaryMonodromy(e, *t));
            if (contributing_only && !is_contributing(inv)) continue;
            total += local_sign(inv);
        }
    }
    return Rational(total) / Rational(factorial(static_cast<unsigned>(d)));
}

}  // namespace realhurwitz
