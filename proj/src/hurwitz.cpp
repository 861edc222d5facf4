#include "realhurwitz/hurwitz.hpp"

#include <stdexcept>

namespace realhurwitz {

namespace {

void check_profiles(int d, const Profiles& profiles) {
    if (d < 0) throw ValidationError("degree must be non-negative");
    for (const auto& p : profiles)
        if (p.size() != d)
            throw ValidationError("profile " + to_string(p) + " is not a partition of " + std::to_string(d));
}

void check_genus(int g) {
    if (g < 0) throw ValidationError("genus must be non-negative");
}

void check_marking(const std::vector<int>& marking, std::size_t n) {
    std::vector<bool> seen(n, false);
    for (int i : marking) {
        if (i < 0 || static_cast<std::size_t>(i) >= n)
            throw ValidationError("marking index " + std::to_string(i + 1) + " outside the profile list");
        if (seen[i]) throw ValidationError("marking index " + std::to_string(i + 1) + " repeated");
        seen[i] = true;
    }
}

Rational product_of_f(const Profiles& profiles, const Partition& mu) {
    Rational p = 1;
    for (const auto& lambda : profiles) {
        p *= f_value(lambda, mu);
        if (p == 0) break;
    }
    return p;
}

Rational product_of_f(const GroupSpec& G, const ClassList& classes, std::size_t rho) {
    Rational p = 1;
    for (std::size_t c : classes) p *= G.f_value(c, rho);
    return p;
}

void check_classes(const GroupSpec& G, const ClassList& classes) {
    for (std::size_t c : classes)
        if (c >= G.class_count()) throw ValidationError("class index out of range");
}

}  // namespace

Rational complex_disconnected(int g, int d, const Profiles& profiles) {
    check_genus(g);
    check_profiles(d, profiles);
    Rational df(factorial(static_cast<unsigned>(d)));
    Rational sum = 0;
    for (const auto& mu : partitions_of(d)) {
        Rational f = product_of_f(profiles, mu);
        if (f != 0) sum += pow(Rational(dimension(mu)) / df, 2 - 2L * g) * f;
    }
    return sum;
}

Rational real_disconnected(int g, int d, const Profiles& profiles) {
    check_genus(g);
    check_profiles(d, profiles);
    Rational df(factorial(static_cast<unsigned>(d)));
    Rational sum = 0;
    for (const auto& mu : partitions_of(d)) {
        if (!is_symmetric(mu)) continue;
        Rational f = product_of_f(profiles, mu);
        if (f == 0) continue;
        Rational base = Rational(sfs_symmetric_closed(mu)) * Rational(dimension(mu)) / df;
        sum += pow(base, 1L - g) * f;
    }
    return sum;
}

Rational real_disconnected_operator_generic(const GroupHandle& G, int h, int k, const ClassList& classes) {
    if (h < 0 || k < 0) throw ValidationError("operator decomposition needs h >= 0 and k >= 0");
    check_classes(*G, classes);
    CenterElement x = multiply(power(kappa(G), static_cast<unsigned>(h)), power(ell(G), static_cast<unsigned>(k + 1)));
    for (std::size_t c : classes) x = multiply(x, from_class(G, c));
    return identity_coefficient(x) / Rational(G->order());
}

Rational real_disconnected_via_operator(int g, int d, const Profiles& profiles, std::optional<int> handles) {
    check_genus(g);
    check_profiles(d, profiles);
    int h = handles.value_or(0);
    int k = g - 2 * h;
    if (h < 0 || k < 0) throw ValidationError("no decomposition g = 2h + k with h = " + std::to_string(h));
    GroupHandle G = symmetric_group(d);
    ClassList classes;
    for (const auto& p : profiles) classes.push_back(G->class_index(to_string(p)));
    return real_disconnected_operator_generic(G, h, k, classes);
}

Rational doublet(int g, int d, const Profiles& profiles, const std::vector<int>& marking, bool connected) {
    check_marking(marking, profiles.size());
    Rational value = connected ? complex_connected(g, d, profiles) : complex_disconnected(g, d, profiles);
    for (int i : marking) value *= parity_sign(profiles[i]);
    return value;
}

Rational complex_disconnected_generic(const GroupHandle& G, int g, const ClassList& classes) {
    check_genus(g);
    check_classes(*G, classes);
    Rational sum = 0;
    for (std::size_t rho = 0; rho < G->irrep_count(); ++rho) {
        Rational f = product_of_f(*G, classes, rho);
        if (f != 0) sum += pow(Rational(G->dim(rho)) / Rational(G->order()), 2 - 2L * g) * f;
    }
    return sum;
}

Rational real_disconnected_generic(const GroupHandle& G, int g, const ClassList& classes) {
    check_genus(g);
    check_classes(*G, classes);
    Rational sum = 0;
    for (std::size_t rho = 0; rho < G->irrep_count(); ++rho) {
        if (!G->is_symmetric_irrep(rho)) continue;
        Rational sfs = sfs_indicator(G->irreducibles()[rho].character, *G);
        if (sfs == 0)
            throw std::logic_error("symmetric irreducible '" + G->irreducibles()[rho].id + "' with vanishing SFS");
        Rational f = product_of_f(*G, classes, rho);
        if (f != 0) sum += pow(sfs * Rational(G->dim(rho)) / Rational(G->order()), 1L - g) * f;
    }
    return sum;
}

Rational doublet_generic(const GroupHandle& G, int g, const ClassList& classes, const std::vector<int>& marking) {
    check_marking(marking, classes.size());
    Rational value = complex_disconnected_generic(G, g, classes);
    for (int i : marking) value *= G->epsilon(classes[i]);
    return value;
}

namespace {

// Every choice of sub-multisets of the profiles that all have size s.
void sub_profiles(const Profiles& profiles, std::size_t i, int s, Profiles& current,
                  const std::function<void(const Profiles&)>& visit) {
    if (i == profiles.size()) {
        visit(current);
        return;
    }
    for (const auto& sub : submultisets(profiles[i])) {
        if (sub.size() != s) continue;
        current.push_back(sub);
        sub_profiles(profiles, i + 1, s, current, visit);
        current.pop_back();
    }
}

}  // namespace

MultiSeries disconnected_series(int d, const Profiles& profiles, int insertions, const DisconnectedEvaluator& eval) {
    if (insertions < 0 || insertions > 31) throw ValidationError("unsupported number of insertions");
    Monomial ceiling{d, profiles, static_cast<std::uint32_t>((1u << insertions) - 1u)};
    MultiSeries series(ceiling);
    for (int s = 0; s <= d; ++s) {
        Profiles current;
        sub_profiles(profiles, 0, s, current, [&](const Profiles& sub) {
            for (std::uint32_t mask = 0; mask <= ceiling.insertions; ++mask) {
                if (mask & ~ceiling.insertions) continue;
                series.add(Monomial{s, sub, mask}, eval(s, sub, mask));
            }
        });
    }
    return series;
}

Rational connected_from_disconnected(int d, const Profiles& profiles, int insertions, const DisconnectedEvaluator& eval) {
    MultiSeries series = disconnected_series(d, profiles, insertions, eval);
    return series_log(series).coefficient(series.ceiling());
}

Rational complex_connected(int g, int d, const Profiles& profiles) {
    check_genus(g);
    check_profiles(d, profiles);
    return connected_from_disconnected(d, profiles, 0, [g](int s, const Profiles& sub, std::uint32_t) {
        return complex_disconnected(g, s, sub);
    });
}

Rational real_connected(int g, int d, const Profiles& profiles) {
    check_genus(g);
    check_profiles(d, profiles);
    return connected_from_disconnected(d, profiles, 0, [g](int s, const Profiles& sub, std::uint32_t) {
        return real_disconnected(g, s, sub);
    });
}

Rational doublet_contribution_with(int g, int d, const Profiles& profiles, const std::vector<int>& choice,
                                   const ConnectedComplex& connected) {
    check_genus(g);
    check_profiles(d, profiles);
    if (d % 2) throw ValidationError("doublet contribution needs an even degree");
    if (!choice.empty() && choice.size() != profiles.size())
        throw ValidationError("choice function must have one entry per profile");
    for (int c : choice)
        if (c != 1 && c != -1) throw ValidationError("choice function values must be +1 or -1");
    const int half = d / 2;
    const std::size_t n = profiles.size();

    std::vector<std::vector<std::pair<Partition, Partition>>> options(n);
    for (std::size_t i = 0; i < n; ++i)
        for (auto& [plus, minus] : splittings(profiles[i]))
            if (plus.size() == half) options[i].emplace_back(plus, minus);

    Rational sum = 0;
    Profiles branches(2 * n);
    auto visit = [&](auto&& self, std::size_t i, int sign) -> void {
        if (i == n) {
            sum += Rational(sign) * connected(half, branches);
            return;
        }
        for (const auto& [plus, minus] : options[i]) {
            branches[i] = plus;
            branches[n + i] = minus;
            bool take_plus = choice.empty() || choice[i] == 1;
            self(self, i + 1, sign * parity_sign(take_plus ? plus : minus));
        }
    };
    visit(visit, 0, 1);
    return Rational(sign_power(static_cast<long>(half) * (g - 1)), 2) * sum;
}

Rational doublet_contribution(int g, int d, const Profiles& profiles, const std::vector<int>& choice) {
    return doublet_contribution_with(g, d, profiles, choice, [g](int s, const Profiles& branches) {
        return complex_connected(g, s, branches);
    });
}

Rational connected_surface_contribution(int g, int d, const Profiles& profiles) {
    Rational real = real_connected(g, d, profiles);
    if (d % 2) return real;
    return real - doublet_contribution(g, d, profiles);
}

DegenerationReport check_degeneration(char type, const GroupHandle& G, int g, int h, const ClassList& first,
                                      const ClassList& second) {
    check_genus(g);
    check_classes(*G, first);
    check_classes(*G, second);
    auto invalid = [&](const std::string& why) {
        throw ValidationError(std::string("invalid genus splitting for degeneration type ") + type + ": " + why);
    };
    DegenerationReport report;
    report.type = type;
    auto concat = [](ClassList a, const ClassList& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    switch (type) {
        case 'a': {
            int h2 = g - h - 1;
            if (h < 0 || h2 < 0) invalid("need g = h + h' + 1 with h, h' >= 0");
            report.lhs = real_disconnected_generic(G, g, concat(first, second));
            for (std::size_t x = 0; x < G->class_count(); ++x)
                report.rhs += G->z(x) * real_disconnected_generic(G, h, concat(first, {x})) *
                              real_disconnected_generic(G, h2, concat({x}, second));
            break;
        }
        case 'b': {
            if (h < 0 || h > g || (g - h) % 2) invalid("need g = h + 2h' with h, h' >= 0");
            int h2 = (g - h) / 2;
            report.lhs = real_disconnected_generic(G, g, concat(first, second));
            for (std::size_t x = 0; x < G->class_count(); ++x)
                report.rhs += G->z(x) * real_disconnected_generic(G, h, concat(first, {x})) *
                              complex_disconnected_generic(G, h2, concat({x}, second));
            break;
        }
        case 'c': {
            if (g < 2) invalid("need g = h + 2 with h >= 0");
            if (!second.empty()) invalid("type c takes a single class list");
            report.lhs = real_disconnected_generic(G, g, first);
            for (std::size_t x = 0; x < G->class_count(); ++x)
                report.rhs += G->z(x) * real_disconnected_generic(G, g - 2, concat(first, {x, x}));
            break;
        }
        case 'd': {
            if (g % 2 == 0) invalid("need g = 2h + 1");
            if (!second.empty()) invalid("type d takes a single class list");
            report.lhs = real_disconnected_generic(G, g, first);
            for (std::size_t x = 0; x < G->class_count(); ++x)
                report.rhs += Rational(G->epsilon(x)) * G->z(x) *
                              complex_disconnected_generic(G, (g - 1) / 2, concat(first, {x, x}));
            break;
        }
        default:
            throw ValidationError(std::string("unknown degeneration type '") + type + "'");
    }
    report.equal = report.lhs == report.rhs;
    return report;
}

IdentityReport symmetric_diagram_identity(int d) {
    if (d < 0) throw ValidationError("degree must be non-negative");
    IdentityReport r{0, 0, false};
    for (const auto& lambda : partitions_of(d)) {
        if (is_symmetric(lambda)) r.lhs += 1;
        r.rhs += parity_sign(lambda);
    }
    r.equal = r.lhs == r.rhs;
    return r;
}

}  // namespace realhurwitz
