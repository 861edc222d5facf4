#include "realhurwitz/verify.hpp"

#include "realhurwitz/completed.hpp"
#include "realhurwitz/frobenius.hpp"
#include "realhurwitz/hurwitz.hpp"
#include "realhurwitz/symgrp.hpp"

#include <functional>

namespace realhurwitz {

void CheckLine::expect(const std::string& case_label, const Rational& left, const Rational& right) {
    expect(case_label, left == right, to_string(left), to_string(right));
}

void CheckLine::expect(const std::string& case_label, bool ok, const std::string& left, const std::string& right) {
    ++cases;
    if (ok || !passed) {
        if (!ok) passed = false;
        return;
    }
    passed = false;
    failing_case = case_label;
    lhs = left;
    rhs = right;
}

std::string format_line(const CheckLine& line) {
    std::string s = (line.passed ? "PASS " : "FAIL ") + line.name + " (" + std::to_string(line.cases) + " cases)";
    if (!line.passed) {
        s += ": " + line.failing_case;
        if (!line.lhs.empty() || !line.rhs.empty()) s += " lhs=" + line.lhs + " rhs=" + line.rhs;
    }
    return s;
}

bool all_passed(const std::vector<CheckLine>& lines) {
    for (const auto& l : lines)
        if (!l.passed) return false;
    return true;
}

namespace {

std::string class_list_label(const GroupSpec& G, const ClassList& cls) {
    std::string s = "(";
    for (std::size_t i = 0; i < cls.size(); ++i) s += (i ? ";" : "") + G.classes()[cls[i]].id;
    return s + ")";
}

// Ordered lists of class indices with at most max_len entries.
std::vector<ClassList> class_lists(std::size_t classes, std::size_t max_len) {
    std::vector<ClassList> out{{}};
    std::vector<ClassList> frontier{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<ClassList> next;
        for (const auto& l : frontier)
            for (std::size_t c = 0; c < classes; ++c) {
                ClassList e = l;
                e.push_back(c);
                next.push_back(e);
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

// Profile lists up to reordering: nondecreasing index sequences.
std::vector<Profiles> profile_multisets(int d, std::size_t max_len) {
    auto parts = partitions_of(d);
    std::vector<Profiles> out;
    std::function<void(std::size_t, Profiles&)> rec = [&](std::size_t start, Profiles& cur) {
        out.push_back(cur);
        if (cur.size() == max_len) return;
        for (std::size_t i = start; i < parts.size(); ++i) {
            cur.push_back(parts[i]);
            rec(i, cur);
            cur.pop_back();
        }
    };
    Profiles cur;
    rec(0, cur);
    return out;
}

std::string profiles_label(const Profiles& ps) {
    std::string s = "(";
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ";" : "") + to_string(ps[i]);
    return s + ")";
}

}  // namespace

std::vector<CheckLine> verify_degeneration_suite(int max_degree, int max_genus) {
    CheckLine a{"degeneration (a) Real-Real"}, b{"degeneration (b) Real-Complex"}, c{"degeneration (c) Real"},
        dd{"degeneration (d) Complex"};
    for (int d = 1; d <= max_degree; ++d) {
        GroupHandle G = symmetric_group(d);
        for (const auto& list : class_lists(G->class_count(), 2)) {
            for (std::size_t split = 0; split <= list.size(); ++split) {
                ClassList first(list.begin(), list.begin() + split), second(list.begin() + split, list.end());
                std::string where = "d=" + std::to_string(d) + " c=" + class_list_label(*G, first) + "|" +
                                    class_list_label(*G, second);
                for (int g = 0; g <= max_genus; ++g)
                    for (int h = 0; h <= g; ++h) {
                        std::string label = where + " g=" + std::to_string(g) + " h=" + std::to_string(h);
                        if (h <= g - 1) {
                            auto r = check_degeneration('a', G, g, h, first, second);
                            a.expect(label, r.lhs, r.rhs);
                        }
                        if ((g - h) % 2 == 0) {
                            auto r = check_degeneration('b', G, g, h, first, second);
                            b.expect(label, r.lhs, r.rhs);
                        }
                    }
            }
            std::string where = "d=" + std::to_string(d) + " c=" + class_list_label(*G, list);
            for (int g = 0; g <= max_genus; ++g) {
                if (g >= 2) {
                    auto r = check_degeneration('c', G, g, 0, list);
                    c.expect(where + " g=" + std::to_string(g), r.lhs, r.rhs);
                }
                if (g % 2 == 1) {
                    auto r = check_degeneration('d', G, g, 0, list);
                    dd.expect(where + " g=" + std::to_string(g), r.lhs, r.rhs);
                }
            }
        }
    }
    return {a, b, c, dd};
}

std::vector<CheckLine> verify_oracle_suite(int max_degree, int max_genus) {
    CheckLine oracle{"Real oracle = closed formula"}, op{"operator product = closed formula"},
        connected{"transitive Real oracle = log of closed formula"}, cx{"Complex oracle = closed formula"};
    for (int d = 1; d <= max_degree; ++d)
        for (const auto& ps : profile_multisets(d, 2))
            for (int g = 0; g <= max_genus; ++g) {
                Rational formula = real_disconnected(g, d, ps);
                for (int h = 0; 2 * h <= g; ++h) {
                    int k = g - 2 * h;
                    std::string label = "d=" + std::to_string(d) + " g=" + std::to_string(g) + " (h,k)=(" +
                                        std::to_string(h) + "," + std::to_string(k) + ") " + profiles_label(ps);
                    OracleQuery q;
                    q.handles = h;
                    q.crosscaps = k + 1;
                    q.degree = d;
                    q.profiles = ps;
                    oracle.expect(label, oracle_real_disconnected(q), formula);
                    op.expect(label, real_disconnected_via_operator(g, d, ps, h), formula);
                    if (h == 0) connected.expect(label, oracle_real_connected(q), real_connected(g, d, ps));
                }
                std::string label = "d=" + std::to_string(d) + " g=" + std::to_string(g) + " " + profiles_label(ps);
                cx.expect(label, oracle_complex_disconnected(g, d, ps), complex_disconnected(g, d, ps));
            }
    return {oracle, op, connected, cx};
}

std::vector<CheckLine> verify_sfs_suite(int max_degree) {
    CheckLine closed{"SFS equals the closed self-conjugate formula"}, relation{"SFS + FS_G = FS_H"},
        vanish{"symmetric characters vanish on odd classes"}, annihilate{"L c = 0 for odd classes"};
    for (int d = 0; d <= max_degree; ++d) {
        GroupHandle G = symmetric_group(d);
        SymCharTable t = sym_char_table(d);
        for (std::size_t mu = 0; mu < t.size(); ++mu) {
            const Partition& shape = t.partitions()[mu];
            std::string label = "mu=" + to_string(shape);
            auto row = t.row(mu);
            closed.expect(label, sfs_indicator(row, t), Rational(sfs_symmetric_closed(shape)));
            std::size_t rho = G->find_irrep(to_string(shape)).value();
            auto grow = G->row(rho);
            relation.expect(label, sfs_indicator(grow, *G) + fs_indicator(grow, *G), fs_kernel_indicator(grow, *G));
            if (is_symmetric(shape))
                for (std::size_t c = 0; c < t.size(); ++c)
                    if (parity_sign(t.partitions()[c]) == -1)
                        vanish.expect(label + " class=" + to_string(t.partitions()[c]), t(mu, c) == 0,
                                      std::to_string(t(mu, c)), "0");
        }
        CenterElement L = ell(G);
        CenterElement zero(G, std::vector<Rational>(G->irrep_count(), Rational(0)));
        for (std::size_t c = 0; c < G->class_count(); ++c)
            if (G->epsilon(c) == -1)
                annihilate.expect("d=" + std::to_string(d) + " class=" + G->classes()[c].id,
                                  multiply(L, from_class(G, c)) == zero);
    }
    return {closed, relation, vanish, annihilate};
}

std::vector<CheckLine> verify_frobenius_suite(int max_degree) {
    std::vector<CheckLine> axioms;
    CheckLine functorial{"functoriality under degenerations (a)-(d)"},
        gluing{"gluing invariance of connected Real surfaces"},
        closed{"class-basis coefficients of Real surfaces = z-weighted Real Hurwitz numbers"},
        genus_one{"two degenerations of the genus-1 Real surface agree"};
    for (int d = 2; d <= max_degree; ++d) {
        GroupHandle G = symmetric_group(d);
        std::string dl = "d=" + std::to_string(d);
        for (const auto& check : verify_extended_axioms(G)) {
            auto it = std::find_if(axioms.begin(), axioms.end(), [&](const CheckLine& l) { return l.name == check.name; });
            if (it == axioms.end()) {
                axioms.push_back(CheckLine{check.name});
                it = axioms.end() - 1;
            }
            it->expect(dl, check.passed, check.detail);
        }

        for (int g = 0; g <= 3; ++g)
            for (int m = 0; m <= 2; ++m)
                for (int n = 0; m + n <= 2; ++n) {
                    SurfaceDescriptor s{SurfaceKind::ConnectedReal, g, m, n, {}};
                    std::string label = dl + " g=" + std::to_string(g) + " m=" + std::to_string(m) + " n=" +
                                        std::to_string(n);
                    for (int h = 0; h <= g; ++h)
                        for (int m1 = 0; m1 <= m; ++m1)
                            for (int n1 = 0; n1 <= n; ++n1) {
                                std::string sub = label + " h=" + std::to_string(h) + " split=" +
                                                  std::to_string(m1) + "," + std::to_string(n1);
                                if (h <= g - 1)
                                    functorial.expect("(a) " + sub, verify_functoriality(G, s, 'a', h, m1, n1).equal);
                                if ((g - h) % 2 == 0)
                                    functorial.expect("(b) " + sub, verify_functoriality(G, s, 'b', h, m1, n1).equal);
                            }
                    if (g >= 2) functorial.expect("(c) " + label, verify_functoriality(G, s, 'c').equal);
                    if (g % 2 == 1) functorial.expect("(d) " + label, verify_functoriality(G, s, 'd').equal);
                }

        SurfaceDescriptor torus{SurfaceKind::ConnectedReal, 1, 0, 0, {}};
        auto via_a = verify_functoriality(G, torus, 'a', 0);
        auto via_d = verify_functoriality(G, torus, 'd');
        genus_one.expect(dl, via_a.glued == via_d.glued && via_a.equal && via_d.equal);

        for (int g = 0; g <= 2; ++g)
            for (int m = 0; m <= 3; ++m)
                for (int n = 0; m + n <= 3; ++n) {
                    TqftMap expected = z_map(G, {SurfaceKind::ConnectedReal, g, m, n, {}});
                    for (int h = 0; 2 * h <= g; ++h)
                        gluing.expect(dl + " g=" + std::to_string(g) + " m=" + std::to_string(m) + " n=" +
                                          std::to_string(n) + " h=" + std::to_string(h),
                                      glued_real_surface(G, h, g - 2 * h, m, n) == expected);
                }

        for (int g = 0; g <= 2; ++g)
            for (int n = 0; n <= 2; ++n) {
                auto coeffs = to_class_basis(z_map(G, {SurfaceKind::ConnectedReal, g, 0, n, {}}));
                for (const auto& cls : class_lists(G->class_count(), n)) {
                    if (static_cast<int>(cls.size()) != n) continue;
                    Rational rhs = real_disconnected_generic(G, g, cls);
                    for (std::size_t c : cls) rhs *= G->z(c);
                    auto it = coeffs.find(cls);
                    Rational lhs = it == coeffs.end() ? Rational(0) : it->second;
                    closed.expect(dl + " g=" + std::to_string(g) + " c=" + class_list_label(*G, cls), lhs, rhs);
                }
            }
    }
    axioms.push_back(functorial);
    axioms.push_back(genus_one);
    axioms.push_back(gluing);
    axioms.push_back(closed);
    return axioms;
}

std::vector<CheckLine> verify_completed_suite(int max_k, int max_size) {
    CheckLine defining{"completed cycles satisfy their defining identity"},
        parity{"q_{k,nu} vanishes unless eps(nu) = (-1)^{k-1}"}, empty{"q_{k,()} = (k-1)! c_{k+1}"},
        antisym{"p_k^*(mu^T) = (-1)^{k-1} p_k^*(mu)"}, fsym{"f_nu(mu^T) = eps(nu) f_nu(mu)"},
        odd{"odd coefficients of 1/S vanish"};
    RatSeries c = s_inverse_coeffs(max_k + 2);
    for (int n = 1; n <= c.order; n += 2) odd.expect("n=" + std::to_string(n), c.coeffs[n], Rational(0));
    for (int k = 1; k <= max_k; ++k) {
        std::string kl = "k=" + std::to_string(k);
        try {
            CompletedCycle cc = completed_cycle(k);
            defining.expect(kl, true);
            for (const auto& [nu, q] : cc.coefficients)
                parity.expect(kl + " nu=" + to_paren_string(nu), parity_sign(nu) == sign_power(k - 1), to_string(q),
                              "0");
            empty.expect(kl, cc.q(Partition{}),
                         Rational(factorial(static_cast<unsigned>(k - 1))) * c.coeffs[k + 1]);
        } catch (const std::logic_error& e) {
            defining.expect(kl + ": " + e.what(), false);
        }
        for (int s = 0; s <= max_size; ++s)
            for (const auto& mu : partitions_of(s))
                antisym.expect(kl + " mu=" + to_paren_string(mu), p_star(k, transpose(mu)),
                               Rational(sign_power(k - 1)) * p_star(k, mu));
    }
    for (int s = 0; s <= 6; ++s)
        for (const auto& mu : partitions_of(s))
            for (int r = 0; r <= s; ++r)
                for (const auto& nu : partitions_of(r))
                    fsym.expect("nu=" + to_paren_string(nu) + " mu=" + to_paren_string(mu),
                                f_extended(nu, transpose(mu)), Rational(parity_sign(nu)) * f_extended(nu, mu));
    return {defining, parity, empty, antisym, fsym, odd};
}

}  // namespace realhurwitz
