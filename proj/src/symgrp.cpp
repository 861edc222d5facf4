#include "realhurwitz/symgrp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace realhurwitz {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
        if (v < 0 || v >= degree() || seen[v]) throw ValidationError("image is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int d) {
    std::vector<int> image(d);
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
}

Permutation Permutation::parse_cycles(std::string_view text, int d) {
    std::vector<int> image(d);
    std::iota(image.begin(), image.end(), 0);
    std::vector<bool> used(d, false);
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    skip_space();
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '(' in cycle notation: '" + std::string(text) + "'");
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip_space();
            if (i >= text.size()) throw ParseError("unterminated cycle in '" + std::string(text) + "'");
            if (text[i] == ')') {
                ++i;
                break;
            }
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw ParseError("invalid character in cycle notation: '" + std::string(text) + "'");
            int v = std::stoi(std::string(text.substr(start, i - start)));
            if (v < 1 || v > d) throw ParseError("point " + std::to_string(v) + " outside 1.." + std::to_string(d));
            if (used[v - 1]) throw ParseError("point " + std::to_string(v) + " repeated in cycle notation");
            used[v - 1] = true;
            cycle.push_back(v - 1);
            skip_space();
            if (i < text.size() && text[i] == ',') ++i;
        }
        for (std::size_t j = 0; j < cycle.size(); ++j) image[cycle[j]] = cycle[(j + 1) % cycle.size()];
        skip_space();
    }
    return Permutation(std::move(image));
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (other.degree() != degree()) throw std::invalid_argument("composing permutations of different degrees");
    std::vector<int> image(image_.size());
    for (std::size_t x = 0; x < image.size(); ++x) image[x] = image_[other.image_[x]];
    Permutation p;
    p.image_ = std::move(image);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> image(image_.size());
    for (std::size_t x = 0; x < image.size(); ++x) image[image_[x]] = static_cast<int>(x);
    Permutation p;
    p.image_ = std::move(image);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t x = 0; x < image_.size(); ++x)
        if (image_[x] != static_cast<int>(x)) return false;
    return true;
}

std::string Permutation::to_cycle_string() const {
    std::string out;
    std::vector<bool> seen(image_.size(), false);
    for (int x = 0; x < degree(); ++x) {
        if (seen[x] || image_[x] == x) continue;
        out += '(';
        int y = x;
        do {
            if (y != x) out += ' ';
            out += std::to_string(y + 1);
            seen[y] = true;
            y = image_[y];
        } while (y != x);
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Partition cycle_type(const Permutation& s) {
    std::vector<int> lengths;
    std::vector<bool> seen(s.degree(), false);
    for (int x = 0; x < s.degree(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        for (int y = x; !seen[y]; y = s(y)) {
            seen[y] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition(std::move(lengths));
}

int sign(const Permutation& s) { return parity_sign(cycle_type(s)); }

std::vector<Permutation> all_permutations(int d) {
    std::vector<Permutation> out;
    std::vector<int> image(d);
    std::iota(image.begin(), image.end(), 0);
    do {
        out.emplace_back(image);
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

std::vector<Permutation> class_members(const Partition& lambda) {
    std::vector<Permutation> out;
    for (auto& p : all_permutations(lambda.size()))
        if (cycle_type(p) == lambda) out.push_back(std::move(p));
    return out;
}

Rational OracleResult::value() const { return Rational(positive - negative) / Rational(group_order); }
Rational OracleResult::positive_part() const { return Rational(positive) / Rational(group_order); }
Rational OracleResult::negative_part() const { return Rational(negative) / Rational(group_order); }

namespace {

// S_d with elements numbered by position in all_permutations(d).
struct ElementTable {
    int d = 0;
    std::vector<Permutation> elems;
    std::map<std::vector<int>, int> rank;
    std::vector<int> inv, square, eps, cls;
    std::vector<Partition> types;
    std::vector<int> table;  // n*n products when small

    explicit ElementTable(int degree) : d(degree), elems(all_permutations(degree)) {
        int n = static_cast<int>(elems.size());
        for (int i = 0; i < n; ++i) rank.emplace(elems[i].image(), i);
        for (int i = 0; i < n; ++i) {
            inv.push_back(index(elems[i].inverse()));
            square.push_back(index(elems[i] * elems[i]));
            Partition t = cycle_type(elems[i]);
            eps.push_back(parity_sign(t));
            auto it = std::find(types.begin(), types.end(), t);
            if (it == types.end()) {
                cls.push_back(static_cast<int>(types.size()));
                types.push_back(t);
            } else {
                cls.push_back(static_cast<int>(it - types.begin()));
            }
        }
        if (d <= 6) {
            table.resize(static_cast<std::size_t>(n) * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = index(elems[i] * elems[j]);
        }
    }

    int size() const { return static_cast<int>(elems.size()); }
    int index(const Permutation& p) const { return rank.at(p.image()); }
    int mul(int a, int b) const {
        if (!table.empty()) return table[static_cast<std::size_t>(a) * elems.size() + b];
        return index(elems[a] * elems[b]);
    }
    int class_of(const Partition& t) const {
        auto it = std::find(types.begin(), types.end(), t);
        return it == types.end() ? -1 : static_cast<int>(it - types.begin());
    }
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

enum class Slot { Alpha, Beta, Gamma, Delta };

struct Enumerator {
    const ElementTable& G;
    const OracleQuery& q;
    std::vector<Slot> slots;
    std::vector<int> delta_profile;           // profile index for each Delta slot
    std::vector<std::vector<int>> members;    // members of each profile class
    int last_class = -1;                      // class of the solved-for last profile
    int twist = 1;

    Enumerator(const ElementTable& g, const OracleQuery& query) : G(g), q(query) {
        for (int i = 0; i < q.handles; ++i) {
            slots.push_back(Slot::Alpha);
            slots.push_back(Slot::Beta);
        }
        for (int i = 0; i < q.crosscaps; ++i) slots.push_back(Slot::Gamma);
        int n = static_cast<int>(q.profiles.size());
        for (int i = 0; i < n; ++i) {
            int c = G.class_of(q.profiles[i]);
            std::vector<int> m;
            for (int e = 0; e < G.size(); ++e)
                if (G.cls[e] == c) m.push_back(e);
            members.push_back(std::move(m));
            if (q.twist_mask >> i & 1u) twist *= parity_sign(q.profiles[i]);
        }
        for (int i = 0; i + 1 < n; ++i) {
            slots.push_back(Slot::Delta);
            delta_profile.push_back(i);
        }
        if (n > 0) last_class = G.class_of(q.profiles.back());
    }

    struct Counts {
        std::uint64_t pos = 0, neg = 0;
    };

    bool transitive(const std::vector<int>& chosen, int extra) const {
        if (G.d == 0) return false;
        UnionFind uf(G.d);
        auto absorb = [&](int e) {
            const auto& p = G.elems[e];
            for (int x = 0; x < G.d; ++x) uf.unite(x, p(x));
        };
        for (int e : chosen) absorb(e);
        if (extra >= 0) absorb(extra);
        int root = uf.find(0);
        for (int x = 1; x < G.d; ++x)
            if (uf.find(x) != root) return false;
        return true;
    }

    void leaf(int L, int R, int sgn, std::vector<int>& chosen, Counts& out) const {
        int last = -1;
        if (!q.profiles.empty()) {
            last = G.mul(G.inv[R], L);
            if (G.cls[last] != last_class) return;
        } else if (L != R) {
            return;
        }
        if (q.transitive_only && !transitive(chosen, last)) return;
        if (sgn * twist > 0)
            ++out.pos;
        else
            ++out.neg;
    }

    void recurse(std::size_t slot, int L, int R, int sgn, std::vector<int>& chosen, Counts& out,
                 int first_stride = 1, int first_offset = 0) const {
        if (slot == slots.size()) {
            leaf(L, R, sgn, chosen, out);
            return;
        }
        auto candidates = [&](auto&& body) {
            if (slots[slot] == Slot::Delta) {
                const auto& m = members[delta_profile[slot - (slots.size() - delta_profile.size())]];
                for (std::size_t i = first_offset; i < m.size(); i += first_stride) body(m[i]);
            } else {
                for (int e = first_offset; e < G.size(); e += first_stride) body(e);
            }
        };
        switch (slots[slot]) {
            case Slot::Alpha:
                candidates([&](int a) {
                    chosen.push_back(a);
                    recurse(slot + 1, L, R, sgn, chosen, out);
                    chosen.pop_back();
                });
                break;
            case Slot::Beta: {
                int a = chosen.back();
                candidates([&](int b) {
                    int comm = G.mul(G.mul(a, b), G.mul(G.inv[a], G.inv[b]));
                    chosen.push_back(b);
                    recurse(slot + 1, G.mul(L, comm), R, sgn, chosen, out);
                    chosen.pop_back();
                });
                break;
            }
            case Slot::Gamma:
                candidates([&](int c) {
                    chosen.push_back(c);
                    recurse(slot + 1, L, G.mul(R, G.square[c]), sgn * G.eps[c], chosen, out);
                    chosen.pop_back();
                });
                break;
            case Slot::Delta:
                candidates([&](int c) {
                    chosen.push_back(c);
                    recurse(slot + 1, L, G.mul(R, c), sgn, chosen, out);
                    chosen.pop_back();
                });
                break;
        }
    }
};

double class_size_double(const Partition& lambda) {
    double z = 1;
    for (int v = 1; v <= lambda.size(); ++v) {
        int m = lambda.multiplicity(v);
        z *= std::pow(v, m) * std::tgamma(m + 1.0);
    }
    return std::tgamma(lambda.size() + 1.0) / z;
}

}  // namespace

double oracle_search_size(const OracleQuery& q) {
    double n = std::tgamma(q.degree + 1.0);
    double size = std::pow(n, 2.0 * q.handles + q.crosscaps);
    for (std::size_t i = 0; i + 1 < q.profiles.size(); ++i) size *= class_size_double(q.profiles[i]);
    return size;
}

OracleResult oracle_count(const OracleQuery& q) {
    if (q.handles < 0 || q.crosscaps < 0 || q.degree < 0) throw ValidationError("negative oracle parameter");
    for (const auto& p : q.profiles)
        if (p.size() != q.degree) throw ValidationError("profile " + to_string(p) + " is not a partition of " +
                                                        std::to_string(q.degree));
    double size = oracle_search_size(q);
    if (size > q.budget) {
        std::ostringstream msg;
        msg << "oracle search space of about " << size << " tuples exceeds the budget of " << q.budget
            << "; use the closed formula instead";
        throw BudgetExceeded(msg.str());
    }
    ElementTable G(q.degree);
    Enumerator en(G, q);
    const int e = G.index(Permutation::identity(q.degree));

    unsigned workers = q.threads ? q.threads : std::max(1u, std::thread::hardware_concurrency());
    if (size < 1e5 || en.slots.empty()) workers = 1;
    std::vector<Enumerator::Counts> partial(workers);
    auto work = [&](unsigned w) {
        std::vector<int> chosen;
        en.recurse(0, e, e, 1, chosen, partial[w], static_cast<int>(workers), static_cast<int>(w));
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    OracleResult r{0, 0, factorial(static_cast<unsigned>(q.degree))};
    for (const auto& p : partial) {
        r.positive += Integer(std::to_string(p.pos));
        r.negative += Integer(std::to_string(p.neg));
    }
    return r;
}

Rational oracle_real_disconnected(const OracleQuery& q) { return oracle_count(q).value(); }

Rational oracle_real_connected(OracleQuery q) {
    q.transitive_only = true;
    return oracle_count(q).value();
}

Rational oracle_complex_disconnected(int g, int d, const std::vector<Partition>& profiles, double budget) {
    OracleQuery q;
    q.handles = g;
    q.crosscaps = 0;
    q.degree = d;
    q.profiles = profiles;
    q.budget = budget;
    return oracle_count(q).value();
}

Rational oracle_complex_connected(int g, int d, const std::vector<Partition>& profiles, double budget) {
    OracleQuery q;
    q.handles = g;
    q.crosscaps = 0;
    q.degree = d;
    q.profiles = profiles;
    q.budget = budget;
    q.transitive_only = true;
    return oracle_count(q).value();
}

std::vector<Rational> brute_class_product(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("classes of different degrees");
    auto parts = partitions_of(a.size());
    std::vector<Integer> hits(parts.size(), 0);
    auto A = class_members(a), B = class_members(b);
    for (const auto& s : A)
        for (const auto& t : B) {
            Partition ct = cycle_type(s * t);
            hits[std::find(parts.begin(), parts.end(), ct) - parts.begin()] += 1;
        }
    std::vector<Rational> out;
    for (std::size_t x = 0; x < parts.size(); ++x) {
        Integer sz = static_cast<unsigned long>(class_members(parts[x]).size());
        Rational r(hits[x], sz);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

namespace {

// Number of row assignments of shape lambda fixed by sigma.
std::int64_t fixed_tabloids(const Partition& lambda, const Permutation& sigma) {
    int d = sigma.degree();
    std::vector<int> row(d, -1);
    std::vector<int> room(lambda.parts());
    std::int64_t count = 0;
    auto place = [&](auto&& self, int x) -> void {
        if (x == d) {
            for (int y = 0; y < d; ++y)
                if (row[sigma(y)] != row[y]) return;
            ++count;
            return;
        }
        for (std::size_t r = 0; r < room.size(); ++r) {
            if (!room[r]) continue;
            --room[r];
            row[x] = static_cast<int>(r);
            self(self, x + 1);
            ++room[r];
        }
    };
    place(place, 0);
    return count;
}

// Semistandard tableaux of shape mu and content lambda.
std::int64_t kostka(const Partition& mu, const Partition& lambda) {
    std::vector<std::vector<int>> tab(mu.length());
    for (int i = 0; i < mu.length(); ++i) tab[i].assign(mu[i], 0);
    std::vector<int> left(lambda.parts());
    std::int64_t count = 0;
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu[i]; ++j) cells.emplace_back(i, j);
    auto fill = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [i, j] = cells[k];
        for (int v = 1; v <= static_cast<int>(left.size()); ++v) {
            if (!left[v - 1]) continue;
            if (j > 0 && tab[i][j - 1] > v) continue;
            if (i > 0 && tab[i - 1][j] >= v) continue;
            --left[v - 1];
            tab[i][j] = v;
            self(self, k + 1);
            ++left[v - 1];
        }
    };
    fill(fill, 0);
    return count;
}

}  // namespace

std::vector<std::vector<std::int64_t>> brute_character_table(int d) {
    auto parts = partitions_of(d);
    std::size_t n = parts.size();
    std::vector<Permutation> reps;
    for (const auto& lambda : parts) reps.push_back(class_members(lambda).front());
    std::vector<std::vector<std::int64_t>> perm(n, std::vector<std::int64_t>(n));
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t c = 0; c < n; ++c) perm[l][c] = fixed_tabloids(parts[l], reps[c]);
    // pi_lambda = sum_{mu} K_{mu lambda} chi_mu with K unitriangular for
    // dominance; every mu dominating lambda precedes it in canonical order.
    std::vector<std::vector<std::int64_t>> chi(n, std::vector<std::int64_t>(n));
    for (std::size_t l = 0; l < n; ++l) {
        chi[l] = perm[l];
        for (std::size_t m = 0; m < l; ++m) {
            std::int64_t k = kostka(parts[m], parts[l]);
            for (std::size_t c = 0; c < n; ++c) chi[l][c] -= k * chi[m][c];
        }
    }
    return chi;
}

}  // namespace realhurwitz
