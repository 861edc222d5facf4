#include "realhurwitz/chartab.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace realhurwitz {

namespace {

struct ShapePairHash {
    std::size_t operator()(const std::pair<Partition, Partition>& k) const noexcept {
        PartitionHash h;
        return h(k.first) * 1000003u ^ h(k.second);
    }
};

class CharacterCache {
public:
    std::optional<std::int64_t> find(const std::pair<Partition, Partition>& key) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    void insert(std::pair<Partition, Partition> key, std::int64_t value) {
        std::unique_lock lock(mutex_);
        map_.emplace(std::move(key), value);
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::pair<Partition, Partition>, std::int64_t, ShapePairHash> map_;
};

CharacterCache& character_cache() {
    static CharacterCache cache;
    return cache;
}

// Beta-set (first column hook lengths) of mu, padded to `len` entries.
std::vector<int> beta_set(const Partition& mu, int len) {
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = (i < mu.length() ? mu[i] : 0) + (len - 1 - i);
    return beta;
}

Partition from_beta_set(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        int p = beta[i] - (len - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

std::int64_t mn_uncached(const Partition& mu, const Partition& lambda) {
    if (lambda.empty()) return 1;
    int r = lambda[0];
    Partition rest(std::vector<int>(lambda.parts().begin() + 1, lambda.parts().end()));
    int len = mu.length();
    std::vector<int> beta = beta_set(mu, len);
    std::set<int> occupied(beta.begin(), beta.end());
    std::int64_t total = 0;
    for (int i = 0; i < len; ++i) {
        int from = beta[i];
        int to = from - r;
        if (to < 0 || occupied.count(to)) continue;
        // Each bead jumped over adds one to the leg length of the rim hook.
        int height = 0;
        for (int b : beta)
            if (b > to && b < from) ++height;
        std::vector<int> next = beta;
        next[i] = to;
        std::int64_t sub = mn_character(from_beta_set(std::move(next)), rest);
        total += (height % 2 == 0) ? sub : -sub;
    }
    return total;
}

}  // namespace

std::int64_t mn_character(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        throw std::invalid_argument("mn_character: shapes of different sizes");
    if (lambda.empty()) return 1;
    auto key = std::make_pair(mu, lambda);
    if (auto hit = character_cache().find(key)) return *hit;
    std::int64_t value = mn_uncached(mu, lambda);
    character_cache().insert(std::move(key), value);
    return value;
}

std::size_t SymCharTable::index_of(const Partition& p) const {
    auto it = std::lower_bound(partitions_.begin(), partitions_.end(), p, std::greater<>());
    if (it == partitions_.end() || *it != p)
        throw ValidationError("partition " + to_string(p) + " is not a partition of " + std::to_string(degree_));
    return static_cast<std::size_t>(it - partitions_.begin());
}

std::vector<Rational> SymCharTable::row(std::size_t mu) const {
    std::vector<Rational> out;
    out.reserve(values_[mu].size());
    for (auto v : values_[mu]) out.emplace_back(static_cast<long>(v));
    return out;
}

SymCharTable sym_char_table(int d, int degree_cap) {
    if (d < 0) throw ValidationError("degree must be non-negative");
    if (d > degree_cap)
        throw ResourceError("degree " + std::to_string(d) + " exceeds the character table cap " +
                            std::to_string(degree_cap));
    SymCharTable t;
    t.degree_ = d;
    t.partitions_ = partitions_of(d);
    t.values_.assign(t.partitions_.size(), std::vector<std::int64_t>(t.partitions_.size()));
    for (std::size_t i = 0; i < t.partitions_.size(); ++i)
        for (std::size_t j = 0; j < t.partitions_.size(); ++j)
            t.values_[i][j] = mn_character(t.partitions_[i], t.partitions_[j]);
    return t;
}

Integer z_lambda(const Partition& lambda) {
    Integer z = 1;
    int i = 0;
    while (i < lambda.length()) {
        int v = lambda[i];
        int m = 0;
        while (i < lambda.length() && lambda[i] == v) {
            ++m;
            ++i;
        }
        Integer vp;
        mpz_ui_pow_ui(vp.get_mpz_t(), static_cast<unsigned long>(v), static_cast<unsigned long>(m));
        z *= vp * factorial(static_cast<unsigned>(m));
    }
    return z;
}

Integer class_size(const Partition& lambda) {
    return factorial(static_cast<unsigned>(lambda.size())) / z_lambda(lambda);
}

Partition square_class(const Partition& lambda) {
    std::vector<int> parts;
    for (int p : lambda.parts()) {
        if (p % 2) {
            parts.push_back(p);
        } else {
            parts.push_back(p / 2);
            parts.push_back(p / 2);
        }
    }
    return Partition(std::move(parts));
}

Rational f_value(const Partition& lambda, const Partition& mu) {
    Rational r(class_size(lambda) * mn_character(mu, lambda), dimension(mu));
    r.canonicalize();
    return r;
}

Rational f_extended(const Partition& lambda, const Partition& mu) {
    if (mu.size() < lambda.size()) return 0;
    int extra = mu.size() - lambda.size();
    int ones = m1(lambda);
    return Rational(binomial(static_cast<unsigned>(ones + extra), static_cast<unsigned>(ones))) *
           f_value(lambda.padded_to(mu.size()), mu);
}

int sfs_symmetric_closed(const Partition& mu) {
    if (!is_symmetric(mu)) return 0;
    int excess = mu.size() - diagonal_length(mu);
    if (excess % 2) throw std::logic_error("self-conjugate partition with odd |mu| - r(mu)");
    return sign_power(excess / 2);
}

// --- GroupSpec -----------------------------------------------------------

std::optional<std::size_t> GroupSpec::find_class(std::string_view id) const {
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].id == id) return i;
    return std::nullopt;
}

std::optional<std::size_t> GroupSpec::find_irrep(std::string_view id) const {
    for (std::size_t i = 0; i < irreducibles_.size(); ++i)
        if (irreducibles_[i].id == id) return i;
    return std::nullopt;
}

std::size_t GroupSpec::class_index(std::string_view id) const {
    if (auto i = find_class(id)) return *i;
    throw ValidationError("unknown class id '" + std::string(id) + "'");
}

Rational GroupSpec::f_value(std::size_t c, std::size_t rho) const {
    Rational r = Rational(classes_[c].size) * chi(rho, c) / Rational(dims_[rho]);
    r.canonicalize();
    return r;
}

GroupSpec GroupSpec::symmetric(int d, int degree_cap) {
    SymCharTable t = sym_char_table(d, degree_cap);
    const auto& parts = t.partitions();
    std::vector<ConjugacyClass> classes;
    for (const auto& lambda : parts)
        classes.push_back({to_string(lambda), class_size(lambda), parity_sign(lambda),
                           t.index_of(square_class(lambda))});
    std::vector<Irreducible> irreps;
    for (std::size_t mu = 0; mu < parts.size(); ++mu) irreps.push_back({to_string(parts[mu]), t.row(mu)});
    return validated(factorial(static_cast<unsigned>(d)), std::move(classes), std::move(irreps), d < 2);
}

GroupSpec GroupSpec::validated(Integer order, std::vector<ConjugacyClass> classes,
                               std::vector<Irreducible> irreducibles, bool allow_trivial_epsilon) {
    auto fail = [](const std::string& what) { throw ValidationError(what); };
    if (order <= 0) fail("group order must be positive");
    if (classes.empty()) fail("no conjugacy classes");
    std::set<std::string> seen;
    for (const auto& c : classes) {
        if (c.id.empty()) fail("empty class id");
        if (!seen.insert(c.id).second) fail("duplicate class id '" + c.id + "'");
        if (c.size <= 0) fail("class '" + c.id + "' has non-positive size");
        if (c.epsilon != 1 && c.epsilon != -1) fail("class '" + c.id + "' has epsilon outside {+1,-1}");
        if (c.square >= classes.size()) fail("class '" + c.id + "' has an unknown square class");
    }
    seen.clear();
    for (const auto& rho : irreducibles) {
        if (rho.id.empty()) fail("empty irreducible id");
        if (!seen.insert(rho.id).second) fail("duplicate irreducible id '" + rho.id + "'");
        if (rho.character.size() != classes.size()) fail("character of '" + rho.id + "' is incomplete");
    }
    Integer total = 0;
    for (const auto& c : classes) total += c.size;
    if (total != order) fail("class sizes sum to " + total.get_str() + ", not the group order " + order.get_str());
    if (irreducibles.size() != classes.size()) fail("number of irreducibles differs from number of classes");

    GroupSpec g;
    g.order_ = std::move(order);
    g.classes_ = std::move(classes);
    g.irreducibles_ = std::move(irreducibles);
    const std::size_t n = g.classes_.size();

    // The identity is the size-1 class on which every character attains its
    // degree, i.e. is a positive integer dominating the whole row.
    std::optional<std::size_t> identity;
    for (std::size_t c = 0; c < n && !identity; ++c) {
        if (g.classes_[c].size != 1) continue;
        bool ok = true;
        for (const auto& rho : g.irreducibles_) {
            const Rational& v = rho.character[c];
            if (v <= 0 || v.get_den() != 1) ok = false;
            for (const auto& w : rho.character)
                if (abs(w) > v) ok = false;
            if (!ok) break;
        }
        if (ok) identity = c;
    }
    if (!identity) fail("no identity class (size 1, all characters equal to their degree)");
    g.identity_ = *identity;
    if (g.classes_[g.identity_].epsilon != 1) fail("identity class has epsilon -1");
    if (g.classes_[g.identity_].square != g.identity_) fail("square map not class-consistent: identity squares elsewhere");
    for (const auto& rho : g.irreducibles_) g.dims_.push_back(rho.character[g.identity_].get_num());

    // Row orthogonality; the characters are real so no conjugation enters.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            Rational s = 0;
            for (std::size_t c = 0; c < n; ++c)
                s += Rational(g.classes_[c].size) * g.chi(a, c) * g.chi(b, c);
            s /= Rational(g.order_);
            if (s != (a == b ? 1 : 0))
                fail("orthogonality failure between '" + g.irreducibles_[a].id + "' and '" +
                     g.irreducibles_[b].id + "'");
        }

    bool trivial = std::all_of(g.classes_.begin(), g.classes_.end(), [](const auto& c) { return c.epsilon == 1; });
    if (trivial && !allow_trivial_epsilon) fail("epsilon trivial");
    bool eps_is_row = std::any_of(g.irreducibles_.begin(), g.irreducibles_.end(), [&](const Irreducible& rho) {
        for (std::size_t c = 0; c < n; ++c)
            if (rho.character[c] != g.classes_[c].epsilon) return false;
        return true;
    });
    if (!eps_is_row) fail("epsilon is not a row of the character table");

    // Square map: squares are even, and the number of elements squaring into
    // each class x must equal #x * sum_rho FS(rho) chi_rho(x).
    for (const auto& c : g.classes_)
        if (g.classes_[c.square].epsilon != 1)
            fail("square map not class-consistent: class '" + c.id + "' squares into an odd class");
    std::vector<Rational> fs(n);
    for (std::size_t rho = 0; rho < n; ++rho) {
        fs[rho] = fs_indicator(g.irreducibles_[rho].character, g);
        if (fs[rho] != 1 && fs[rho] != 0 && fs[rho] != -1)
            fail("square map not class-consistent: Frobenius-Schur indicator of '" +
                 g.irreducibles_[rho].id + "' is " + to_string(fs[rho]));
    }
    std::vector<Integer> roots(n, 0);
    for (const auto& c : g.classes_) roots[c.square] += c.size;
    for (std::size_t x = 0; x < n; ++x) {
        Rational expected = 0;
        for (std::size_t rho = 0; rho < n; ++rho) expected += fs[rho] * g.chi(rho, x);
        expected *= Rational(g.classes_[x].size);
        if (expected != Rational(roots[x]))
            fail("square map not class-consistent at class '" + g.classes_[x].id + "'");
    }

    g.transpose_.resize(n);
    for (std::size_t rho = 0; rho < n; ++rho) {
        bool found = false;
        for (std::size_t sigma = 0; sigma < n && !found; ++sigma) {
            bool match = true;
            for (std::size_t c = 0; c < n && match; ++c)
                match = g.chi(sigma, c) == g.epsilon(c) * g.chi(rho, c);
            if (match) {
                g.transpose_[rho] = sigma;
                found = true;
            }
        }
        if (!found) fail("no irreducible equals '" + g.irreducibles_[rho].id + "' tensored with epsilon");
    }
    return g;
}

namespace {

using nlohmann::json;

std::string expect_string(const json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

Integer json_integer(const json& j, const char* what) {
    if (j.is_number_integer()) return Integer(j.dump());
    if (j.is_string()) {
        Rational r = parse_rational(j.get<std::string>());
        if (r.get_den() != 1) throw ParseError(std::string(what) + " must be an integer");
        return r.get_num();
    }
    throw ParseError(std::string(what) + " must be an integer");
}

Rational json_rational(const json& j) {
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        Rational r = parse_rational(s);
        if (s.find('/') != std::string::npos && to_string(r, true) != s)
            throw ParseError("rational '" + s + "' is not in reduced p/q form");
        return r;
    }
    throw ParseError("character values must be integers or \"p/q\" strings");
}

}  // namespace

GroupSpec load_group_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed group spec: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("group spec must be an object");
    for (const char* key : {"order", "classes", "irreducibles"})
        if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    Integer order = json_integer(doc["order"], "order");
    const json& jc = doc["classes"];
    const json& ji = doc["irreducibles"];
    if (!jc.is_array() || !ji.is_array()) throw ParseError("'classes' and 'irreducibles' must be arrays");

    std::vector<std::string> ids;
    for (const auto& c : jc) {
        if (!c.is_object() || !c.contains("id")) throw ParseError("class entries need an 'id'");
        ids.push_back(expect_string(c["id"], "class id"));
    }
    auto index_of = [&](const std::string& id) -> std::size_t {
        auto it = std::find(ids.begin(), ids.end(), id);
        if (it == ids.end()) throw ValidationError("unknown class id '" + id + "'");
        return static_cast<std::size_t>(it - ids.begin());
    };

    std::vector<ConjugacyClass> classes;
    for (const auto& c : jc) {
        for (const char* key : {"size", "epsilon", "square"})
            if (!c.contains(key)) throw ParseError(std::string("class entry missing '") + key + "'");
        if (!c["epsilon"].is_number_integer()) throw ParseError("epsilon must be an integer");
        ConjugacyClass cc;
        cc.id = c["id"].get<std::string>();
        cc.size = json_integer(c["size"], "size");
        cc.epsilon = c["epsilon"].get<int>();
        cc.square = index_of(expect_string(c["square"], "square"));
        classes.push_back(std::move(cc));
    }

    std::vector<Irreducible> irreps;
    for (const auto& r : ji) {
        if (!r.is_object() || !r.contains("id") || !r.contains("character"))
            throw ParseError("irreducible entries need 'id' and 'character'");
        const json& ch = r["character"];
        if (!ch.is_object()) throw ParseError("'character' must be an object keyed by class id");
        Irreducible rho;
        rho.id = expect_string(r["id"], "irreducible id");
        rho.character.assign(ids.size(), Rational(0));
        std::vector<bool> given(ids.size(), false);
        for (auto it = ch.begin(); it != ch.end(); ++it) {
            std::size_t c = index_of(it.key());
            rho.character[c] = json_rational(it.value());
            given[c] = true;
        }
        if (std::find(given.begin(), given.end(), false) != given.end())
            throw ValidationError("character of '" + rho.id + "' is missing classes");
        irreps.push_back(std::move(rho));
    }
    return GroupSpec::validated(std::move(order), std::move(classes), std::move(irreps));
}

GroupSpec load_group_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open group spec file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return load_group_spec(buf.str());
}

std::string to_json(const GroupSpec& g) {
    json doc;
    doc["order"] = g.order().fits_slong_p() ? json(g.order().get_si()) : json(g.order().get_str());
    doc["classes"] = json::array();
    for (const auto& c : g.classes()) {
        json jc;
        jc["id"] = c.id;
        jc["size"] = c.size.fits_slong_p() ? json(c.size.get_si()) : json(c.size.get_str());
        jc["epsilon"] = c.epsilon;
        jc["square"] = g.classes()[c.square].id;
        doc["classes"].push_back(jc);
    }
    doc["irreducibles"] = json::array();
    for (const auto& rho : g.irreducibles()) {
        json jr;
        jr["id"] = rho.id;
        json ch = json::object();
        for (std::size_t c = 0; c < g.class_count(); ++c) {
            const Rational& v = rho.character[c];
            if (v.get_den() == 1 && v.get_num().fits_slong_p())
                ch[g.classes()[c].id] = v.get_num().get_si();
            else
                ch[g.classes()[c].id] = to_string(v);
        }
        jr["character"] = ch;
        doc["irreducibles"].push_back(jr);
    }
    return doc.dump(2);
}

namespace {

template <typename Weight>
Rational square_sum(std::span<const Rational> chi, const GroupSpec& g, Weight weight) {
    if (chi.size() != g.class_count()) throw std::invalid_argument("class function has wrong length");
    Rational s = 0;
    for (std::size_t c = 0; c < g.class_count(); ++c) {
        const auto& cc = g.classes()[c];
        s += Rational(cc.size) * weight(cc.epsilon) * chi[cc.square];
    }
    return s / Rational(g.order());
}

template <typename Weight>
Rational square_sum(std::span<const Rational> chi, const SymCharTable& t, Weight weight) {
    if (chi.size() != t.size()) throw std::invalid_argument("class function has wrong length");
    Rational s = 0;
    for (const auto& lambda : t.partitions())
        s += Rational(class_size(lambda)) * weight(parity_sign(lambda)) * chi[t.index_of(square_class(lambda))];
    return s / Rational(factorial(static_cast<unsigned>(t.degree())));
}

}  // namespace

Rational fs_indicator(std::span<const Rational> chi, const GroupSpec& g) {
    return square_sum(chi, g, [](int) { return 1; });
}

Rational sfs_indicator(std::span<const Rational> chi, const GroupSpec& g) {
    return square_sum(chi, g, [](int eps) { return eps; });
}

Rational fs_kernel_indicator(std::span<const Rational> chi, const GroupSpec& g) {
    return square_sum(chi, g, [](int eps) { return 1 + eps; });
}

Rational fs_indicator(std::span<const Rational> chi, const SymCharTable& t) {
    return square_sum(chi, t, [](int) { return 1; });
}

Rational sfs_indicator(std::span<const Rational> chi, const SymCharTable& t) {
    return square_sum(chi, t, [](int eps) { return eps; });
}

}  // namespace realhurwitz
