#include "realhurwitz/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace realhurwitz {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    for (int p : parts_) {
        if (p <= 0) throw ValidationError("partition parts must be positive");
        size_ += p;
    }
}

int Partition::multiplicity(int v) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(all));
}

Partition Partition::padded_to(int size) const {
    std::vector<int> all = parts_;
    for (int i = size_; i < size; ++i) all.push_back(1);
    return Partition(std::move(all));
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        generate(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    if (d < 0) return out;
    std::vector<int> prefix;
    generate(d, d, prefix, out);
    return out;
}

Partition transpose(const Partition& lambda) {
    if (lambda.empty()) return {};
    std::vector<int> cols(lambda[0], 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j) ++cols[j];
    return Partition(std::move(cols));
}

int diagonal_length(const Partition& lambda) {
    int r = 0;
    for (int i = 0; i < lambda.length(); ++i)
        if (lambda[i] >= i + 1) ++r;
    return r;
}

int parity_sign(const Partition& lambda) {
    return sign_power(lambda.size() - lambda.length());
}

int m1(const Partition& lambda) { return lambda.multiplicity(1); }

bool is_symmetric(const Partition& lambda) { return transpose(lambda) == lambda; }

Integer dimension(const Partition& mu) {
    Partition conj = transpose(mu);
    Integer hooks = 1;
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu[i]; ++j)
            hooks *= (mu[i] - j - 1) + (conj[j] - i - 1) + 1;
    return factorial(static_cast<unsigned>(mu.size())) / hooks;
}

namespace {

// Grouped by part value: choose how many copies of each value go to the plus side.
void split_groups(const std::vector<std::pair<int, int>>& groups, std::size_t idx,
                  std::vector<int>& plus, std::vector<int>& minus,
                  std::vector<std::pair<Partition, Partition>>& out) {
    if (idx == groups.size()) {
        out.emplace_back(Partition(plus), Partition(minus));
        return;
    }
    auto [value, count] = groups[idx];
    for (int take = count; take >= 0; --take) {
        for (int i = 0; i < take; ++i) plus.push_back(value);
        for (int i = 0; i < count - take; ++i) minus.push_back(value);
        split_groups(groups, idx + 1, plus, minus, out);
        plus.resize(plus.size() - take);
        minus.resize(minus.size() - (count - take));
    }
}

std::vector<std::pair<int, int>> value_groups(const Partition& lambda) {
    std::vector<std::pair<int, int>> groups;
    for (int p : lambda.parts()) {
        if (!groups.empty() && groups.back().first == p)
            ++groups.back().second;
        else
            groups.emplace_back(p, 1);
    }
    return groups;
}

}  // namespace

std::vector<std::pair<Partition, Partition>> splittings(const Partition& lambda) {
    std::vector<std::pair<Partition, Partition>> out;
    std::vector<int> plus, minus;
    split_groups(value_groups(lambda), 0, plus, minus, out);
    return out;
}

bool is_submultiset(const Partition& sub, const Partition& whole) {
    std::map<int, int> avail;
    for (int p : whole.parts()) ++avail[p];
    for (int p : sub.parts())
        if (--avail[p] < 0) return false;
    return true;
}

std::vector<Partition> submultisets(const Partition& lambda) {
    std::vector<Partition> out;
    for (auto& [plus, minus] : splittings(lambda)) out.push_back(plus);
    return out;
}

std::string to_string(const Partition& lambda) {
    if (lambda.empty()) return "-";
    std::string s;
    for (int i = 0; i < lambda.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(lambda[i]);
    }
    return s;
}

std::string to_paren_string(const Partition& lambda) {
    return "(" + (lambda.empty() ? std::string() : to_string(lambda)) + ")";
}

Partition parse_partition(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty() || text == "-") return {};
    std::vector<int> parts;
    while (true) {
        auto comma = text.find(',');
        std::string_view tok = trim(text.substr(0, comma));
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v <= 0)
            throw ParseError("invalid partition part '" + std::string(tok) + "'");
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int v : p.parts()) h ^= static_cast<std::size_t>(v) + 0x9e3779b9 + (h << 6) + (h >> 2);
    return h;
}

}  // namespace realhurwitz
