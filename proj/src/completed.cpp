#include "realhurwitz/completed.hpp"

#include <mutex>
#include <stdexcept>

namespace realhurwitz {

namespace {

std::mutex s_inverse_mutex;
std::vector<Rational> s_inverse_cache{Rational(1)};

// Coefficient of z^n in S(z): 1/(4^m (2m+1)!) at n = 2m, zero for odd n.
Rational s_coeff(int n) {
    if (n % 2) return 0;
    int m = n / 2;
    Integer four_m;
    mpz_ui_pow_ui(four_m.get_mpz_t(), 4, static_cast<unsigned long>(m));
    return Rational(Integer(1), four_m * factorial(static_cast<unsigned>(2 * m + 1)));
}

void extend_s_inverse(int N) {
    while (static_cast<int>(s_inverse_cache.size()) <= N) {
        int n = static_cast<int>(s_inverse_cache.size());
        Rational c = 0;
        for (int j = 1; j <= n; ++j) c -= s_coeff(j) * s_inverse_cache[n - j];
        s_inverse_cache.push_back(c);
    }
}

}  // namespace

RatSeries s_inverse_coeffs(int N) {
    if (N < 0) throw ValidationError("series order must be non-negative");
    std::lock_guard lock(s_inverse_mutex);
    extend_s_inverse(N);
    return RatSeries{N, std::vector<Rational>(s_inverse_cache.begin(), s_inverse_cache.begin() + N + 1)};
}

Rational s_inverse_coeff(int n) {
    if (n < 0) throw ValidationError("series index must be non-negative");
    std::lock_guard lock(s_inverse_mutex);
    extend_s_inverse(n);
    return s_inverse_cache[n];
}

Rational p_star(int k, const Partition& mu) {
    if (k < 1) throw ValidationError("p_k^* needs k >= 1");
    Integer acc = 0;
    for (int i = 1; i <= mu.length(); ++i) {
        Integer a, b;
        mpz_pow_ui(a.get_mpz_t(), Integer(2 * mu[i - 1] - 2 * i + 1).get_mpz_t(), static_cast<unsigned long>(k));
        mpz_pow_ui(b.get_mpz_t(), Integer(1 - 2 * i).get_mpz_t(), static_cast<unsigned long>(k));
        acc += a - b;
    }
    Integer two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
    Rational shifted(acc, two_k);
    shifted.canonicalize();
    return Rational(factorial(static_cast<unsigned>(k))) * s_inverse_coeff(k + 1) + shifted;
}

Rational CompletedCycle::q(const Partition& nu) const {
    auto it = coefficients.find(nu);
    return it == coefficients.end() ? Rational(0) : it->second;
}

std::string CompletedCycle::to_string(bool strict) const {
    std::string out;
    for (const auto& [nu, q] : coefficients) {
        if (!out.empty()) out += ' ';
        out += to_paren_string(nu) + ":" + realhurwitz::to_string(q, strict);
    }
    return out;
}

Rational completed_cycle_value(const CompletedCycle& cc, const Partition& mu) {
    Rational v = 0;
    for (const auto& [nu, q] : cc.coefficients) v += q * f_extended(nu, mu);
    return v;
}

CompletedCycle completed_cycle(int k) {
    if (k < 1) throw ValidationError("completed cycles need k >= 1");
    CompletedCycle cc;
    cc.k = k;
    cc.coefficients.emplace(Partition{k}, Rational(1));
    const Rational inv_k(1, k);

    // Same-size f_nu do not vanish on each other, so each size is solved as a
    // block: sum_{|nu| = s} q_nu #c_nu chi_mu(nu) = dim(mu) r(mu) is inverted
    // with column orthogonality, giving q_nu = (1/s!) sum_mu chi_mu(nu) dim(mu) r(mu).
    for (int s = 0; s < k; ++s) {
        auto shapes = partitions_of(s);
        std::vector<Rational> residual;
        for (const auto& mu : shapes) residual.push_back(inv_k * p_star(k, mu) - completed_cycle_value(cc, mu));
        Rational sf(factorial(static_cast<unsigned>(s)));
        for (const auto& nu : shapes) {
            Rational q = 0;
            for (std::size_t m = 0; m < shapes.size(); ++m)
                q += Rational(mn_character(shapes[m], nu)) * Rational(dimension(shapes[m])) * residual[m];
            q /= sf;
            if (q != 0) cc.coefficients.emplace(nu, q);
        }
    }

    for (int s = 0; s <= k + 3; ++s)
        for (const auto& mu : partitions_of(s))
            if (completed_cycle_value(cc, mu) != inv_k * p_star(k, mu))
                throw std::logic_error("completed cycle " + std::to_string(k) + " fails its defining identity at " +
                                       to_paren_string(mu));
    return cc;
}

namespace {

void check_cycles(const std::vector<int>& cycles) {
    for (int k : cycles)
        if (k < 1) throw ValidationError("completed-cycle orders must be positive");
}

void check_query(int g, int d, const Profiles& profiles) {
    if (g < 0) throw ValidationError("genus must be non-negative");
    if (d < 0) throw ValidationError("degree must be non-negative");
    for (const auto& p : profiles)
        if (p.size() != d)
            throw ValidationError("profile " + to_string(p) + " is not a partition of " + std::to_string(d));
}

Rational insertion_factor(const std::vector<int>& cycles, const Partition& mu) {
    Rational p = 1;
    for (int k : cycles) p *= p_star(k, mu) / Rational(k);
    return p;
}

Rational profile_factor(const Profiles& profiles, const Partition& mu) {
    Rational p = 1;
    for (const auto& lambda : profiles) p *= f_value(lambda, mu);
    return p;
}

std::vector<int> select(const std::vector<int>& cycles, std::uint32_t mask) {
    std::vector<int> out;
    for (std::size_t j = 0; j < cycles.size(); ++j)
        if (mask >> j & 1u) out.push_back(cycles[j]);
    return out;
}

}  // namespace

Rational complex_completed_disconnected(int g, int d, const Profiles& profiles, const std::vector<int>& cycles) {
    check_query(g, d, profiles);
    check_cycles(cycles);
    Rational df(factorial(static_cast<unsigned>(d)));
    Rational sum = 0;
    for (const auto& mu : partitions_of(d)) {
        Rational f = profile_factor(profiles, mu);
        if (f == 0) continue;
        sum += pow(Rational(dimension(mu)) / df, 2 - 2L * g) * f * insertion_factor(cycles, mu);
    }
    return sum;
}

Rational real_completed_disconnected(int g, int d, const Profiles& profiles, const std::vector<int>& cycles) {
    check_query(g, d, profiles);
    check_cycles(cycles);
    Rational df(factorial(static_cast<unsigned>(d)));
    Rational sum = 0;
    for (const auto& mu : partitions_of(d)) {
        if (!is_symmetric(mu)) continue;
        Rational f = profile_factor(profiles, mu);
        if (f == 0) continue;
        Rational base = Rational(sfs_symmetric_closed(mu)) * Rational(dimension(mu)) / df;
        sum += pow(base, 1L - g) * f * insertion_factor(cycles, mu);
    }
    return sum;
}

Rational complex_completed_connected(int g, int d, const Profiles& profiles, const std::vector<int>& cycles) {
    check_query(g, d, profiles);
    check_cycles(cycles);
    return connected_from_disconnected(d, profiles, static_cast<int>(cycles.size()),
                                       [&](int s, const Profiles& sub, std::uint32_t mask) {
                                           return complex_completed_disconnected(g, s, sub, select(cycles, mask));
                                       });
}

Rational real_completed_connected(int g, int d, const Profiles& profiles, const std::vector<int>& cycles) {
    check_query(g, d, profiles);
    check_cycles(cycles);
    return connected_from_disconnected(d, profiles, static_cast<int>(cycles.size()),
                                       [&](int s, const Profiles& sub, std::uint32_t mask) {
                                           return real_completed_disconnected(g, s, sub, select(cycles, mask));
                                       });
}

Rational doublet_contribution_completed(int g, int d, const Profiles& profiles, const std::vector<int>& cycles,
                                        const std::vector<int>& choice) {
    check_cycles(cycles);
    Rational factor = 1;
    for (int k : cycles) factor *= 1 + sign_power(k - 1);
    Rational inner = doublet_contribution_with(g, d, profiles, choice, [&](int s, const Profiles& branches) {
        return complex_completed_connected(g, s, branches, cycles);
    });
    return factor * inner;
}

}  // namespace realhurwitz
