#include "realhurwitz/completed.hpp"
#include "realhurwitz/hurwitz.hpp"

#include <doctest.h>

using namespace realhurwitz;

TEST_CASE("1/S coefficients") {
    // 1/S(z) = 1 - z^2/24 + 7 z^4/5760 - ...
    auto c = s_inverse_coeffs(4);
    CHECK(c.coeffs[0] == 1);
    CHECK(c.coeffs[1] == 0);
    CHECK(c.coeffs[2] == Rational(-1, 24));
    CHECK(c.coeffs[4] == Rational(7, 5760));
    CHECK(s_inverse_coeff(2) == Rational(-1, 24));
}

TEST_CASE("first completed cycles") {
    auto c1 = completed_cycle(1);
    CHECK(c1.coefficients.size() == 2);
    CHECK(c1.q(Partition{1}) == 1);
    CHECK(c1.q(Partition{}) == Rational(-1, 24));
    auto c2 = completed_cycle(2);
    CHECK(c2.coefficients.size() == 1);
    auto c3 = completed_cycle(3);
    CHECK(c3.q(Partition{1, 1}) == 1);
    CHECK(c3.q(Partition{1}) == Rational(1, 12));
    CHECK(c3.q(Partition{}) == Rational(7, 2880));
    auto c4 = completed_cycle(4);
    CHECK(c4.to_string() == "(4):1 (2,1):2 (2):5/4");
    CHECK(c4.to_string(true) == "(4):1/1 (2,1):2/1 (2):5/4");
    CHECK_THROWS(completed_cycle(0));
}

TEST_CASE("defining identity") {
    for (int k = 1; k <= 6; ++k) {
        auto cc = completed_cycle(k);
        for (int s = 0; s <= k + 2; ++s)
            for (const auto& mu : partitions_of(s)) CHECK(completed_cycle_value(cc, mu) * k == p_star(k, mu));
    }
}

TEST_CASE("completed numbers reduce to plain ones for k = 2") {
    // the completed 2-cycle is just (2), a transposition insertion
    Profiles ps{Partition{3}};
    CHECK(real_completed_disconnected(1, 3, ps, {2}) == real_disconnected(1, 3, {Partition{3}, Partition{2, 1}}));
    CHECK(complex_completed_disconnected(0, 3, ps, {2, 2}) ==
          complex_disconnected(0, 3, {Partition{3}, Partition{2, 1}, Partition{2, 1}}));
}

TEST_CASE("completed doublet contribution") {
    Profiles ps{Partition{1, 1}};
    CHECK(doublet_contribution_completed(0, 2, ps, {2}) == 0);
    CHECK(doublet_contribution_completed(0, 2, ps, {3, 2}) == 0);
    Rational first = doublet_contribution_completed(0, 2, ps, {3}, {1});
    CHECK(doublet_contribution_completed(0, 2, ps, {3}, {-1}) == first);
    CHECK(doublet_contribution_completed(0, 2, ps, {}) == doublet_contribution(0, 2, ps));
}

TEST_CASE("connected completed numbers without insertions") {
    Profiles ps{Partition{1, 1}};
    CHECK(real_completed_connected(0, 2, ps, {}) == real_connected(0, 2, ps));
    CHECK(complex_completed_connected(1, 3, {Partition{3}}, {}) == complex_connected(1, 3, {Partition{3}}));
}

TEST_CASE("shifted power sums") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) CHECK(p_star(1, mu) == Rational(24 * n - 1, 24));
    CHECK(p_star(2, Partition{}) == 0);
    CHECK(p_star(2, Partition{2}) == 2);
    CHECK(p_star(2, Partition{1, 1}) == -2);
}

TEST_CASE("small completed-cycle numbers") {
    CHECK(real_completed_disconnected(1, 3, {}, {1}) == Rational(71, 24));
    CHECK(complex_completed_disconnected(0, 1, {}, {1}) == Rational(23, 24));
    CHECK(complex_completed_disconnected(1, 2, {}, {2}) == 0);
    CHECK(real_completed_disconnected(0, 3, {Partition{3}}, {}) == real_disconnected(0, 3, {Partition{3}}));
}

TEST_CASE("connected numbers with 2-cycle insertions") {
    // the completed 2-cycle has no lower terms, so inserting it matches a
    // transposition branch point
    for (int g = 0; g <= 1; ++g) {
        CHECK(complex_completed_connected(g, 3, {Partition{3}}, {2, 2}) ==
              complex_connected(g, 3, {Partition{3}, Partition{2, 1}, Partition{2, 1}}));
        CHECK(real_completed_connected(g, 3, {Partition{2, 1}}, {2}) ==
              real_connected(g, 3, {Partition{2, 1}, Partition{2, 1}}));
        CHECK(complex_completed_connected(g, 2, {}, {2, 2}) == complex_connected(g, 2, {Partition{2}, Partition{2}}));
    }
}
