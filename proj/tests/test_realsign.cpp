#include "realhurwitz/hurwitz.hpp"
#include "realhurwitz/realsign.hpp"

#include <doctest.h>

using namespace realhurwitz;

namespace {

BoundaryMonodromy pair_of(const char* eps, const char* tau, int d) {
    return BoundaryMonodromy(Permutation::parse_cycles(eps, d), Permutation::parse_cycles(tau, d));
}

}  // namespace

TEST_CASE("classified base cases") {
    auto odd = pair_of("(1 2 3)", "", 3);
    CHECK(local_sign(odd) == 1);
    CHECK(is_contributing(odd));
    auto doublet = pair_of("(1 2 3)(4 5 6)", "(1 4)(2 5)(3 6)", 6);
    CHECK(local_sign(doublet) == -1);
    CHECK(is_contributing(doublet));
    auto half_turn = pair_of("(1 2 3 4)", "(1 3)(2 4)", 4);
    CHECK(local_sign(half_turn) == -1);
    CHECK_FALSE(is_contributing(half_turn));
    auto even_identity = pair_of("(1 2)", "", 2);
    CHECK(local_sign(even_identity) == 1);
    CHECK_FALSE(is_contributing(even_identity));
}

TEST_CASE("decomposition") {
    auto bm = pair_of("(1 2)(3 4)(5 6 7 8)", "(1 3)(2 4)(5 7)(6 8)", 8);
    auto inv = decompose(bm);
    CHECK(inv.m[2] == 2);
    CHECK(inv.k[2] == 1);
    CHECK(inv.a[2] == 0);
    CHECK(inv.b[4] == 1);
    CHECK(local_sign(inv) == 1);
}

TEST_CASE("invalid boundary data") {
    CHECK_THROWS_AS(pair_of("(1 2 3)", "(1 2)", 3), ValidationError);
    CHECK_THROWS_AS(pair_of("(1 2 3 4)", "(1 2 3 4)", 4), ValidationError);
    CHECK_THROWS(BoundaryMonodromy(Permutation::parse_cycles("(1 2)", 3), Permutation::identity(2)));
}

TEST_CASE("signs are multiplicative") {
    auto x = pair_of("(1 2 3)", "", 3);
    auto y = pair_of("(1 2)(3 4)", "(1 3)(2 4)", 4);
    auto u = disjoint_union(x, y);
    CHECK(u.degree() == 7);
    CHECK(local_sign(u) == local_sign(x) * local_sign(y));
    CHECK(compose_global_sign(-1, {x, y}) == 1);
    CHECK(compose_global_sign(1, std::vector<int>{-1, -1, -1}) == -1);
    CHECK_THROWS_AS(compose_global_sign(1, std::vector<BoundaryMonodromy>{pair_of("(1 2)", "", 2)}), ValidationError);
}

TEST_CASE("aggregated local signs give the disconnected numbers") {
    for (int d = 1; d <= 5; ++d)
        for (const auto& eta : partitions_of(d)) {
            CAPTURE(to_string(eta));
            Rational expected = real_disconnected(0, d, {eta});
            CHECK(aggregate_local_signs(eta) == expected);
            CHECK(aggregate_local_signs(eta, true) == expected);
        }
}
