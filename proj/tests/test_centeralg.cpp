#include "realhurwitz/centeralg.hpp"
#include "realhurwitz/symgrp.hpp"

#include <doctest.h>

using namespace realhurwitz;

namespace {

std::size_t class_of(const GroupHandle& G, const Partition& p) { return G->class_index(to_string(p)); }

}  // namespace

TEST_CASE("class products match permutation multiplication") {
    for (int d = 1; d <= 5; ++d) {
        GroupHandle G = symmetric_group(d);
        auto parts = partitions_of(d);
        for (const auto& a : parts)
            for (const auto& b : parts) {
                auto brute = brute_class_product(a, b);
                auto coords = multiply(from_class(G, class_of(G, a)), from_class(G, class_of(G, b))).class_coordinates();
                for (std::size_t x = 0; x < parts.size(); ++x) CHECK(coords[class_of(G, parts[x])] == brute[x]);
            }
    }
}

TEST_CASE("unit, idempotents and coordinates") {
    GroupHandle G = symmetric_group(4);
    CenterElement e = unit(G);
    CHECK(identity_coefficient(e) == 1);
    auto coords = e.class_coordinates();
    for (std::size_t c = 0; c < G->class_count(); ++c) CHECK(coords[c] == (c == G->identity_class() ? 1 : 0));
    for (std::size_t r = 0; r < G->irrep_count(); ++r) {
        CenterElement v = idempotent(G, r);
        CHECK(multiply(v, v) == v);
        CHECK(identity_coefficient(v) == Rational(G->dim(r) * G->dim(r)) / Rational(G->order()));
    }
    std::vector<Rational> a{1, 2, 3, 4, 5};
    CHECK(from_class_coordinates(G, a).class_coordinates() == a);
    CHECK(power(from_class(G, 0), 0) == e);
    CHECK(add(e, scale(e, -1)) == CenterElement(G, std::vector<Rational>(5, Rational(0))));
}

TEST_CASE("handle and cross-cap elements by enumeration") {
    for (int d = 1; d <= 4; ++d) {
        GroupHandle G = symmetric_group(d);
        auto perms = all_permutations(d);
        std::vector<Rational> ell_brute(G->class_count(), Rational(0));
        for (const auto& t : perms) ell_brute[class_of(G, cycle_type(t * t))] += sign(t);
        for (std::size_t c = 0; c < G->class_count(); ++c) ell_brute[c] /= Rational(G->classes()[c].size);
        CHECK(ell(G).class_coordinates() == ell_brute);

        // sum over (a, b) of a b a^-1 b^-1, divided per class
        std::vector<Rational> kappa_brute(G->class_count(), Rational(0));
        for (const auto& a : perms)
            for (const auto& b : perms) kappa_brute[class_of(G, cycle_type(a * b * a.inverse() * b.inverse()))] += 1;
        for (std::size_t c = 0; c < G->class_count(); ++c) kappa_brute[c] /= Rational(G->classes()[c].size);
        CHECK(kappa(G).class_coordinates() == kappa_brute);
    }
}

TEST_CASE("delta is diagonal in the idempotent basis") {
    GroupHandle G = symmetric_group(3);
    PairTensor t = delta(G);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t s = 0; s < 3; ++s) {
            Rational expected = r == s ? pow(Rational(G->order()) / Rational(G->dim(r)), 2) : Rational(0);
            CHECK(t.entries[r][s] == expected);
        }
}

TEST_CASE("mismatched groups are rejected") {
    auto a = unit(symmetric_group(3));
    auto b = unit(symmetric_group(4));
    CHECK_THROWS(multiply(a, b));
}
