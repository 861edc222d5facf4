#include "realhurwitz/hurwitz.hpp"
#include "realhurwitz/symgrp.hpp"

#include <doctest.h>

using namespace realhurwitz;

namespace {

std::string data_file(const std::string& name) { return std::string(REALHURWITZ_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("projective line base values") {
    for (int d : {1, 3, 5, 7}) CHECK(real_connected(0, d, {Partition{d}}) == Rational(1, d));
    for (int d : {2, 4, 6}) CHECK(real_connected(0, d, {Partition{d}}) == 0);
    for (int h = 1; h <= 4; ++h) {
        CHECK(real_connected(0, 2 * h, {Partition{h, h}}) == Rational(-1, 2 * h));
        CHECK(doublet_contribution(0, 2 * h, {Partition{h, h}}) == Rational(-1, 2 * h));
        CHECK(connected_surface_contribution(0, 2 * h, {Partition{h, h}}) == 0);
    }
    CHECK(real_disconnected(0, 2, {Partition{2}, Partition{2}}) == 0);
    CHECK(complex_disconnected(0, 2, {Partition{2}, Partition{2}, Partition{2}, Partition{2}}) == Rational(1, 2));
}

TEST_CASE("profiles must match the degree") {
    CHECK_THROWS_AS(real_disconnected(0, 3, {Partition{4}}), ValidationError);
    CHECK_THROWS_AS(complex_disconnected(0, 3, {Partition{2}}), ValidationError);
    CHECK_THROWS(real_disconnected(-1, 3, {}));
}

TEST_CASE("operator product on S_d") {
    for (int d = 1; d <= 5; ++d)
        for (const auto& a : partitions_of(d))
            for (int g = 0; g <= 4; ++g)
                for (int h = 0; 2 * h <= g; ++h) {
                    CAPTURE(d);
                    CAPTURE(g);
                    CAPTURE(h);
                    CHECK(real_disconnected_via_operator(g, d, {a}, h) == real_disconnected(g, d, {a}));
                }
}

TEST_CASE("generic formulas specialise to S_d") {
    for (int d = 1; d <= 5; ++d) {
        GroupHandle G = symmetric_group(d);
        for (const auto& a : partitions_of(d))
            for (int g = 0; g <= 2; ++g) {
                ClassList cls{G->class_index(to_string(a))};
                CHECK(real_disconnected_generic(G, g, cls) == real_disconnected(g, d, {a}));
                CHECK(complex_disconnected_generic(G, g, cls) == complex_disconnected(g, d, {a}));
            }
    }
}

TEST_CASE("Q8 and D4: closed formula against the operator product") {
    for (const char* name : {"q8.json", "d4.json", "s3.json", "s4.json"}) {
        CAPTURE(name);
        GroupHandle G = make_group(load_group_spec_file(data_file(name)));
        for (std::size_t a = 0; a < G->class_count(); ++a)
            for (std::size_t b = 0; b < G->class_count(); ++b)
                for (int g = 0; g <= 3; ++g)
                    for (int h = 0; 2 * h <= g; ++h)
                        CHECK(real_disconnected_operator_generic(G, h, g - 2 * h, {a, b}) ==
                              real_disconnected_generic(G, g, {a, b}));
    }
}

TEST_CASE("Q8 projective plane count") {
    // sum over x of eps(x) [x^2 = 1] / #G = (1 + 1) / 8
    GroupHandle G = make_group(load_group_spec_file(data_file("q8.json")));
    CHECK(real_disconnected_generic(G, 0, {}) == Rational(1, 4));
    GroupHandle D = make_group(load_group_spec_file(data_file("d4.json")));
    // D4: e, r2 with eps +1, the four reflections with eps -1
    CHECK(real_disconnected_generic(D, 0, {}) == Rational(-1, 4));
}

TEST_CASE("connected numbers against the transitive oracle") {
    for (int d = 1; d <= 4; ++d)
        for (const auto& a : partitions_of(d))
            for (const auto& b : partitions_of(d))
                for (int g = 0; g <= 1; ++g) {
                    OracleQuery q;
                    q.crosscaps = g + 1;
                    q.degree = d;
                    q.profiles = {a, b};
                    q.transitive_only = true;
                    CHECK(oracle_real_disconnected(q) == real_connected(g, d, {a, b}));
                    CHECK(oracle_complex_connected(g, d, {a, b}) == complex_connected(g, d, {a, b}));
                }
}

TEST_CASE("doublet numbers") {
    Profiles ps{Partition{2, 1}, Partition{2, 1}, Partition{3}};
    Rational base = complex_disconnected(1, 3, ps);
    CHECK(doublet(1, 3, ps, {}) == base);
    CHECK(doublet(1, 3, ps, {0}) == -base);
    CHECK(doublet(1, 3, ps, {0, 1}) == base);
    CHECK(doublet(1, 3, ps, {2}) == base);
    CHECK_THROWS(doublet(1, 3, ps, {5}));
}

TEST_CASE("doublet contribution does not depend on the choice") {
    Profiles ps{Partition{2, 2}, Partition{1, 1, 1, 1}, Partition{3, 1}};
    Rational first = doublet_contribution(1, 4, ps, {1, 1, 1});
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<int> choice{mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1};
        CHECK(doublet_contribution(1, 4, ps, choice) == first);
    }
    CHECK(doublet_contribution(1, 4, {Partition{2, 1, 1}}) == 0);
    CHECK_THROWS_AS(doublet_contribution(0, 3, {Partition{3}}), ValidationError);
    CHECK(connected_surface_contribution(0, 3, {Partition{3}}) == Rational(1, 3));
}

TEST_CASE("degeneration checks") {
    GroupHandle G = symmetric_group(4);
    ClassList a{G->class_index("2,2")}, b{G->class_index("3,1")};
    for (char t : {'a', 'b'}) CHECK(check_degeneration(t, G, 2, 0, a, b).equal);
    CHECK(check_degeneration('c', G, 2, 0, a).equal);
    CHECK(check_degeneration('d', G, 3, 0, a).equal);
    CHECK_THROWS(check_degeneration('d', G, 2, 0, a));
    CHECK_THROWS(check_degeneration('x', G, 2, 0, a));
}

TEST_CASE("self-conjugate partitions") {
    for (int d = 0; d <= 20; ++d) CHECK(symmetric_diagram_identity(d).equal);
    CHECK(symmetric_diagram_identity(9).lhs == 2);
}
