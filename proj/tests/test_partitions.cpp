#include "realhurwitz/partitions.hpp"

#include <doctest.h>

#include <set>

using namespace realhurwitz;

TEST_CASE("rationals print reduced") {
    CHECK(to_string(Rational(6, 4)) == "6/4");
    Rational x(6, 4);
    x.canonicalize();
    CHECK(to_string(x) == "3/2");
    CHECK(to_string(Rational(-2)) == "-2");
    CHECK(to_string(Rational(-2), true) == "-2/1");
    CHECK(parse_rational("-10/4") == Rational(-5, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK_THROWS_AS(pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("partition counts") {
    // p(n) for n = 0..12
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(expected[n]));
}

TEST_CASE("canonical order is reverse lexicographic") {
    auto ps = partitions_of(4);
    REQUIRE(ps.size() == 5);
    CHECK(ps[0] == Partition{4});
    CHECK(ps[1] == Partition{3, 1});
    CHECK(ps[2] == Partition{2, 2});
    CHECK(ps[3] == Partition{2, 1, 1});
    CHECK(ps[4] == Partition{1, 1, 1, 1});
}

TEST_CASE("transpose, diagonal and sign") {
    CHECK(transpose(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
    CHECK(transpose(Partition{}) == Partition{});
    for (int n = 0; n <= 9; ++n)
        for (const auto& p : partitions_of(n)) {
            CHECK(transpose(transpose(p)) == p);
            CHECK(diagonal_length(p) == diagonal_length(transpose(p)));
        }
    CHECK(is_symmetric(Partition{2, 1}));
    CHECK_FALSE(is_symmetric(Partition{2}));
    CHECK(diagonal_length(Partition{3, 3, 2}) == 2);
    CHECK(parity_sign(Partition{2}) == -1);
    CHECK(parity_sign(Partition{3}) == 1);
    CHECK(parity_sign(Partition{2, 2}) == 1);
    CHECK(m1(Partition{3, 1, 1}) == 2);
}

TEST_CASE("hook length dimensions") {
    CHECK(dimension(Partition{}) == 1);
    CHECK(dimension(Partition{2, 1}) == 2);
    CHECK(dimension(Partition{3, 2}) == 5);
    CHECK(dimension(Partition{3, 2, 1}) == 16);
    for (int n = 0; n <= 8; ++n) {
        Integer total = 0;
        for (const auto& p : partitions_of(n)) total += dimension(p) * dimension(p);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("splittings enumerate each ordered pair once") {
    Partition lambda{2, 1, 1};
    auto s = splittings(lambda);
    std::set<std::pair<Partition, Partition>> seen(s.begin(), s.end());
    CHECK(seen.size() == s.size());
    // sub-multisets of {2,1,1}: 2 choices for the 2 times 3 for the ones
    CHECK(s.size() == 6);
    for (const auto& [plus, minus] : s) CHECK(plus.merged(minus) == lambda);
    CHECK(submultisets(lambda).size() == 6);
    CHECK(is_submultiset(Partition{1, 1}, lambda));
    CHECK_FALSE(is_submultiset(Partition{2, 2}, lambda));
}

TEST_CASE("partition text round trip") {
    CHECK(parse_partition("1,3,2") == Partition{3, 2, 1});
    CHECK(parse_partition("-") == Partition{});
    CHECK(parse_partition("") == Partition{});
    CHECK(to_string(Partition{}) == "-");
    CHECK(to_paren_string(Partition{2, 1}) == "(2,1)");
    CHECK_THROWS_AS(parse_partition("2,0"), ParseError);
    CHECK_THROWS_AS(parse_partition("2,a"), ParseError);
    CHECK_THROWS_AS(Partition(std::vector<int>{3, -1}), ValidationError);
}
