#include "realhurwitz/series.hpp"

#include <doctest.h>

using namespace realhurwitz;

namespace {

Monomial mono(int degree, std::vector<Partition> branches, std::uint32_t ins = 0) {
    return Monomial{degree, std::move(branches), ins};
}

}  // namespace

TEST_CASE("divisibility") {
    Monomial top = mono(3, {Partition{2, 1}}, 0b11);
    CHECK(mono(1, {Partition{1}}, 0b01).divides(top));
    CHECK_FALSE(mono(1, {Partition{1, 1}}, 0).divides(top));
    CHECK_FALSE(mono(4, {Partition{}}, 0).divides(top));
    CHECK(mono(0, {Partition{}}, 0).is_constant());
}

TEST_CASE("exp of a single variable") {
    // exp(q) truncated at q^5 gives 1/n!
    MultiSeries s(mono(5, {}));
    s.add(mono(1, {}), 1);
    MultiSeries e = series_exp(s);
    for (int n = 0; n <= 5; ++n) CHECK(e.coefficient(mono(n, {})) == Rational(1, factorial(n)));
}

TEST_CASE("log inverts exp") {
    Monomial top = mono(4, {Partition{2, 1, 1}, Partition{3, 1}}, 0b1);
    MultiSeries s(top);
    s.add(mono(1, {Partition{1}, Partition{1}}), Rational(-1, 2));
    s.add(mono(2, {Partition{2}, Partition{}}), 3);
    s.add(mono(1, {Partition{}, Partition{1}}, 0b1), Rational(5, 7));
    s.add(mono(3, {Partition{2, 1}, Partition{3}}), Rational(1, 9));
    s.add(top, 11);
    CHECK(series_log(series_exp(s)) == s);

    MultiSeries one(top);
    one.add(mono(0, {Partition{}, Partition{}}), 1);
    CHECK(series_log(one + s) == series_log(one + s));
    CHECK(series_exp(series_log(one + s)) == one + s);
}

TEST_CASE("products keep only divisors and disjoint insertions") {
    Monomial top = mono(2, {}, 0b1);
    MultiSeries a(top);
    a.add(mono(1, {}, 0b1), 1);
    MultiSeries sq = a * a;
    CHECK(sq.terms().empty());
    MultiSeries b(top);
    b.add(mono(3, {}), 1);
    CHECK(b.terms().empty());
}

TEST_CASE("invalid constant terms") {
    MultiSeries s(mono(2, {}));
    s.add(mono(0, {}), 2);
    CHECK_THROWS_AS(series_log(s), ValidationError);
    CHECK_THROWS(series_exp(s));
}
