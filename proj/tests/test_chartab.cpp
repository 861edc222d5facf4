#include "realhurwitz/chartab.hpp"
#include "realhurwitz/symgrp.hpp"

#include <doctest.h>

#include <set>

using namespace realhurwitz;

namespace {

std::string data_file(const std::string& name) { return std::string(REALHURWITZ_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("S3 character table") {
    auto t = sym_char_table(3);
    // rows (3), (2,1), (1,1,1); columns likewise
    CHECK(t(0, 0) == 1);
    CHECK(t(1, 0) == -1);
    CHECK(t(1, 1) == 0);
    CHECK(t(1, 2) == 2);
    CHECK(t(2, 1) == -1);
}

TEST_CASE("Murnaghan-Nakayama agrees with the tabloid construction") {
    for (int d = 0; d <= 6; ++d) {
        auto t = sym_char_table(d);
        auto brute = brute_character_table(d);
        for (std::size_t mu = 0; mu < t.size(); ++mu)
            for (std::size_t c = 0; c < t.size(); ++c) CHECK(t(mu, c) == brute[mu][c]);
    }
}

TEST_CASE("column orthogonality") {
    for (int d = 1; d <= 8; ++d) {
        auto t = sym_char_table(d);
        for (std::size_t a = 0; a < t.size(); ++a)
            for (std::size_t b = 0; b < t.size(); ++b) {
                Integer s = 0;
                for (std::size_t mu = 0; mu < t.size(); ++mu) s += Integer(t(mu, a)) * Integer(t(mu, b));
                CHECK(s == (a == b ? z_lambda(t.partitions()[a]) : Integer(0)));
            }
    }
}

TEST_CASE("degree cap") {
    CHECK_THROWS_AS(sym_char_table(30), ResourceError);
    CHECK_NOTHROW(sym_char_table(0));
    CHECK(sym_char_table(0).size() == 1);
}

TEST_CASE("class data") {
    CHECK(z_lambda(Partition{2, 1, 1}) == 4);
    CHECK(class_size(Partition{2, 2}) == 3);
    CHECK(square_class(Partition{4}) == Partition{2, 2});
    CHECK(square_class(Partition{3}) == Partition{3});
    CHECK(square_class(Partition{2, 1}) == Partition{1, 1, 1});
    CHECK(square_class(Partition{6}) == Partition{3, 3});
}

TEST_CASE("f values") {
    // f of the transposition class is the content sum of mu
    CHECK(f_value(Partition{2, 1}, Partition{3}) == 3);
    CHECK(f_value(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK(f_value(Partition{2, 1}, Partition{1, 1, 1}) == -3);
    CHECK(f_extended(Partition{2}, Partition{3, 1}) == 2);
    CHECK(f_extended(Partition{3}, Partition{1, 1}) == 0);
    CHECK(f_extended(Partition{}, Partition{2, 1}) == 1);
    CHECK(f_extended(Partition{1}, Partition{2, 1}) == 3);
}

TEST_CASE("symmetric group spec") {
    auto G = GroupSpec::symmetric(4);
    CHECK(G.order() == 24);
    CHECK(G.class_count() == 5);
    CHECK(G.classes()[G.identity_class()].id == "1,1,1,1");
    auto sq = G.class_index("4");
    CHECK(G.classes()[G.classes()[sq].square].id == "2,2");
    std::size_t two_two = G.find_irrep("2,2").value();
    CHECK(G.is_symmetric_irrep(two_two));
    CHECK(G.irreducibles()[G.transpose_irrep(G.find_irrep("3,1").value())].id == "2,1,1");
    CHECK_THROWS_AS(G.class_index("5"), ValidationError);
    CHECK_NOTHROW(GroupSpec::symmetric(0));
    CHECK_NOTHROW(GroupSpec::symmetric(1));
}

TEST_CASE("bundled group files load") {
    for (const char* name : {"s3.json", "s4.json", "d4.json", "q8.json"}) {
        CAPTURE(name);
        CHECK_NOTHROW(load_group_spec_file(data_file(name)));
    }
    auto s4 = load_group_spec_file(data_file("s4.json"));
    auto sym = GroupSpec::symmetric(4);
    // same SFS multiset as the Murnaghan-Nakayama version
    std::multiset<Rational> a, b;
    for (std::size_t r = 0; r < 5; ++r) {
        a.insert(sfs_indicator(s4.row(r), s4));
        b.insert(sfs_indicator(sym.row(r), sym));
    }
    CHECK(a == b);
}

TEST_CASE("indicators on Q8 and D4") {
    auto q8 = load_group_spec_file(data_file("q8.json"));
    auto d4 = load_group_spec_file(data_file("d4.json"));
    std::size_t quat = q8.find_irrep("quaternion").value();
    std::size_t plane = d4.find_irrep("plane").value();
    CHECK(fs_indicator(q8.row(quat), q8) == -1);
    CHECK(fs_indicator(d4.row(plane), d4) == 1);
    CHECK(sfs_indicator(q8.row(quat), q8) == 1);
    CHECK(sfs_indicator(d4.row(plane), d4) == -1);
    for (const GroupSpec* g : {&q8, &d4})
        for (std::size_t r = 0; r < g->irrep_count(); ++r)
            CHECK(sfs_indicator(g->row(r), *g) + fs_indicator(g->row(r), *g) == fs_kernel_indicator(g->row(r), *g));
}

TEST_CASE("group spec validation errors") {
    const std::string good = R"({"order": 2,
        "classes": [{"id": "e", "size": 1, "epsilon": 1, "square": "e"},
                    {"id": "t", "size": 1, "epsilon": -1, "square": "e"}],
        "irreducibles": [{"id": "1", "character": {"e": 1, "t": 1}},
                         {"id": "s", "character": {"e": 1, "t": -1}}]})";
    CHECK_NOTHROW(load_group_spec(good));
    CHECK_THROWS_AS(load_group_spec("{"), ParseError);
    CHECK_THROWS_AS(load_group_spec(R"({"order": 2})"), ParseError);

    auto replaced = [&](const std::string& from, const std::string& to) {
        std::string s = good;
        s.replace(s.find(from), from.size(), to);
        return s;
    };
    // class sizes do not add up
    CHECK_THROWS_AS(load_group_spec(replaced(R"("order": 2)", R"("order": 3)")), ValidationError);
    // broken orthogonality
    CHECK_THROWS_AS(load_group_spec(replaced(R"({"e": 1, "t": -1})", R"({"e": 1, "t": 0})")), ValidationError);
    // trivial epsilon
    CHECK_THROWS_AS(load_group_spec(replaced(R"("epsilon": -1)", R"("epsilon": 1)")), ValidationError);
    // unknown square class
    CHECK_THROWS_AS(load_group_spec(replaced(R"("square": "e"}])", R"("square": "x"}])")), ValidationError);
    // non-reduced rational
    CHECK_THROWS(load_group_spec(replaced(R"({"e": 1, "t": 1})", R"({"e": "2/2", "t": 1})")));
    try {
        load_group_spec(replaced(R"({"e": 1, "t": -1})", R"({"e": 1, "t": 0})"));
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("orthogonality") != std::string::npos);
    }
}

TEST_CASE("group spec json round trip") {
    auto g = GroupSpec::symmetric(5);
    auto back = load_group_spec(to_json(g));
    CHECK(to_json(back) == to_json(g));
}
