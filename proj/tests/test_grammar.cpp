#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gfa/grammar.hpp"
#include "helpers.hpp"

using namespace gfa;
using testutil::load_fixture;
using testutil::random_field;
using testutil::random_labels;

TEST_CASE("canonical_start_vertices follows the preference rules") {
    auto path = load_fixture("path3.field");
    CHECK(canonical_start_vertices(path) == std::vector<int>{0, 2});

    auto triangle = load_fixture("triangle.field");
    CHECK(canonical_start_vertices(triangle) == std::vector<int>{0, 1, 2});

    auto star = make_field(4, RingSpec{2},
                           {{0, 1, 1, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}},
                           LabelVector::identity(4));
    CHECK(canonical_start_vertices(star) == std::vector<int>{1, 2, 3});

    SUBCASE("endpoints always win") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 60; ++trial) {
            auto f = random_field(rng, 1 + rng() % 7);
            auto classes = classify_vertices(f);
            const bool has_endpoint =
                std::any_of(classes.begin(), classes.end(),
                            [](const auto& c) { return c.is_endpoint; });
            if (!has_endpoint) continue;
            for (int v : canonical_start_vertices(f)) CHECK(classes[v].is_endpoint);
        }
    }
}

TEST_CASE("canonical_label") {
    auto single = make_field(1, RingSpec{2}, {{0}}, LabelVector::identity(1));
    CHECK(canonical_label(single) == LabelVector({1}));

    auto path = load_fixture("path3.field");
    for (auto labels : {LabelVector({2, 3, 1}), LabelVector({3, 1, 2})})
        CHECK(serialize(apply_relabeling(path, labels)) == serialize(path));

    std::mt19937_64 rng(1);
    CHECK_THROWS(canonical_label(random_field(rng, 9)));
}

TEST_CASE("serialize") {
    CHECK(serialize(std::optional<AdjacencyField>{}) == kNullGraphToken);

    auto single = make_field(1, RingSpec{2}, {{0}}, LabelVector::identity(1));
    CHECK(serialize(single) == "1 2 / 1 / 0");

    auto nor = load_fixture("nor.field");
    CHECK(serialize(nor) == testutil::slurp_fixture("nor.canon.golden"));
}

TEST_CASE("parse") {
    CHECK(!parse("ø"));
    CHECK(!parse("  "));

    auto parsed = parse("3 2 / 1 2 3 / 0 1 0 / 1 0 1 / 0 1 0");
    REQUIRE(parsed);
    CHECK(parsed->entries == load_fixture("path3.field").entries);

    CHECK_THROWS(parse("3 2 / 1 2 3 / 0 1"));
    CHECK_THROWS(parse("2 2 / 1 2 / 0 5 / 0 0"));
    CHECK_THROWS(parse("2 2 / 1 1 / 0 0 / 0 0"));
}

TEST_CASE("a graph presented under different vertex names serializes identically") {
    // path 2-1-3: same shape as 1-2-3, different naming
    auto renamed = make_field(3, RingSpec{2},
                              {{0, 1, 1}, {1, 0, 0}, {1, 0, 0}},
                              LabelVector::identity(3));
    CHECK(serialize(renamed) == serialize(load_fixture("path3.field")));
}

TEST_CASE("round trip and relabeling invariance") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 1 + rng() % 8;
        auto f = random_field(rng, n, 2, true);
        auto back = parse(serialize(f));
        REQUIRE(back);
        CHECK(is_isomorphic(*back, f));
    }

    SUBCASE("serialize is constant across all relabelings, n <= 4 exhaustive") {
        for (int trial = 0; trial < 10; ++trial) {
            const int n = 2 + rng() % 3;
            auto f = random_field(rng, n);
            const auto expected = serialize(f);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 1);
            do {
                CHECK(serialize(apply_relabeling(f, LabelVector(perm))) == expected);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }

    SUBCASE("attributes survive the round trip") {
        auto f = random_field(rng, 4);
        f.vertex_attrs[2]["color"] = "red";
        auto back = parse(serialize(f));
        REQUIRE(back);
        bool found = false;
        for (const auto& [v, kv] : back->vertex_attrs)
            if (kv.count("color") && kv.at("color") == "red") found = true;
        CHECK(found);
    }
}
