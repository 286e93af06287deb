#include <doctest.h>

#include <functional>
#include <random>

#include "gfa/grammar.hpp"
#include "gfa/ski.hpp"

using namespace gfa;

namespace {

TermPtr random_term(std::mt19937_64& rng, int max_size) {
    if (max_size <= 1) {
        switch (rng() % 3) {
            case 0: return ski_s();
            case 1: return ski_k();
            default: return ski_i();
        }
    }
    if (rng() % 3 == 0) return random_term(rng, 1);
    const int left = 1 + static_cast<int>(rng() % (max_size - 1));
    return ski_app(random_term(rng, left), random_term(rng, max_size - 1 - left));
}

// Oracle strategy: rightmost-outermost redex first.
ReduceStepResult rightmost_step(const TermPtr& t) {
    if (t->kind != SkiTerm::Kind::App) return {t, false};
    auto right = rightmost_step(t->right);
    if (right.reduced) return {ski_app(t->left, right.term), true};
    auto left = rightmost_step(t->left);
    if (left.reduced) return {ski_app(left.term, t->right), true};
    return reduce_step(t);  // only a head redex can remain
}

std::pair<TermPtr, bool> rightmost_normalize(TermPtr t, int fuel) {
    for (int i = 0; i < fuel; ++i) {
        auto step = rightmost_step(t);
        if (!step.reduced) return {t, true};
        t = step.term;
    }
    return {t, rightmost_step(t).reduced == false};
}

}  // namespace

TEST_CASE("single reduction rules") {
    CHECK(term_equal(reduce_step(ski_app(ski_i(), ski_k())).term, ski_k()));
    CHECK(term_equal(reduce_step(parse_term("((K S) K)")).term, ski_s()));

    auto s_redex = parse_term("(((S K) K) S)");
    auto once = reduce_step(s_redex);
    CHECK(once.reduced);
    CHECK(print_term(once.term) == "((K S) (K S))");

    auto normal = ski_app(ski_k(), ski_s());
    CHECK(!reduce_step(normal).reduced);
}

TEST_CASE("SKK behaves as the identity") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 50; ++trial) {
        auto x = random_term(rng, 6);
        auto applied = ski_app(parse_term("((S K) K)"), x);
        auto result = normalize(applied, 500);
        auto expected = normalize(x, 500);
        if (!result.normalized || !expected.normalized) continue;
        CHECK(term_equal(result.term, expected.term));
    }
}

TEST_CASE("K discards its second argument") {
    std::mt19937_64 rng(56);
    for (int trial = 0; trial < 50; ++trial) {
        auto x = random_term(rng, 5);
        auto y = random_term(rng, 5);
        auto applied = ski_app(ski_app(ski_k(), x), y);
        auto result = normalize(applied, 500);
        auto expected = normalize(x, 500);
        if (!result.normalized || !expected.normalized) continue;
        CHECK(term_equal(result.term, expected.term));
    }
}

TEST_CASE("normalize fuel guard") {
    // (S I I) (S I I) reduces forever
    auto omega = ski_app(parse_term("((S I) I)"), parse_term("((S I) I)"));
    auto result = normalize(omega, 100);
    CHECK(!result.normalized);
    CHECK(normalize(ski_s(), 0).normalized);
}

TEST_CASE("normal forms agree with the rightmost-strategy oracle") {
    std::mt19937_64 rng(57);
    int compared = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto t = random_term(rng, 10);
        auto normal = normalize(t, 200);
        if (!normal.normalized) continue;
        auto [oracle, ok] = rightmost_normalize(t, 400);
        if (!ok) continue;
        CHECK(term_equal(normal.term, oracle));
        ++compared;
    }
    CHECK(compared > 50);
}

TEST_CASE("parser round trips and rejects malformed input") {
    for (const char* text : {"S", "K", "I", "(S K)", "((S K) (K I))"})
        CHECK(print_term(parse_term(text)) == text);
    CHECK_THROWS(parse_term(""));
    CHECK_THROWS(parse_term("(S"));
    CHECK_THROWS(parse_term("(S K) K"));
    CHECK_THROWS(parse_term("X"));
}

TEST_CASE("graph encoding") {
    auto leaf = encode_term_as_field(ski_s());
    CHECK(leaf.n == 1);
    CHECK(leaf.vertex_attrs.at(0).at("kind") == "S");

    auto ki = encode_term_as_field(parse_term("(K I)"));
    CHECK(ki.n == 3);
    int out_edges = 0;
    for (int j = 0; j < 3; ++j) out_edges += ki.entries[0][j];
    CHECK(out_edges == 2);

    SUBCASE("decode . encode is the identity, and encodings are trees") {
        std::mt19937_64 rng(58);
        for (int trial = 0; trial < 60; ++trial) {
            auto t = random_term(rng, 15);
            auto field = encode_term_as_field(t);
            CHECK(term_equal(decode_field_as_term(field), t));
            // vertex count = edge count + 1
            int edges = 0;
            for (const auto& row : field.entries)
                for (int v : row) edges += v;
            CHECK(field.n == edges + 1);
            // every leaf is an endpoint in the degree sense
            auto classes = classify_vertices(field);
            for (int v = 0; v < field.n; ++v)
                if (field.vertex_attrs.at(v).at("kind") != "app")
                    CHECK((field.n == 1 || classes[v].is_endpoint));
        }
    }

    CHECK_THROWS(encode_term_as_field(parse_term("(S K)"), 2));
}
