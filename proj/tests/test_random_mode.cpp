#include <doctest.h>

#include <cmath>

#include "gfa/random_mode.hpp"
#include "helpers.hpp"

using namespace gfa;
using testutil::random_field;

namespace {

MachineState state_with_labels(std::vector<int> labels) {
    const int n = static_cast<int>(labels.size());
    std::mt19937_64 rng(99);
    auto f = random_field(rng, n);
    f = apply_relabeling(f, LabelVector(std::move(labels)));
    return make_state({f}, {});
}

}  // namespace

TEST_CASE("las vegas search finds the sorted labeling") {
    auto start = state_with_labels({3, 1, 4, 2});
    auto verifier = builtin_verifier("sorted-labels");
    for (std::uint64_t seed : {1u, 7u, 42u}) {
        SearchConfig cfg{seed, std::nullopt, SearchMode::LasVegas};
        auto result = random_search(start, all_swap_moves(4), verifier, cfg);
        REQUIRE(result.found);
        CHECK(result.verified);
        CHECK(result.found->labels == LabelVector::identity(4));
        CHECK(verifier.predicate(*result.found));
    }
}

TEST_CASE("already-verified start returns after zero trials") {
    auto start = state_with_labels({2, 1});
    auto result = random_search(start, all_swap_moves(2),
                                builtin_verifier("always-true"),
                                SearchConfig{0, std::nullopt, SearchMode::LasVegas});
    CHECK(result.trials == 0);
    CHECK(result.verified);
    CHECK(result.trace.empty());
}

TEST_CASE("monte carlo exhausts exactly max_trials") {
    auto start = state_with_labels({1, 2, 3});
    auto result = random_search(start, all_swap_moves(3),
                                builtin_verifier("always-false"),
                                SearchConfig{5, 100, SearchMode::MonteCarlo});
    CHECK(result.trials == 100);
    CHECK(!result.verified);
    REQUIRE(result.found);  // best-so-far is still reported
    CHECK(result.trace.size() == 100);
}

TEST_CASE("monte carlo requires a trial bound") {
    auto start = state_with_labels({1, 2});
    CHECK_THROWS(random_search(start, all_swap_moves(2),
                               builtin_verifier("always-false"),
                               SearchConfig{0, std::nullopt, SearchMode::MonteCarlo}));
    CHECK_THROWS(random_search(start, {}, builtin_verifier("always-true"),
                               SearchConfig{}));
}

TEST_CASE("identical seeds give identical traces") {
    auto start = state_with_labels({4, 3, 2, 1});
    SearchConfig cfg{123, 50, SearchMode::MonteCarlo};
    auto verifier = builtin_verifier("always-false");
    auto a = random_search(start, all_swap_moves(4), verifier, cfg);
    auto b = random_search(start, all_swap_moves(4), verifier, cfg);
    REQUIRE(a.trace.size() == b.trace.size());
    for (size_t i = 0; i < a.trace.size(); ++i)
        CHECK(move_name(a.trace[i]) == move_name(b.trace[i]));
    CHECK(a.found->labels == b.found->labels);
}

TEST_CASE("trace replay reaches the reported state") {
    auto start = state_with_labels({2, 4, 1, 3});
    std::vector<Move> moves = all_swap_moves(4);
    moves.push_back({MoveKind::Cyclic});
    moves.push_back({MoveKind::Mirror});
    auto result = random_search(start, moves, builtin_verifier("sorted-labels"),
                                SearchConfig{77, std::nullopt, SearchMode::LasVegas});
    REQUIRE(result.found);
    auto replay = start;
    for (const auto& m : result.trace) replay = apply_move(replay, m);
    CHECK(replay.labels == result.found->labels);
    CHECK(replay.fields[0].entries == result.found->fields[0].entries);
}

TEST_CASE("transition density") {
    SUBCASE("single symbol") {
        TransitionDensity d({{"only", Rational(1, 1)}});
        std::mt19937_64 rng(0);
        for (int i = 0; i < 20; ++i) CHECK(d.sample(rng) == "only");
    }

    SUBCASE("fair coin frequency and reproducibility") {
        TransitionDensity d({{"h", Rational(1, 2)}, {"t", Rational(1, 2)}});
        auto seq = d.sample_sequence(2024, 10000);
        CHECK(seq == d.sample_sequence(2024, 10000));
        const double heads =
            std::count(seq.begin(), seq.end(), "h") / 10000.0;
        CHECK(std::abs(heads - 0.5) < 0.05);
    }

    SUBCASE("weights must sum to exactly 1") {
        CHECK_THROWS(TransitionDensity(
            {{"a", Rational(1, 3)}, {"b", Rational(1, 3)}, {"c", Rational(1, 2)}}));
        CHECK_THROWS(TransitionDensity({{"a", Rational(-1, 2)}, {"b", Rational(3, 2)}}));
        CHECK_THROWS(TransitionDensity({}));
    }
}
