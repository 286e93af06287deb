#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gfa/machine.hpp"

namespace gfa {

enum class MoveKind { Cyclic, Swap, Mirror };

struct Move {
    MoveKind kind = MoveKind::Cyclic;
    int i = 0;  // 1-based swap positions
    int j = 0;
};

std::string move_name(const Move& m);
MachineState apply_move(const MachineState& s, const Move& m);

/// All pairwise swap moves plus nothing else; the usual search move set.
std::vector<Move> all_swap_moves(int n);

struct VerifierSpec {
    std::function<bool(const MachineState&)> predicate;
    std::string description;
};

/// Built-ins selectable by name: sorted-labels, always-true, always-false.
VerifierSpec builtin_verifier(const std::string& name);

enum class SearchMode { LasVegas, MonteCarlo };

struct SearchConfig {
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> max_trials;  // required for Monte Carlo
    SearchMode mode = SearchMode::LasVegas;
};

struct SearchResult {
    std::optional<MachineState> found;  // Las Vegas: only if verified
    bool verified = false;
    std::uint64_t trials = 0;
    std::vector<Move> trace;
};

/// Seeded random walk over the move set, tested by the verifier after each
/// move. Las Vegas returns the first verified state or reports exhaustion;
/// Monte Carlo returns the last state reached with a verified flag. The
/// generator is mt19937_64 with rejection-sampled uniform indices, so
/// traces are reproducible bit-for-bit under a fixed seed.
SearchResult random_search(const MachineState& start,
                           const std::vector<Move>& moves,
                           const VerifierSpec& verifier,
                           const SearchConfig& cfg);

/// Exact rational weight, normalized, non-negative.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    bool operator==(const Rational&) const = default;
};

Rational operator+(const Rational& a, const Rational& b);

/// Deterministic-under-seed sampler over named symbols with exact rational
/// weights summing to 1.
class TransitionDensity {
public:
    explicit TransitionDensity(
        std::vector<std::pair<std::string, Rational>> weights);

    const std::string& sample(std::mt19937_64& rng) const;
    std::vector<std::string> sample_sequence(std::uint64_t seed,
                                             std::size_t count) const;

private:
    std::vector<std::pair<std::string, Rational>> weights_;
    std::vector<unsigned __int128> thresholds_;  // cumulative * 2^64
};

}  // namespace gfa
