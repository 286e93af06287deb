#include "gfa/random_mode.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gfa {

std::string move_name(const Move& m) {
    switch (m.kind) {
        case MoveKind::Cyclic: return "cyclic";
        case MoveKind::Mirror: return "mirror";
        case MoveKind::Swap: {
            std::ostringstream out;
            out << "swap(" << m.i << ',' << m.j << ')';
            return out.str();
        }
    }
    return "?";
}

MachineState apply_move(const MachineState& s, const Move& m) {
    switch (m.kind) {
        case MoveKind::Cyclic: return relabel_state(s, cyclic_shift(s.labels));
        case MoveKind::Mirror: return relabel_state(s, reversed(s.labels));
        case MoveKind::Swap:
            return relabel_state(s, swap_labels(s.labels, m.i, m.j));
    }
    throw std::invalid_argument("unknown move");
}

std::vector<Move> all_swap_moves(int n) {
    std::vector<Move> moves;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) moves.push_back({MoveKind::Swap, i, j});
    return moves;
}

VerifierSpec builtin_verifier(const std::string& name) {
    if (name == "sorted-labels")
        return {[](const MachineState& s) {
                    return s.labels == LabelVector::identity(s.labels.size());
                },
                "labels sorted ascending"};
    if (name == "always-true")
        return {[](const MachineState&) { return true; }, "always true"};
    if (name == "always-false")
        return {[](const MachineState&) { return false; }, "always false"};
    throw std::invalid_argument("unknown verifier: " + name);
}

namespace {

// Uniform index by rejection; avoids std::uniform_int_distribution, whose
// output differs between standard libraries.
std::size_t uniform_index(std::mt19937_64& rng, std::size_t count) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % count;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return static_cast<std::size_t>(r % count);
}

}  // namespace

SearchResult random_search(const MachineState& start,
                           const std::vector<Move>& moves,
                           const VerifierSpec& verifier,
                           const SearchConfig& cfg) {
    if (moves.empty()) throw std::invalid_argument("empty move set");
    if (cfg.mode == SearchMode::MonteCarlo && !cfg.max_trials)
        throw std::invalid_argument("Monte Carlo mode requires finite max_trials");
    SearchResult result;
    MachineState current = start;
    if (verifier.predicate(current)) {
        result.found = current;
        result.verified = true;
        return result;
    }
    std::mt19937_64 rng(cfg.seed);
    while (!cfg.max_trials || result.trials < *cfg.max_trials) {
        const Move& move = moves[uniform_index(rng, moves.size())];
        current = apply_move(current, move);
        result.trace.push_back(move);
        ++result.trials;
        if (verifier.predicate(current)) {
            result.found = current;
            result.verified = true;
            return result;
        }
    }
    // Exhausted. Monte Carlo still reports the state it reached.
    if (cfg.mode == SearchMode::MonteCarlo) result.found = current;
    return result;
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (num < 0 || den < 0) throw std::invalid_argument("negative weight");
    const long long g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

TransitionDensity::TransitionDensity(
    std::vector<std::pair<std::string, Rational>> weights)
    : weights_(std::move(weights)) {
    if (weights_.empty()) throw std::invalid_argument("empty weight map");
    Rational total;
    for (const auto& [name, w] : weights_) {
        total = total + w;
        const unsigned __int128 scaled =
            (static_cast<unsigned __int128>(total.num) << 64) / total.den;
        thresholds_.push_back(scaled);
    }
    if (!(total == Rational(1, 1)))
        throw std::invalid_argument("weights must sum to exactly 1");
}

const std::string& TransitionDensity::sample(std::mt19937_64& rng) const {
    const std::uint64_t draw = rng();
    for (std::size_t i = 0; i < thresholds_.size(); ++i)
        if (draw < thresholds_[i]) return weights_[i].first;
    return weights_.back().first;
}

std::vector<std::string> TransitionDensity::sample_sequence(
    std::uint64_t seed, std::size_t count) const {
    std::mt19937_64 rng(seed);
    std::vector<std::string> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(sample(rng));
    return out;
}

}  // namespace gfa
