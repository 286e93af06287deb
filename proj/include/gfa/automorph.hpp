#pragma once

#include <string>
#include <vector>

#include "gfa/field.hpp"

namespace gfa {

enum class Axis { Rows, Columns };

/// A permutation of positions together with the generator word that built it.
struct GroupElement {
    LabelVector mapping;            // one-line notation over {1..n}
    std::vector<std::string> word;  // generator names, identity has ()
};

struct GeneratorSet {
    bool cyclic = false;
    bool mirror = false;
    bool adjacent_swaps = false;
};

/// Left rotation: each position takes its successor, the last takes the
/// saved first value.
LabelVector cyclic_shift(const LabelVector& c);

/// Exchanges the values at 1-based positions i and j.
LabelVector swap_labels(const LabelVector& c, int i, int j);

LabelVector reversed(const LabelVector& c);

/// Reverses row (or column) order together with the label order. Rows and
/// columns share one label vector, so either axis yields the same
/// simultaneous relabeling and the underlying graph is unchanged.
AdjacencyField mirror(const AdjacencyField& f, Axis axis);

/// Breadth-first closure of the chosen generators, n <= 6. Elements are
/// ordered by word length, then lexicographic word.
std::vector<GroupElement> generate_group(int n, const GeneratorSet& generators,
                                         int cap = 5040);

/// Lexicographically smallest matrix (then labels) in f's orbit under the
/// group's relabelings.
AdjacencyField canonical_form(const AdjacencyField& f,
                              const std::vector<GroupElement>& group);

/// Full symmetric group S_n via adjacent-swap closure.
std::vector<GroupElement> symmetric_group(int n);

std::string cycle_notation(const LabelVector& mapping);

}  // namespace gfa
