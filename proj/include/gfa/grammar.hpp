#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfa/field.hpp"

namespace gfa {

/// Canonical single-line text form of a graph, fields separated by " / ".
/// The empty graph is the null string token.
using GraphString = std::string;

inline constexpr const char* kNullGraphToken = "ø";

/// Labeling-preference rule: endpoints if any, else polar vertices if any,
/// else every vertex. Returns 0-based positions.
std::vector<int> canonical_start_vertices(const AdjacencyField& f);

/// Deterministic canonical labeling, n <= 8: breadth-first order from the
/// candidate start whose serialized string is lexicographically minimal,
/// ties broken by the smaller vertex label.
LabelVector canonical_label(const AdjacencyField& f);

GraphString serialize(const AdjacencyField& f);
GraphString serialize(const std::optional<AdjacencyField>& f);

std::optional<AdjacencyField> parse(const GraphString& s);

}  // namespace gfa
