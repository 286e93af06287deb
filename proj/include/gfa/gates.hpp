#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "gfa/field.hpp"

namespace gfa {

/// A 4x4 field over Z_2 whose top-left 2x2 block is a two-input truth
/// table: eval(a, b) reads entry (a, b) of the block.
struct GateField {
    AdjacencyField field;
};

/// The literal matrix from the source construction. Under the block
/// convention it reads out as NAND; see nor_gate() for the 1,0,0,0 table.
GateField paper_nor_field();
GateField nor_gate();
GateField nand_gate();

int gate_eval(const GateField& g, int a, int b);

/// The four-row truth table (00, 01, 10, 11 order).
std::vector<int> truth_table(const GateField& g);

/// Relabel rows 2 and 4, then mirror the column labeling.
GateField paper_transformation(const GateField& g);

/// Acyclic wiring of two-input gates over named input terminals.
struct Circuit {
    struct Input {
        std::string name;
    };
    struct Gate {
        int lhs = 0;  // node indices
        int rhs = 0;
    };
    using Node = std::variant<Input, Gate>;

    GateField gate;
    std::vector<Node> nodes;
    int output = 0;
};

int compose(const Circuit& c, const std::map<std::string, int>& inputs);

struct CompletenessReport {
    std::string primitive;  // "NOR" or "NAND"
    std::map<std::string, std::vector<int>> tables;  // NOT, OR, AND, XOR
    bool all_verified = false;
    bool all16_reachable = false;
    int all16_depth = 0;
};

/// Builds NOT/OR/AND/XOR from the primitive alone and checks every truth
/// table exhaustively; also brute-forces all 16 two-input functions by
/// closing {a, b} under the primitive, depth <= 5.
CompletenessReport functional_completeness_suite(const GateField& primitive);

}  // namespace gfa
