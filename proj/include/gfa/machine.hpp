#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfa/automorph.hpp"
#include "gfa/field.hpp"

namespace gfa {

enum class OpKind { Add, Sub, Div, Gcp };

struct MachineOp {
    OpKind kind = OpKind::Add;
    int lhs = 0;  // data-field index, result slot for ring ops
    int rhs = 0;

    bool operator==(const MachineOp&) const = default;
};

std::string op_name(const MachineOp& op);

/// The (D, L, T, O) state: data fields, shared labels, pending ops,
/// applied-op log. Immutable; step/run return new states.
struct MachineState {
    std::vector<AdjacencyField> fields;
    LabelVector labels;
    std::deque<MachineOp> pending;
    std::vector<MachineOp> applied;
};

MachineState make_state(std::vector<AdjacencyField> fields,
                        std::vector<MachineOp> program);

struct StepError : std::runtime_error {
    StepError(const std::string& what, MachineState at)
        : std::runtime_error(what), state(std::move(at)) {}
    MachineState state;
};

MachineState step(const MachineState& s);
MachineState run(const MachineState& s);
std::vector<MachineState> branch(const MachineState& s, int k);

/// Applies a relabeling to the whole state: shared labels and every field.
MachineState relabel_state(const MachineState& s, const LabelVector& labels);

/// Quintuple automaton over graph symbols with an absorbing nihilation
/// state. Symbols are matched up to relabeling via canonical forms.
struct GraphAutomaton {
    std::vector<std::string> states;
    std::string start;
    std::string nihilation;
    std::set<std::string> accepting;
    std::map<std::string, AdjacencyField> alphabet;
    std::map<std::pair<std::string, std::string>, std::string> transitions;

    void validate() const;
};

struct TraceEntry {
    std::string from;
    std::string symbol;  // symbol name, or "?" for an unmatched input
    std::string to;
};

struct AutomatonResult {
    std::string final_state;
    bool accepted = false;
    std::vector<TraceEntry> trace;
};

AutomatonResult automaton_run(const GraphAutomaton& a,
                              const std::vector<AdjacencyField>& input);

/// Line-oriented description: states/start/accept/nihilation/symbol/trans
/// directives; symbols inline in the single-line field form.
GraphAutomaton parse_automaton(const std::string& text);
std::string serialize_automaton(const GraphAutomaton& a);

}  // namespace gfa
