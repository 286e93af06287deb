#include "gfa/machine.hpp"

#include <algorithm>
#include <sstream>

#include "gfa/grammar.hpp"

namespace gfa {

std::string op_name(const MachineOp& op) {
    switch (op.kind) {
        case OpKind::Add: return "+";
        case OpKind::Sub: return "-";
        case OpKind::Div: return "/";
        case OpKind::Gcp: return "GCP";
    }
    return "?";
}

MachineState make_state(std::vector<AdjacencyField> fields,
                        std::vector<MachineOp> program) {
    if (fields.empty()) throw std::invalid_argument("state needs at least one field");
    for (const auto& f : fields) {
        if (f.n != fields[0].n || !(f.ring == fields[0].ring))
            throw std::invalid_argument("data fields must share n and ring");
        if (!(f.labels == fields[0].labels))
            throw std::invalid_argument("data fields must share the label vector");
    }
    MachineState s;
    s.labels = fields[0].labels;
    s.fields = std::move(fields);
    s.pending.assign(program.begin(), program.end());
    return s;
}

MachineState relabel_state(const MachineState& s, const LabelVector& labels) {
    MachineState out = s;
    out.labels = labels;
    for (auto& f : out.fields) f = apply_relabeling(f, labels);
    return out;
}

MachineState step(const MachineState& s) {
    if (s.pending.empty()) throw StepError("step on empty pending-op list", s);
    const MachineOp op = s.pending.front();
    MachineState out = s;
    out.pending.pop_front();
    try {
        if (op.kind == OpKind::Gcp) {
            out = relabel_state(out, cyclic_shift(out.labels));
        } else {
            const int nf = static_cast<int>(out.fields.size());
            if (op.lhs < 0 || op.lhs >= nf || op.rhs < 0 || op.rhs >= nf)
                throw std::invalid_argument("operand index out of range");
            RingOp ring_op = op.kind == OpKind::Add   ? RingOp::Add
                             : op.kind == OpKind::Sub ? RingOp::Sub
                                                      : RingOp::Div;
            out.fields[op.lhs] =
                entrywise_op(out.fields[op.lhs], out.fields[op.rhs], ring_op);
        }
    } catch (const StepError&) {
        throw;
    } catch (const std::exception& e) {
        throw StepError(std::string("op ") + op_name(op) + " failed: " + e.what(), s);
    }
    out.applied.push_back(op);
    return out;
}

MachineState run(const MachineState& s) {
    MachineState cur = s;
    while (!cur.pending.empty()) cur = step(cur);
    return cur;
}

std::vector<MachineState> branch(const MachineState& s, int k) {
    if (k < 1) throw std::invalid_argument("branch count must be >= 1");
    return std::vector<MachineState>(k, s);
}

void GraphAutomaton::validate() const {
    auto known = [&](const std::string& id) {
        return std::find(states.begin(), states.end(), id) != states.end();
    };
    if (!known(start)) throw std::invalid_argument("start state unknown");
    if (!known(nihilation)) throw std::invalid_argument("nihilation state unknown");
    for (const auto& id : accepting)
        if (!known(id)) throw std::invalid_argument("accepting state unknown: " + id);
    for (const auto& [key, to] : transitions) {
        if (!known(key.first) || !known(to))
            throw std::invalid_argument("transition references unknown state");
        if (!alphabet.count(key.second))
            throw std::invalid_argument("transition references unknown symbol: " +
                                        key.second);
        if (key.first == nihilation && to != nihilation)
            throw std::invalid_argument("nihilation must be absorbing");
    }
}

AutomatonResult automaton_run(const GraphAutomaton& a,
                              const std::vector<AdjacencyField>& input) {
    a.validate();
    // Canonical forms make symbol lookup label-invariant.
    std::vector<std::pair<std::string, AdjacencyField>> canon;
    for (const auto& [name, field] : a.alphabet)
        canon.emplace_back(name, canonical_form(field, symmetric_group(field.n)));
    AutomatonResult result;
    std::string state = a.start;
    for (const auto& g : input) {
        auto gc = canonical_form(g, symmetric_group(g.n));
        std::string symbol = "?";
        for (const auto& [name, c] : canon)
            if (c.same_graph(gc)) {
                symbol = name;
                break;
            }
        std::string to = a.nihilation;
        if (symbol != "?") {
            auto it = a.transitions.find({state, symbol});
            if (it != a.transitions.end()) to = it->second;
        }
        result.trace.push_back({state, symbol, to});
        state = to;
    }
    result.final_state = state;
    result.accepted = a.accepting.count(state) > 0;
    return result;
}

GraphAutomaton parse_automaton(const std::string& text) {
    GraphAutomaton a;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string directive;
        if (!(ls >> directive) || directive[0] == '#') continue;
        auto fail = [&](const std::string& msg) {
            throw std::invalid_argument("automaton line " + std::to_string(lineno) +
                                        ": " + msg);
        };
        if (directive == "states") {
            std::string id;
            while (ls >> id) a.states.push_back(id);
        } else if (directive == "start") {
            if (!(ls >> a.start)) fail("missing start state");
        } else if (directive == "nihilation") {
            if (!(ls >> a.nihilation)) fail("missing nihilation state");
        } else if (directive == "accept") {
            std::string id;
            while (ls >> id) a.accepting.insert(id);
        } else if (directive == "symbol") {
            std::string name;
            if (!(ls >> name)) fail("missing symbol name");
            std::string rest;
            std::getline(ls, rest);
            auto parsed = parse(rest);
            if (!parsed) fail("symbol needs a non-empty graph");
            a.alphabet.emplace(name, *parsed);
        } else if (directive == "trans") {
            std::string from, symbol, to;
            if (!(ls >> from >> symbol >> to)) fail("trans needs: from symbol to");
            a.transitions[{from, symbol}] = to;
        } else {
            fail("unknown directive '" + directive + "'");
        }
    }
    a.validate();
    return a;
}

std::string serialize_automaton(const GraphAutomaton& a) {
    std::ostringstream out;
    out << "states";
    for (const auto& id : a.states) out << ' ' << id;
    out << "\nstart " << a.start << "\nnihilation " << a.nihilation << "\naccept";
    for (const auto& id : a.accepting) out << ' ' << id;
    out << '\n';
    for (const auto& [name, field] : a.alphabet)
        out << "symbol " << name << ' ' << serialize(field) << '\n';
    for (const auto& [key, to] : a.transitions)
        out << "trans " << key.first << ' ' << key.second << ' ' << to << '\n';
    return out.str();
}

}  // namespace gfa
