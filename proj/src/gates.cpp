#include "gfa/gates.hpp"

#include <functional>
#include <stdexcept>

#include "gfa/automorph.hpp"

namespace gfa {

namespace {

GateField block_gate(int r00, int r01, int r10, int r11) {
    std::vector<std::vector<int>> entries{
        {r00, r01, 0, 0}, {r10, r11, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    return GateField{
        make_field(4, RingSpec{2}, std::move(entries), LabelVector::identity(4))};
}

}  // namespace

GateField paper_nor_field() { return block_gate(1, 1, 1, 0); }
GateField nor_gate() { return block_gate(1, 0, 0, 0); }
GateField nand_gate() { return block_gate(1, 1, 1, 0); }

int gate_eval(const GateField& g, int a, int b) {
    if ((a != 0 && a != 1) || (b != 0 && b != 1))
        throw std::invalid_argument("gate inputs must be bits");
    return g.field.entries[a][b];
}

std::vector<int> truth_table(const GateField& g) {
    return {gate_eval(g, 0, 0), gate_eval(g, 0, 1), gate_eval(g, 1, 0),
            gate_eval(g, 1, 1)};
}

GateField paper_transformation(const GateField& g) {
    auto swapped = apply_relabeling(g.field, swap_labels(g.field.labels, 2, 4));
    return GateField{mirror(swapped, Axis::Columns)};
}

int compose(const Circuit& c, const std::map<std::string, int>& inputs) {
    const int n = static_cast<int>(c.nodes.size());
    if (c.output < 0 || c.output >= n)
        throw std::invalid_argument("circuit output index out of range");
    enum { Unvisited, InProgress, Done };
    std::vector<int> mark(n, Unvisited), value(n, 0);
    std::function<int(int)> eval = [&](int idx) -> int {
        if (idx < 0 || idx >= n)
            throw std::invalid_argument("circuit wire index out of range");
        if (mark[idx] == Done) return value[idx];
        if (mark[idx] == InProgress)
            throw std::invalid_argument("circuit contains a cycle");
        mark[idx] = InProgress;
        int v;
        if (const auto* in = std::get_if<Circuit::Input>(&c.nodes[idx])) {
            auto it = inputs.find(in->name);
            if (it == inputs.end())
                throw std::invalid_argument("unwired input: " + in->name);
            v = it->second;
        } else {
            const auto& gate = std::get<Circuit::Gate>(c.nodes[idx]);
            v = gate_eval(c.gate, eval(gate.lhs), eval(gate.rhs));
        }
        mark[idx] = Done;
        return value[idx] = v;
    };
    return eval(c.output);
}

CompletenessReport functional_completeness_suite(const GateField& primitive) {
    const auto tt = truth_table(primitive);
    CompletenessReport report;
    if (tt == std::vector<int>{1, 0, 0, 0})
        report.primitive = "NOR";
    else if (tt == std::vector<int>{1, 1, 1, 0})
        report.primitive = "NAND";
    else
        throw std::invalid_argument("primitive is neither NOR nor NAND");

    auto p = [&](int x, int y) { return gate_eval(primitive, x, y); };
    auto not_fn = [&](int x) { return p(x, x); };
    for (int a : {0, 1}) report.tables["NOT"].push_back(not_fn(a));
    for (int a : {0, 1})
        for (int b : {0, 1}) {
            int or_v, and_v, xor_v;
            if (report.primitive == "NOR") {
                or_v = not_fn(p(a, b));
                and_v = p(not_fn(a), not_fn(b));
                const int t = p(a, b);
                xor_v = not_fn(p(p(a, t), p(b, t)));
            } else {
                and_v = not_fn(p(a, b));
                or_v = p(not_fn(a), not_fn(b));
                const int t = p(a, b);
                xor_v = p(p(a, t), p(b, t));
            }
            report.tables["OR"].push_back(or_v);
            report.tables["AND"].push_back(and_v);
            report.tables["XOR"].push_back(xor_v);
        }
    report.all_verified = report.tables["NOT"] == std::vector<int>{1, 0} &&
                          report.tables["OR"] == std::vector<int>{0, 1, 1, 1} &&
                          report.tables["AND"] == std::vector<int>{0, 0, 0, 1} &&
                          report.tables["XOR"] == std::vector<int>{0, 1, 1, 0};

    // Close {a, b} under the primitive; functions as 4-bit truth tables.
    auto combine = [&](unsigned f, unsigned g) {
        unsigned out = 0;
        for (int bit = 0; bit < 4; ++bit)
            if (p((f >> bit) & 1, (g >> bit) & 1)) out |= 1u << bit;
        return out;
    };
    std::vector<bool> known(16, false);
    known[0b1100] = true;  // projection a: rows 10,11 true
    known[0b1010] = true;  // projection b: rows 01,11 true
    int depth = 0;
    auto count_known = [&] {
        int c = 0;
        for (bool k : known) c += k;
        return c;
    };
    while (count_known() < 16 && depth < 5) {
        ++depth;
        auto snapshot = known;
        for (unsigned f = 0; f < 16; ++f)
            if (snapshot[f])
                for (unsigned g = 0; g < 16; ++g)
                    if (snapshot[g]) known[combine(f, g)] = true;
    }
    report.all16_reachable = count_known() == 16;
    report.all16_depth = depth;
    return report;
}

}  // namespace gfa
