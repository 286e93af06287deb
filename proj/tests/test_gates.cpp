#include <doctest.h>

#include "gfa/automorph.hpp"
#include "gfa/gates.hpp"
#include "helpers.hpp"

using namespace gfa;
using testutil::load_fixture;

TEST_CASE("paper_nor_field matches the committed fixture byte for byte") {
    auto gate = paper_nor_field();
    CHECK(write_field_text(gate.field) == testutil::slurp_fixture("nor.field"));
    CHECK(gate.field.entries[0][0] == 1);
    CHECK(gate.field.entries[0][1] == 1);
    CHECK(gate.field.entries[1][0] == 1);
    CHECK(gate.field.entries[1][1] == 0);
    CHECK(gate.field.ring.modulus == 2);
}

TEST_CASE("gate_eval reads the 2x2 block") {
    auto gate = paper_nor_field();
    CHECK(gate_eval(gate, 0, 0) == 1);
    CHECK(gate_eval(gate, 0, 1) == 1);
    CHECK(gate_eval(gate, 1, 0) == 1);
    CHECK(gate_eval(gate, 1, 1) == 0);
    // the literal matrix reads out as NAND; the constructed NOR differs
    CHECK(truth_table(nor_gate()) == std::vector<int>{1, 0, 0, 0});
    CHECK(truth_table(nand_gate()) == truth_table(paper_nor_field()));
    CHECK_THROWS(gate_eval(gate, 2, 0));
}

TEST_CASE("paper_transformation") {
    auto gate = paper_nor_field();
    auto transformed = paper_transformation(gate);
    auto golden = load_fixture("nor.transform.golden");
    CHECK(transformed.field.entries == golden.entries);
    CHECK(transformed.field.labels == golden.labels);

    // independent oracle: swap positions 2/4, then reverse both axes
    const auto& e = gate.field.entries;
    std::vector<int> perm{0, 3, 2, 1};
    std::vector<std::vector<int>> swapped(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) swapped[i][j] = e[perm[i]][perm[j]];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(transformed.field.entries[i][j] == swapped[3 - i][3 - j]);

    SUBCASE("the composed permutation has order 4") {
        auto cur = gate;
        for (int i = 0; i < 4; ++i) cur = paper_transformation(cur);
        CHECK(cur.field.entries == gate.field.entries);
        auto twice = paper_transformation(paper_transformation(gate));
        CHECK(is_isomorphic(twice.field, gate.field));
    }
}

TEST_CASE("compose evaluates circuits") {
    Circuit c;
    c.gate = nor_gate();
    c.nodes = {Circuit::Input{"a"}, Circuit::Input{"b"}, Circuit::Gate{0, 1},
               Circuit::Gate{2, 2}};  // OR = NOT(NOR(a,b))
    c.output = 3;
    for (int a : {0, 1})
        for (int b : {0, 1})
            CHECK(compose(c, {{"a", a}, {"b", b}}) == (a | b));

    SUBCASE("errors") {
        CHECK_THROWS_AS(compose(c, {{"a", 0}}), std::invalid_argument);
        Circuit cyclic = c;
        cyclic.nodes[2] = Circuit::Gate{3, 1};
        CHECK_THROWS_AS(compose(cyclic, {{"a", 0}, {"b", 0}}), std::invalid_argument);
    }

    SUBCASE("random circuits agree with a brute-force evaluator") {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 30; ++trial) {
            Circuit rc;
            rc.gate = rng() % 2 ? nor_gate() : nand_gate();
            rc.nodes = {Circuit::Input{"a"}, Circuit::Input{"b"}};
            const int gates = 1 + rng() % 6;
            for (int g = 0; g < gates; ++g) {
                const int sz = static_cast<int>(rc.nodes.size());
                rc.nodes.push_back(Circuit::Gate{static_cast<int>(rng() % sz),
                                                 static_cast<int>(rng() % sz)});
            }
            rc.output = static_cast<int>(rc.nodes.size()) - 1;
            for (int a : {0, 1})
                for (int b : {0, 1}) {
                    // forward evaluation: nodes only reference earlier nodes
                    std::vector<int> value;
                    for (const auto& node : rc.nodes) {
                        if (const auto* in = std::get_if<Circuit::Input>(&node))
                            value.push_back(in->name == "a" ? a : b);
                        else {
                            const auto& gate = std::get<Circuit::Gate>(node);
                            value.push_back(
                                gate_eval(rc.gate, value[gate.lhs], value[gate.rhs]));
                        }
                    }
                    CHECK(compose(rc, {{"a", a}, {"b", b}}) == value.back());
                }
        }
    }
}

TEST_CASE("functional completeness") {
    for (auto gate : {nor_gate(), nand_gate(), paper_nor_field()}) {
        auto report = functional_completeness_suite(gate);
        CHECK(report.tables["NOT"] == std::vector<int>{1, 0});
        CHECK(report.tables["OR"] == std::vector<int>{0, 1, 1, 1});
        CHECK(report.tables["AND"] == std::vector<int>{0, 0, 0, 1});
        CHECK(report.tables["XOR"] == std::vector<int>{0, 1, 1, 0});
        CHECK(report.all_verified);
        CHECK(report.all16_reachable);
        CHECK(report.all16_depth <= 5);
    }

    auto and_gate = GateField{make_field(
        4, RingSpec{2},
        {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
        LabelVector::identity(4))};
    CHECK_THROWS_AS(functional_completeness_suite(and_gate), std::invalid_argument);
}
