#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfa/automorph.hpp"
#include "gfa/field.hpp"
#include "gfa/gates.hpp"
#include "gfa/grammar.hpp"
#include "gfa/machine.hpp"
#include "gfa/random_mode.hpp"
#include "gfa/ski.hpp"

using json = nlohmann::json;

namespace {

struct Options {
    std::string format = "text";
    bool json() const { return format == "json-lines"; }
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<gfa::MachineOp> parse_program(const std::string& text) {
    std::vector<gfa::MachineOp> program;
    std::string normalized = text;
    for (char& c : normalized)
        if (c == ';' || c == ',') c = '\n';
    std::istringstream in(normalized);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op)) continue;
        gfa::MachineOp mop;
        if (op == "+")
            mop.kind = gfa::OpKind::Add;
        else if (op == "-")
            mop.kind = gfa::OpKind::Sub;
        else if (op == "/")
            mop.kind = gfa::OpKind::Div;
        else if (op == "GCP" || op == "gcp")
            mop.kind = gfa::OpKind::Gcp;
        else
            throw std::runtime_error("unknown op: " + op);
        if (mop.kind != gfa::OpKind::Gcp) {
            int a = 1, b = 2;
            ls >> a >> b;
            mop.lhs = a - 1;
            mop.rhs = b - 1;
        }
        program.push_back(mop);
    }
    return program;
}

std::string labels_text(const gfa::LabelVector& l) {
    std::ostringstream out;
    for (int i = 0; i < l.size(); ++i) out << (i ? " " : "") << l.at(i);
    return out.str();
}

void print_state(std::ostream& out, const gfa::MachineState& s, const Options& opt) {
    auto ops_text = [](const auto& ops) {
        std::ostringstream o;
        bool first = true;
        for (const auto& op : ops) {
            o << (first ? "" : " ") << gfa::op_name(op);
            first = false;
        }
        return o.str();
    };
    if (opt.json()) {
        json j;
        j["L"] = labels_text(s.labels);
        j["T"] = ops_text(s.pending);
        j["O"] = ops_text(s.applied);
        for (size_t i = 0; i < s.fields.size(); ++i)
            j["D"].push_back(gfa::serialize(s.fields[i]));
        out << j.dump() << '\n';
        return;
    }
    out << "L = " << labels_text(s.labels) << '\n';
    out << "T = " << ops_text(s.pending) << '\n';
    out << "O = " << ops_text(s.applied) << '\n';
    for (size_t i = 0; i < s.fields.size(); ++i) {
        out << "field a" << i + 1 << ":\n";
        gfa::write_field(out, s.fields[i]);
    }
}

gfa::MachineState load_state(const std::vector<std::string>& field_files,
                             const std::string& program) {
    std::vector<gfa::AdjacencyField> fields;
    for (const auto& path : field_files) fields.push_back(gfa::load_field_file(path));
    return gfa::make_state(std::move(fields), parse_program(program));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-field automata engine"};
    app.require_subcommand(1);
    Options opt;
    std::uint64_t seed = 0;
    app.add_option("--format", opt.format, "text or json-lines")
        ->check(CLI::IsMember({"text", "json-lines"}));
    app.add_option("--seed", seed, "random seed");

    // parse
    std::string parse_input;
    auto* cmd_parse = app.add_subcommand("parse", "validate and echo a graph string");
    cmd_parse->add_option("input", parse_input, "file path or - for stdin")->required();

    // canon
    std::string canon_input;
    auto* cmd_canon = app.add_subcommand("canon", "canonical serialization of a graph");
    cmd_canon->add_option("input", canon_input, "file path or - for stdin")->required();

    // group-order
    int group_n = 4;
    std::string gens_csv = "cyclic";
    bool list_elements = false;
    auto* cmd_group = app.add_subcommand("group-order", "order of a relabeling group");
    cmd_group->add_option("--n", group_n, "degree")->required();
    cmd_group->add_option("--gens", gens_csv, "comma list: cyclic,mirror,swaps");
    cmd_group->add_flag("--elements", list_elements, "print elements in cycle notation");

    // step / run
    std::vector<std::string> field_files;
    std::string program;
    auto* cmd_step = app.add_subcommand("step", "apply one machine step");
    cmd_step->add_option("--field", field_files, "data field file (repeatable)")->required();
    cmd_step->add_option("--program", program, "ops, e.g. '+ 1 2; GCP'")->required();
    auto* cmd_run = app.add_subcommand("run", "run the machine to completion");
    cmd_run->add_option("--field", field_files, "data field file (repeatable)")->required();
    cmd_run->add_option("--program", program, "ops, e.g. '+ 1 2; GCP'")->required();

    // automaton
    std::string machine_file;
    std::vector<std::string> input_files;
    std::vector<std::string> density_spec;
    std::size_t density_count = 0;
    auto* cmd_auto = app.add_subcommand("automaton", "run a graph automaton");
    cmd_auto->add_option("--machine", machine_file, "automaton description file")->required();
    cmd_auto->add_option("--input", input_files, "input graph file (repeatable)");
    cmd_auto->add_option("--density", density_spec,
                         "symbol=p/q weights for randomized input sampling");
    cmd_auto->add_option("--count", density_count, "number of sampled inputs");

    // gate
    auto* cmd_gate = app.add_subcommand("gate", "gate evaluation and tables");
    std::string gate_kind = "paper-nor";
    bool gate_transform = false;
    auto* gate_table = cmd_gate->add_subcommand("table", "print the truth table");
    gate_table->add_option("--gate", gate_kind, "paper-nor, nor or nand");
    gate_table->add_flag("--paper-nor", [&gate_kind](std::int64_t) { gate_kind = "paper-nor"; },
                         "use the source matrix");
    gate_table->add_flag("--nor", [&gate_kind](std::int64_t) { gate_kind = "nor"; }, "use NOR");
    gate_table->add_flag("--nand", [&gate_kind](std::int64_t) { gate_kind = "nand"; }, "use NAND");
    gate_table->add_flag("--transform", gate_transform,
                         "apply the row-swap + column-mirror relabeling first");
    int gate_a = 0, gate_b = 0;
    auto* gate_eval_cmd = cmd_gate->add_subcommand("eval", "evaluate one input pair");
    gate_eval_cmd->add_option("--gate", gate_kind, "paper-nor, nor or nand");
    gate_eval_cmd->add_option("-a", gate_a, "first input bit")->required();
    gate_eval_cmd->add_option("-b", gate_b, "second input bit")->required();
    auto* gate_complete = cmd_gate->add_subcommand("complete", "functional completeness report");
    gate_complete->add_option("--gate", gate_kind, "paper-nor, nor or nand");
    for (auto* sub : {gate_eval_cmd, gate_complete}) {
        sub->add_flag("--paper-nor", [&gate_kind](std::int64_t) { gate_kind = "paper-nor"; },
                      "use the source matrix");
        sub->add_flag("--nor", [&gate_kind](std::int64_t) { gate_kind = "nor"; }, "use NOR");
        sub->add_flag("--nand", [&gate_kind](std::int64_t) { gate_kind = "nand"; }, "use NAND");
    }
    cmd_gate->require_subcommand(1);

    // search
    std::string verifier_name = "sorted-labels";
    std::string mode_name = "las-vegas";
    std::string moves_csv = "swaps";
    std::uint64_t max_trials = 0;
    auto* cmd_search = app.add_subcommand("search", "randomized relabeling search");
    cmd_search->add_option("--field", field_files, "data field file (repeatable)")->required();
    cmd_search->add_option("--verifier", verifier_name, "built-in verifier name");
    cmd_search->add_option("--mode", mode_name, "las-vegas or monte-carlo")
        ->check(CLI::IsMember({"las-vegas", "monte-carlo"}));
    cmd_search->add_option("--max-trials", max_trials, "trial bound (0 = unbounded)");
    cmd_search->add_option("--moves", moves_csv, "comma list: swaps,cyclic,mirror");

    // ski
    std::string ski_text;
    int ski_fuel = 10000;
    bool ski_trace = false;
    auto* cmd_ski = app.add_subcommand("ski", "SKI combinator operations");
    auto* ski_reduce = cmd_ski->add_subcommand("reduce", "normalize a term");
    ski_reduce->add_option("term", ski_text, "term, e.g. ((S K) K)")->required();
    ski_reduce->add_option("--fuel", ski_fuel, "max reduction steps");
    ski_reduce->add_flag("--trace", ski_trace, "print every intermediate term");
    auto* ski_encode = cmd_ski->add_subcommand("encode", "encode a term as a graph");
    ski_encode->add_option("term", ski_text, "term, e.g. (K I)")->required();
    cmd_ski->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto emit = [&](const std::string& key, const json& value, const std::string& text) {
        if (opt.json())
            std::cout << json{{key, value}}.dump() << '\n';
        else
            std::cout << text << '\n';
    };

    try {
        if (*cmd_parse) {
            auto f = gfa::parse(slurp(parse_input));
            if (!f)
                emit("graph", nullptr, gfa::kNullGraphToken);
            else if (opt.json())
                emit("graph", gfa::serialize(*f), "");
            else
                std::cout << gfa::write_field_text(*f);
        } else if (*cmd_canon) {
            auto f = gfa::parse(slurp(canon_input));
            emit("canonical", gfa::serialize(f), gfa::serialize(f));
        } else if (*cmd_group) {
            gfa::GeneratorSet gens;
            std::istringstream gs(gens_csv);
            std::string name;
            while (std::getline(gs, name, ',')) {
                if (name == "cyclic") gens.cyclic = true;
                else if (name == "mirror") gens.mirror = true;
                else if (name == "swaps") gens.adjacent_swaps = true;
                else throw std::runtime_error("unknown generator: " + name);
            }
            auto group = gfa::generate_group(group_n, gens);
            emit("order", group.size(), std::to_string(group.size()));
            if (list_elements)
                for (const auto& g : group)
                    emit("element", gfa::cycle_notation(g.mapping),
                         gfa::cycle_notation(g.mapping));
        } else if (*cmd_step || *cmd_run) {
            auto state = load_state(field_files, program);
            state = *cmd_step ? gfa::step(state) : gfa::run(state);
            print_state(std::cout, state, opt);
        } else if (*cmd_auto) {
            auto automaton = gfa::parse_automaton(slurp(machine_file));
            std::vector<gfa::AdjacencyField> inputs;
            for (const auto& path : input_files) {
                auto g = gfa::parse(slurp(path));
                if (!g) throw std::runtime_error("empty graph is not a symbol");
                inputs.push_back(*g);
            }
            if (!density_spec.empty()) {
                std::vector<std::pair<std::string, gfa::Rational>> weights;
                for (const auto& item : density_spec) {
                    const auto eq = item.find('=');
                    const auto slash = item.find('/', eq);
                    if (eq == std::string::npos || slash == std::string::npos)
                        throw std::runtime_error("density item must be symbol=p/q");
                    weights.emplace_back(
                        item.substr(0, eq),
                        gfa::Rational(std::stoll(item.substr(eq + 1, slash - eq - 1)),
                                      std::stoll(item.substr(slash + 1))));
                }
                gfa::TransitionDensity density(std::move(weights));
                for (const auto& symbol : density.sample_sequence(seed, density_count))
                    inputs.push_back(automaton.alphabet.at(symbol));
            }
            auto result = gfa::automaton_run(automaton, inputs);
            for (const auto& entry : result.trace)
                emit("trace",
                     json{{"from", entry.from}, {"symbol", entry.symbol}, {"to", entry.to}},
                     entry.from + " --" + entry.symbol + "--> " + entry.to);
            emit("final", result.final_state, "final " + result.final_state);
            emit("accepted", result.accepted, result.accepted ? "ACCEPT" : "REJECT");
        } else if (*cmd_gate) {
            gfa::GateField gate = gate_kind == "nor"    ? gfa::nor_gate()
                                  : gate_kind == "nand" ? gfa::nand_gate()
                                                        : gfa::paper_nor_field();
            if (*gate_table) {
                if (gate_transform) gate = gfa::paper_transformation(gate);
                for (int a : {0, 1})
                    for (int b : {0, 1}) {
                        std::ostringstream line;
                        line << a << b << " -> " << gfa::gate_eval(gate, a, b);
                        emit("row", json{{"a", a}, {"b", b}, {"out", gfa::gate_eval(gate, a, b)}},
                             line.str());
                    }
            } else if (*gate_eval_cmd) {
                emit("out", gfa::gate_eval(gate, gate_a, gate_b),
                     std::to_string(gfa::gate_eval(gate, gate_a, gate_b)));
            } else {
                auto report = gfa::functional_completeness_suite(gate);
                emit("primitive", report.primitive, "primitive " + report.primitive);
                for (const auto& [name, table] : report.tables) {
                    std::ostringstream line;
                    line << name << " =";
                    for (int v : table) line << ' ' << v;
                    emit("table", json{{"gate", name}, {"rows", table}}, line.str());
                }
                emit("verified", report.all_verified,
                     std::string("verified ") + (report.all_verified ? "yes" : "no"));
                emit("all16", report.all16_reachable,
                     "all16 " + std::string(report.all16_reachable ? "yes" : "no") +
                         " depth " + std::to_string(report.all16_depth));
            }
        } else if (*cmd_search) {
            auto fields_state = load_state(field_files, "");
            const int n = fields_state.labels.size();
            std::vector<gfa::Move> moves;
            std::istringstream ms(moves_csv);
            std::string name;
            while (std::getline(ms, name, ',')) {
                if (name == "swaps") {
                    auto swaps = gfa::all_swap_moves(n);
                    moves.insert(moves.end(), swaps.begin(), swaps.end());
                } else if (name == "cyclic")
                    moves.push_back({gfa::MoveKind::Cyclic});
                else if (name == "mirror")
                    moves.push_back({gfa::MoveKind::Mirror});
                else
                    throw std::runtime_error("unknown move: " + name);
            }
            gfa::SearchConfig cfg;
            cfg.seed = seed;
            cfg.mode = mode_name == "monte-carlo" ? gfa::SearchMode::MonteCarlo
                                                  : gfa::SearchMode::LasVegas;
            if (max_trials > 0) cfg.max_trials = max_trials;
            auto result = gfa::random_search(fields_state, moves,
                                             gfa::builtin_verifier(verifier_name), cfg);
            emit("verified", result.verified,
                 std::string("verified ") + (result.verified ? "yes" : "no"));
            emit("trials", result.trials, "trials " + std::to_string(result.trials));
            if (result.found)
                emit("labels", labels_text(result.found->labels),
                     "labels " + labels_text(result.found->labels));
            else
                emit("labels", nullptr, "exhausted");
        } else if (*cmd_ski) {
            auto term = gfa::parse_term(ski_text);
            if (*ski_reduce) {
                if (ski_trace) {
                    auto cur = term;
                    for (int i = 0; i < ski_fuel; ++i) {
                        auto next = gfa::reduce_step(cur);
                        if (!next.reduced) break;
                        cur = next.term;
                        emit("step", gfa::print_term(cur), gfa::print_term(cur));
                    }
                }
                auto result = gfa::normalize(term, ski_fuel);
                if (!result.normalized) {
                    emit("error", "fuel exhausted", "fuel exhausted");
                    return 1;
                }
                emit("normal", gfa::print_term(result.term), gfa::print_term(result.term));
                emit("steps", result.steps, "steps " + std::to_string(result.steps));
            } else {
                auto field = gfa::encode_term_as_field(term);
                emit("graph", gfa::serialize(field), gfa::serialize(field));
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
