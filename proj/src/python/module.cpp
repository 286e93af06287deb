#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gfa/automorph.hpp"
#include "gfa/field.hpp"
#include "gfa/gates.hpp"
#include "gfa/grammar.hpp"
#include "gfa/machine.hpp"
#include "gfa/random_mode.hpp"
#include "gfa/ski.hpp"

namespace py = pybind11;

namespace {

gfa::GeneratorSet generator_set(const std::vector<std::string>& names) {
    gfa::GeneratorSet gens;
    for (const auto& name : names) {
        if (name == "cyclic") gens.cyclic = true;
        else if (name == "mirror") gens.mirror = true;
        else if (name == "swaps") gens.adjacent_swaps = true;
        else throw std::invalid_argument("unknown generator: " + name);
    }
    return gens;
}

}  // namespace

PYBIND11_MODULE(_gfa, m) {
    m.doc() = "Graph-field automata engine";

    py::class_<gfa::AdjacencyField>(m, "AdjacencyField")
        .def_readonly("n", &gfa::AdjacencyField::n)
        .def_property_readonly("modulus",
                               [](const gfa::AdjacencyField& f) { return f.ring.modulus; })
        .def_readonly("entries", &gfa::AdjacencyField::entries)
        .def_property_readonly("labels",
                               [](const gfa::AdjacencyField& f) { return f.labels.values(); })
        .def("__repr__",
             [](const gfa::AdjacencyField& f) { return gfa::serialize(f); });

    m.def("make_field",
          [](int n, int modulus, std::vector<std::vector<int>> entries,
             std::vector<int> labels) {
              return gfa::make_field(n, gfa::RingSpec{modulus}, std::move(entries),
                                     gfa::LabelVector(std::move(labels)));
          },
          py::arg("n"), py::arg("modulus"), py::arg("entries"), py::arg("labels"));
    m.def("parse", [](const std::string& s) { return gfa::parse(s); });
    m.def("serialize",
          [](const gfa::AdjacencyField& f) { return gfa::serialize(f); });
    m.def("apply_relabeling",
          [](const gfa::AdjacencyField& f, std::vector<int> labels) {
              return gfa::apply_relabeling(f, gfa::LabelVector(std::move(labels)));
          });
    m.def("is_isomorphic", &gfa::is_isomorphic);
    m.def("cyclic_shift", [](std::vector<int> labels) {
        return gfa::cyclic_shift(gfa::LabelVector(std::move(labels))).values();
    });
    m.def("group_order", [](int n, const std::vector<std::string>& gens) {
        return gfa::generate_group(n, generator_set(gens)).size();
    });
    m.def("canonical_form", [](const gfa::AdjacencyField& f) {
        return gfa::canonical_form(f, gfa::symmetric_group(f.n));
    });
    m.def("gate_table", [](const std::string& kind) {
        auto gate = kind == "nor"    ? gfa::nor_gate()
                    : kind == "nand" ? gfa::nand_gate()
                                     : gfa::paper_nor_field();
        return gfa::truth_table(gate);
    });
    m.def("ski_reduce", [](const std::string& term, int fuel) {
        auto result = gfa::normalize(gfa::parse_term(term), fuel);
        if (!result.normalized) throw std::runtime_error("fuel exhausted");
        return py::make_tuple(gfa::print_term(result.term), result.steps);
    }, py::arg("term"), py::arg("fuel") = 10000);
    m.def("random_search_labels",
          [](std::vector<int> start_labels, std::uint64_t seed) {
              const int n = static_cast<int>(start_labels.size());
              std::vector<std::vector<int>> zeros(n, std::vector<int>(n, 0));
              auto f = gfa::apply_relabeling(
                  gfa::make_field(n, gfa::RingSpec{2}, zeros,
                                  gfa::LabelVector::identity(n)),
                  gfa::LabelVector(std::move(start_labels)));
              gfa::SearchConfig cfg{seed, std::nullopt, gfa::SearchMode::LasVegas};
              auto result = gfa::random_search(
                  gfa::make_state({f}, {}), gfa::all_swap_moves(n),
                  gfa::builtin_verifier("sorted-labels"), cfg);
              return py::make_tuple(result.verified, result.trials);
          },
          py::arg("start_labels"), py::arg("seed") = 0);
}
