#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hcaudit/arclist.hpp"
#include "hcaudit/bench.hpp"
#include "hcaudit/campaign.hpp"
#include "hcaudit/compare.hpp"
#include "hcaudit/decider.hpp"
#include "hcaudit/errors.hpp"
#include "hcaudit/generate.hpp"
#include "hcaudit/oracle.hpp"
#include "hcaudit/serialize.hpp"

namespace py = pybind11;

namespace {

hcaudit::GenSpec make_spec(const std::string& family, int n, std::uint64_t seed, double p,
                           const std::vector<int>& cycle_lengths, const std::string& path) {
    hcaudit::GenSpec spec;
    spec.family = hcaudit::family_from_name(family);
    spec.n = n;
    spec.seed = seed;
    spec.p = p;
    spec.cycle_lengths = cycle_lengths;
    spec.path = path;
    return spec;
}

std::string oracle_json(const hcaudit::Digraph& d, std::uint64_t backtrack_budget) {
    if (d.vertex_count() >= 2 && d.vertex_count() <= hcaudit::kHeldKarpMaxN) {
        return hcaudit::oracle_to_json(hcaudit::held_karp(d)).dump();
    }
    if (d.vertex_count() < 2) {
        return hcaudit::oracle_to_json(
                   hcaudit::OracleResult{false, std::nullopt, hcaudit::OracleMethod::HeldKarp})
            .dump();
    }
    const hcaudit::BacktrackOutcome out = hcaudit::backtrack_hc(d, backtrack_budget);
    if (!out.result) {
        throw hcaudit::Error(hcaudit::Errc::TooLarge,
                             "backtracking budget exhausted after " +
                                 std::to_string(out.nodes_expanded) + " nodes");
    }
    return hcaudit::oracle_to_json(*out.result).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hamiltonian-cycle decision pipeline and its audit harness";

    py::register_exception<hcaudit::Error>(m, "HcauditError");

    py::class_<hcaudit::Digraph>(m, "Digraph")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"), py::arg("arcs"))
        .def_property_readonly("n", &hcaudit::Digraph::vertex_count)
        .def_property_readonly("arcs",
                               [](const hcaudit::Digraph& d) { return d.arcs(); })
        .def("__eq__",
             [](const hcaudit::Digraph& a, const hcaudit::Digraph& b) { return a == b; })
        .def("__repr__", [](const hcaudit::Digraph& d) {
            return "Digraph(n=" + std::to_string(d.vertex_count()) + ", m=" +
                   std::to_string(d.arc_count()) + ")";
        });

    m.def("parse_arclist",
          [](const std::string& text) { return hcaudit::parse_arclist(text); },
          py::arg("text"));
    m.def("emit_arclist", &hcaudit::emit_arclist, py::arg("digraph"));
    m.def("prism", &hcaudit::prism);
    m.def("generate",
          [](const std::string& family, int n, std::uint64_t seed, double p,
             const std::vector<int>& cycle_lengths, const std::string& path) {
              return hcaudit::generate(make_spec(family, n, seed, p, cycle_lengths, path));
          },
          py::arg("family"), py::arg("n") = 0, py::arg("seed") = 0, py::arg("p") = 0.0,
          py::arg("cycle_lengths") = std::vector<int>{}, py::arg("path") = "");
    m.def("undirected_to_digraph", &hcaudit::undirected_to_digraph, py::arg("edges"),
          py::arg("n"));

    m.def("decide_paper_json",
          [](const hcaudit::Digraph& d) {
              return hcaudit::verdict_to_json(hcaudit::decide_paper(d)).dump();
          },
          py::arg("digraph"));
    m.def("decide_exact_json",
          [](const hcaudit::Digraph& d, std::uint64_t limit) {
              return hcaudit::verdict_to_json(hcaudit::decide_exact_via_matchings(d, limit))
                  .dump();
          },
          py::arg("digraph"), py::arg("limit") = std::uint64_t{1'000'000});
    m.def("oracle_json", &oracle_json, py::arg("digraph"),
          py::arg("backtrack_budget") = std::uint64_t{100'000'000});
    m.def("compare_json",
          [](const hcaudit::Digraph& d, std::uint64_t enumeration_limit) {
              hcaudit::Limits limits;
              limits.enumeration_limit = enumeration_limit;
              return hcaudit::record_to_json(hcaudit::compare_one(d, limits)).dump();
          },
          py::arg("digraph"), py::arg("enumeration_limit") = std::uint64_t{1'000'000});
    m.def("fuzz_json",
          [](const std::string& family, int n_min, int n_max, int trials,
             std::uint64_t seed, double p) {
              hcaudit::CampaignConfig config;
              config.family = hcaudit::family_from_name(family);
              config.n_min = n_min;
              config.n_max = n_max;
              config.trials = trials;
              config.master_seed = seed;
              config.p = p;
              return hcaudit::report_to_json(hcaudit::fuzz_campaign(config)).dump();
          },
          py::arg("family"), py::arg("n_min"), py::arg("n_max"), py::arg("trials"),
          py::arg("seed"), py::arg("p") = 0.35);
    m.def("bench_csv",
          [](const std::vector<int>& n_list, double p, std::uint64_t seed, int repeats) {
              return hcaudit::bench_to_csv(hcaudit::bench_scaling(n_list, p, seed, repeats));
          },
          py::arg("n_list"), py::arg("p") = 0.3, py::arg("seed") = 0, py::arg("repeats") = 3);
}
