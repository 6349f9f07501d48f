#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dcjscen/adjacency_graph.hpp"
#include "dcjscen/cli.hpp"
#include "dcjscen/enumeration.hpp"
#include "dcjscen/errors.hpp"
#include "dcjscen/parking.hpp"
#include "dcjscen/tree.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace dcjscen;

namespace {

using Steps = std::vector<std::pair<int, int>>;
using Edges = std::vector<std::pair<int, int>>;

// Big counts cross the boundary as decimal strings.
py::int_ to_python(const BigInt& x) {
    return py::int_(py::reinterpret_steal<py::object>(
        PyLong_FromString(to_decimal(x).c_str(), nullptr, 10)));
}

FissionScenario scenario(int n, const Steps& steps) {
    FissionScenario s{n, {}};
    for (const auto& [base, top] : steps) {
        s.steps.push_back({base, top});
    }
    return s;
}

Steps steps_of(const FissionScenario& s) {
    Steps out;
    for (const Fission& f : s.steps) {
        out.emplace_back(f.base, f.top);
    }
    return out;
}

AdjacencyGraph graph(const std::string& a, const std::string& b) {
    return AdjacencyGraph(parse_genome(a), parse_genome(b));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Counting, sampling and encoding DCJ sorting scenarios";

    auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<GuardError>(m, "GuardError", domain_error.ptr());
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("normalize_genome", [](const std::string& text) { return serialize_genome(parse_genome(text)); },
          "text"_a, "Parse a genome and print it in canonical form.");

    m.def("distance", [](const std::string& a, const std::string& b) {
        const AdjacencyGraph g = graph(a, b);
        py::dict out;
        out["N"] = g.block_count();
        out["C"] = g.cycle_count();
        out["K"] = g.linear_count();
        out["d"] = g.distance();
        out["profile"] = g.length_profile();
        return out;
    }, "a"_a, "b"_a, "Distance summary of two co-tailed genomes.");

    m.def("count_scenarios", [](const std::string& a, const std::string& b) {
        return to_python(count_scenarios(graph(a, b).length_profile()));
    }, "a"_a, "b"_a, "Exact number of parsimonious DCJ scenarios from a to b.");

    m.def("oracle_count", [](const std::string& a, const std::string& b, bool force) {
        py::gil_scoped_release release;
        return for_each_dcj_sorting_scenario(
            parse_genome(a), parse_genome(b), [](const std::vector<DcjOp>&) { return true; }, force);
    }, "a"_a, "b"_a, "force"_a = false, "Count sorting scenarios by exhaustive search.");

    m.def("count_parking", [](unsigned m) { return to_python(count_parking(m)); }, "m"_a);

    m.def("scenario_to_parking", [](int n, const Steps& steps) {
        return scenario_to_parking(scenario(n, steps)).values();
    }, "n"_a, "steps"_a);

    m.def("parking_to_scenario", [](const std::vector<int>& values) {
        const FissionScenario s = parking_to_scenario(ParkingFunction(values));
        return py::make_tuple(s.n, steps_of(s));
    }, "values"_a, "Decode a parking function into (n, [(base, top), ...]).");

    m.def("scenario_to_tree", [](int n, const Steps& steps) {
        return scenario_to_tree(scenario(n, steps)).edges();
    }, "n"_a, "steps"_a);

    m.def("tree_to_scenario", [](int n, const Edges& edges) {
        return steps_of(tree_to_scenario(LabeledTree(n, edges)));
    }, "n"_a, "edges"_a);

    m.def("prufer_encode", [](int n, const Edges& edges) { return prufer_encode(LabeledTree(n, edges)); },
          "n"_a, "edges"_a);
    m.def("prufer_decode", [](const std::vector<int>& code, int n) { return prufer_decode(code, n).edges(); },
          "code"_a, "n"_a);

    m.def("run_scenario", [](int n, const Steps& steps) {
        std::vector<std::string> out;
        for (const CyclePartition& p : run_scenario(scenario(n, steps))) {
            out.push_back(to_string(p));
        }
        return out;
    }, "n"_a, "steps"_a, "Partitions after each step, starting from the whole cycle.");

    m.def("is_valid_scenario", [](int n, const Steps& steps) { return validate_scenario(scenario(n, steps)).ok; },
          "n"_a, "steps"_a);

    m.def("sup", [](int n, const Steps& steps) {
        return sup(base_partner_pairs(scenario(n, steps)), 1);
    }, "n"_a, "steps"_a, "Follow last partners from 1; equals n for every valid scenario.");

    m.def("enumerate_scenarios", [](int n, std::optional<std::size_t> limit, bool force) {
        std::vector<Steps> out;
        for (const FissionScenario& s : enumerate_scenarios(n, limit, force)) {
            out.push_back(steps_of(s));
        }
        return out;
    }, "n"_a, "limit"_a = py::none(), "force"_a = false);

    m.def("sample_scenarios", [](int n, std::uint64_t seed, std::size_t num) {
        RandomSource rng(seed);
        std::vector<Steps> out;
        for (std::size_t i = 0; i < num; ++i) {
            out.push_back(steps_of(sample_scenario(n, rng)));
        }
        return out;
    }, "n"_a, "seed"_a, "num"_a = 1, "Uniform scenarios on an n-cycle.");

    m.def("run_cli", [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, "args"_a, "input"_a = "", "Run the command-line tool; returns (exit_code, stdout, stderr).");
}
