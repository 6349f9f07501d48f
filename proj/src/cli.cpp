#include "dcjscen/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dcjscen/adjacency_graph.hpp"
#include "dcjscen/enumeration.hpp"
#include "dcjscen/errors.hpp"
#include "dcjscen/text_formats.hpp"

namespace dcjscen::cli {

namespace {

using nlohmann::json;

struct Options {
    std::vector<std::string> inputs;
    std::uint64_t seed = 0;
    long long num = 1;
    std::string format = "parking";
    std::string listing = "fissions";
    std::string from;
    std::string to;
    std::optional<std::size_t> limit;
    int n = 0;
    bool force = false;
    bool as_json = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path);
    if (!file) {
        throw UsageError("cannot open '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::string single_input(const Options& o) {
    if (o.inputs.size() > 1) {
        throw UsageError("expected at most one input file");
    }
    return o.inputs.empty() ? std::string{} : o.inputs.front();
}

// One file with two genomes, or two files with one genome each.
std::pair<Genome, Genome> load_pair(const Options& o, std::istream& in) {
    if (o.inputs.size() == 2) {
        return {parse_genome(read_input(o.inputs[0], in)), parse_genome(read_input(o.inputs[1], in))};
    }
    if (o.inputs.size() > 2) {
        throw UsageError("expected one file holding two genomes, or two genome files");
    }
    auto genomes = parse_genome_file(read_input(single_input(o), in));
    if (genomes.size() != 2) {
        throw ParseError("expected two genomes (use '>' headers), found " +
                         std::to_string(genomes.size()));
    }
    return {std::move(genomes[0].genome), std::move(genomes[1].genome)};
}

template <typename T>
std::string join(const std::vector<T>& xs, const char* sep, std::size_t offset = 0) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        os << (i ? sep : "") << xs[i] + offset;
    }
    return os.str();
}

json adjacency_json(const Adjacency& adj) {
    auto [x, y] = signed_pair(adj);
    return json::array({to_string(x), to_string(y)});
}

json step_json(std::size_t cycle, const Fission& f, int partner) {
    return {{"cycle", cycle + 1}, {"base", f.base}, {"top", f.top}, {"partner", partner}};
}

json realized_json(const RealizedStep& s) {
    json j = step_json(s.cycle, s.fission, s.partner);
    j["dcj"] = {
        {"cut", json::array({adjacency_json(s.dcj.cut()[0]), adjacency_json(s.dcj.cut()[1])})},
        {"form", json::array({adjacency_json(s.dcj.form()[0]), adjacency_json(s.dcj.form()[1])})}};
    return j;
}

// --- single-cycle representations ------------------------------------------

FissionScenario read_scenario(const std::string& from, const std::string& text) {
    if (from == "parking") {
        return parking_to_scenario(parse_parking_text(text));
    }
    if (from == "tree") {
        return tree_to_scenario(parse_tree_text(text));
    }
    FissionScenario s = parse_scenario_text(text);
    require_valid(s);
    return s;
}

void write_scenario(std::ostream& out, const std::string& to, const FissionScenario& s) {
    if (to == "parking") {
        out << format_parking_text(scenario_to_parking(s)) << '\n';
    } else if (to == "tree") {
        out << format_tree_text(scenario_to_tree(s));
    } else if (to == "dot") {
        out << tree_to_dot(scenario_to_tree(s));
    } else if (to == "json") {
        json steps = json::array();
        const auto pairs = base_partner_pairs(s);
        for (std::size_t i = 0; i < s.steps.size(); ++i) {
            steps.push_back(step_json(0, s.steps[i], pairs[i].second));
        }
        out << steps.dump() << '\n';
    } else {
        require_valid(s);
        out << format_scenario_text(s);
    }
}

// --- subcommands -----------------------------------------------------------

int cmd_distance(const Options& o, std::istream& in, std::ostream& out) {
    auto [a, b] = load_pair(o, in);
    const AdjacencyGraph g(a, b);
    std::vector<std::size_t> lengths;
    for (std::size_t l : g.length_profile()) {
        lengths.push_back(2 * (l + 1));
    }
    if (o.as_json) {
        out << json{{"N", g.block_count()}, {"C", g.cycle_count()}, {"K", g.linear_count()},
                    {"d", g.distance()}, {"cycles", lengths}}
                   .dump()
            << '\n';
    } else {
        out << "N=" << g.block_count() << " C=" << g.cycle_count() << " K=" << g.linear_count()
            << " d=" << g.distance() << "; cycles: [" << join(lengths, ", ") << "]\n";
    }
    return kExitOk;
}

int cmd_count(const Options& o, std::istream& in, std::ostream& out) {
    auto [a, b] = load_pair(o, in);
    const auto profile = AdjacencyGraph(a, b).length_profile();
    const BigInt count = count_scenarios(profile);
    if (o.as_json) {
        out << json{{"count", to_decimal(count)}, {"profile", profile}}.dump() << '\n';
    } else {
        out << to_decimal(count) << '\n';
    }
    return kExitOk;
}

int cmd_oracle_count(const Options& o, std::istream& in, std::ostream& out) {
    auto [a, b] = load_pair(o, in);
    const std::size_t found =
        for_each_dcj_sorting_scenario(a, b, [](const std::vector<DcjOp>&) { return true; }, o.force);
    if (o.as_json) {
        const auto profile = AdjacencyGraph(a, b).length_profile();
        out << json{{"oracle", std::to_string(found)},
                    {"formula", to_decimal(count_scenarios(profile))}}
                   .dump()
            << '\n';
    } else {
        out << found << '\n';
    }
    return kExitOk;
}

int cmd_sample(const Options& o, std::istream& in, std::ostream& out) {
    if (o.num < 0) {
        throw UsageError("--num must be non-negative");
    }
    auto [a, b] = load_pair(o, in);
    const AdjacencyGraph graph(a, b);
    const RandomSource root(o.seed);

    for (long long k = 0; k < o.num; ++k) {
        RandomSource rng = root.split(static_cast<std::uint64_t>(k));
        std::vector<FissionScenario> per_cycle;
        std::vector<std::size_t> nontrivial;
        for (std::size_t m = 0; m < graph.cycle_count(); ++m) {
            const int n = graph.cycles()[m].size();
            per_cycle.push_back(sample_scenario(n, rng));
            if (n > 1) {
                nontrivial.push_back(m);
            }
        }
        const auto order = interleaving(scenario_lengths(per_cycle), rng);

        if (o.format == "parking") {
            if (nontrivial.size() == 1) {
                out << format_parking_text(scenario_to_parking(per_cycle[nontrivial[0]]));
            } else if (nontrivial.size() > 1) {
                for (std::size_t i = 0; i < nontrivial.size(); ++i) {
                    const std::size_t m = nontrivial[i];
                    out << (i ? " | " : "") << m + 1 << ": "
                        << format_parking_text(scenario_to_parking(per_cycle[m]));
                }
                out << " ; " << join(order, " ", 1);
            }
            out << '\n';
        } else if (o.format == "fissions" || o.format == "tree") {
            out << "# sample " << k + 1 << " order " << join(order, " ", 1) << '\n';
            for (std::size_t m : nontrivial) {
                out << "# cycle " << m + 1 << '\n';
                write_scenario(out, o.format, per_cycle[m]);
            }
        } else {
            const auto steps = realize_scenario_steps(a, b, per_cycle, order);
            std::vector<DcjOp> ops;
            for (const auto& s : steps) {
                ops.push_back(s.dcj);
            }
            verify_sorting_sequence(a, b, ops);
            if (o.format == "dcj") {
                out << "# sample " << k + 1 << '\n';
                for (const DcjOp& op : ops) {
                    out << to_string(op) << '\n';
                }
            } else {
                json arr = json::array();
                for (const auto& s : steps) {
                    arr.push_back(realized_json(s));
                }
                out << arr.dump() << '\n';
            }
        }
    }
    return kExitOk;
}

int cmd_convert(const Options& o, std::istream& in, std::ostream& out) {
    const FissionScenario s = read_scenario(o.from, read_input(single_input(o), in));
    write_scenario(out, o.to, s);
    return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    std::size_t index = 0;
    if (o.limit && *o.limit == 0) {
        return kExitOk;
    }
    for_each_scenario(
        o.n,
        [&](const FissionScenario& s) {
            ++index;
            if (o.listing != "parking" && o.listing != "json") {
                out << "# scenario " << index << '\n';
            }
            write_scenario(out, o.listing, s);
            return !o.limit || index < *o.limit;
        },
        o.force);
    return kExitOk;
}

int cmd_tree_dot(const Options& o, std::istream& in, std::ostream& out) {
    const std::string text = read_input(single_input(o), in);
    if (o.from == "tree") {
        out << tree_to_dot(parse_tree_text(text));
    } else {
        out << tree_to_dot(scenario_to_tree(read_scenario(o.from, text)));
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    Options o;
    CLI::App app{"DCJ sorting scenarios: distances, exact counts, uniform sampling and "
                 "conversions between fission scenarios, parking functions and labeled trees",
                 "dcjscen"};
    app.require_subcommand(1);

    const std::vector<std::string> sample_formats{"fissions", "parking", "tree", "dcj", "json"};
    const std::vector<std::string> reprs{"fissions", "parking", "tree"};
    const std::vector<std::string> outputs{"fissions", "parking", "tree", "dot", "json"};

    auto genome_inputs = [&](CLI::App* sub) {
        sub->add_option("inputs", o.inputs,
                        "one file holding two genomes, or two genome files (default: stdin)");
    };

    auto* distance = app.add_subcommand("distance", "print N, C, K and the DCJ distance");
    genome_inputs(distance);
    distance->add_flag("--json", o.as_json, "JSON output");

    auto* count = app.add_subcommand("count", "print the exact number of sorting scenarios");
    genome_inputs(count);
    count->add_flag("--json", o.as_json, "JSON output");

    auto* sample = app.add_subcommand("sample", "draw uniform sorting scenarios");
    genome_inputs(sample);
    sample->add_option("--seed", o.seed, "random seed")->capture_default_str();
    sample->add_option("--num", o.num, "number of scenarios")->capture_default_str();
    sample->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(sample_formats))
        ->capture_default_str();
    sample->add_flag("--json", [&](std::int64_t) { o.format = "json"; }, "same as --format json");

    auto* convert = app.add_subcommand("convert", "convert a single-cycle scenario");
    convert->add_option("input", o.inputs, "input file (default: stdin)");
    convert->add_option("--from", o.from, "input representation")
        ->required()
        ->check(CLI::IsMember(reprs));
    convert->add_option("--to", o.to, "output representation")
        ->required()
        ->check(CLI::IsMember(outputs));
    convert->add_flag("--json", [&](std::int64_t) { o.to = "json"; }, "same as --to json");

    auto* enumerate = app.add_subcommand("enumerate", "list every scenario on n elements");
    enumerate->add_option("n", o.n, "cycle size")->required();
    enumerate->add_option("--limit", o.limit, "stop after this many scenarios");
    enumerate->add_option("--format", o.listing, "output format")
        ->check(CLI::IsMember(outputs))
        ->capture_default_str();
    enumerate->add_flag("--force", o.force, "lift the size guard");
    enumerate->add_flag("--json", [&](std::int64_t) { o.listing = "json"; }, "same as --format json");

    auto* oracle = app.add_subcommand("oracle-count", "count sorting scenarios by brute force");
    genome_inputs(oracle);
    oracle->add_flag("--force", o.force, "lift the distance guard");
    oracle->add_flag("--json", o.as_json, "also print the formula count, as JSON");

    auto* tree_dot = app.add_subcommand("tree-dot", "render a tree as Graphviz DOT");
    tree_dot->add_option("input", o.inputs, "input file (default: stdin)");
    o.from = "tree";
    tree_dot->add_option("--from", o.from, "input representation")
        ->check(CLI::IsMember(reprs))
        ->capture_default_str();

    std::vector<const char*> argv{"dcjscen"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (distance->parsed()) return cmd_distance(o, in, out);
        if (count->parsed()) return cmd_count(o, in, out);
        if (sample->parsed()) return cmd_sample(o, in, out);
        if (convert->parsed()) return cmd_convert(o, in, out);
        if (enumerate->parsed()) return cmd_enumerate(o, out);
        if (oracle->parsed()) return cmd_oracle_count(o, in, out);
        if (tree_dot->parsed()) return cmd_tree_dot(o, in, out);
    } catch (const ParseError& e) {
        err << "dcjscen: parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "dcjscen: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "dcjscen: error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}

}  // namespace dcjscen::cli
