#include "dcjscen/adjacency_graph.hpp"

#include <algorithm>
#include <map>

#include "dcjscen/errors.hpp"

namespace dcjscen {

Adjacency LabeledCycle::a_after(int label, int next) const {
    return {exit.at(static_cast<std::size_t>(label - 1)),
            entry.at(static_cast<std::size_t>(next - 1))};
}

AdjacencyGraph::AdjacencyGraph(const Genome& a, const Genome& b)
    : a_adj_(a.adjacencies().begin(), a.adjacencies().end()),
      b_adj_(b.adjacencies().begin(), b.adjacencies().end()),
      blocks_(a.block_count()),
      linear_(a.linear_count()) {
    if (!co_tailed(a, b)) {
        throw DomainError("genomes are not co-tailed");
    }
    std::map<Extremity, std::size_t> a_of;
    std::map<Extremity, std::size_t> b_of;
    for (std::size_t i = 0; i < a_adj_.size(); ++i) {
        a_of.emplace(a_adj_[i].first(), i);
        a_of.emplace(a_adj_[i].second(), i);
    }
    for (std::size_t i = 0; i < b_adj_.size(); ++i) {
        b_of.emplace(b_adj_[i].first(), i);
        b_of.emplace(b_adj_[i].second(), i);
    }

    // b_adj_ is sorted by smallest extremity, so the first unvisited
    // B-adjacency holds the smallest extremity of a new cycle.
    std::vector<bool> visited(b_adj_.size(), false);
    for (std::size_t start = 0; start < b_adj_.size(); ++start) {
        if (visited[start]) {
            continue;
        }
        LabeledCycle cycle;
        std::size_t cur = start;
        Extremity out = b_adj_[start].first();
        while (true) {
            visited[cur] = true;
            cycle.b_order.push_back(b_adj_[cur]);
            cycle.exit.push_back(out);
            const Adjacency& via = a_adj_.at(a_of.at(out));
            cycle.a_between.push_back(via);
            Extremity in = via.other(out);
            cycle.entry.push_back(in);  // placeholder for now, fixed below
            cur = b_of.at(in);
            if (cur == start) {
                break;
            }
            out = b_adj_[cur].other(in);
        }
        // entry[i] is the extremity through which label i+1 is reached,
        // recorded above one slot early.
        std::rotate(cycle.entry.rbegin(), cycle.entry.rbegin() + 1, cycle.entry.rend());
        cycles_.push_back(std::move(cycle));
    }
}

std::vector<std::size_t> AdjacencyGraph::length_profile() const {
    std::vector<std::size_t> out;
    out.reserve(cycles_.size());
    for (const LabeledCycle& c : cycles_) {
        out.push_back(c.b_order.size() - 1);
    }
    return out;
}

AdjacencyGraph build_adjacency_graph(const Genome& a, const Genome& b) {
    return AdjacencyGraph(a, b);
}

std::size_t dcj_distance(const Genome& a, const Genome& b) {
    return AdjacencyGraph(a, b).distance();
}

const LabeledCycle& label_cycle(const AdjacencyGraph& g, std::size_t cycle_index) {
    if (cycle_index >= g.cycle_count()) {
        throw DomainError("cycle index " + std::to_string(cycle_index) + " out of range (graph has " +
                          std::to_string(g.cycle_count()) + " cycles)");
    }
    return g.cycles()[cycle_index];
}

DcjOp fission_to_dcj(const LabeledCycle& cycle, const CyclePartition& state, const Fission& f) {
    if (state.ground_size() != cycle.size()) {
        throw DomainError("partition size does not match the cycle");
    }
    const int partner = partner_of(state, f);
    const auto& block = state.block_containing(f.base);
    auto after_top = std::upper_bound(block.begin(), block.end(), f.top);
    const int succ_top = after_top == block.end() ? block.front() : *after_top;

    // Closing partner..top into its own cycle and reconnecting base to the
    // successor of top.
    return DcjOp(cycle.a_after(f.base, partner), cycle.a_after(f.top, succ_top),
                 cycle.a_after(f.top, partner), cycle.a_after(f.base, succ_top));
}

std::vector<RealizedStep> realize_scenario_steps(const Genome& a, const Genome& b,
                                                 const std::vector<FissionScenario>& per_cycle,
                                                 const std::vector<std::size_t>& interleaving) {
    const AdjacencyGraph graph(a, b);
    if (per_cycle.size() != graph.cycle_count()) {
        throw DomainError("expected one scenario per cycle (" + std::to_string(graph.cycle_count()) +
                          "), got " + std::to_string(per_cycle.size()));
    }
    std::vector<CyclePartition> state;
    std::vector<std::size_t> used(per_cycle.size(), 0);
    for (std::size_t m = 0; m < per_cycle.size(); ++m) {
        const int n = graph.cycles()[m].size();
        if (per_cycle[m].n != n) {
            throw DomainError("scenario for cycle " + std::to_string(m + 1) + " is on " +
                              std::to_string(per_cycle[m].n) + " elements, cycle has " +
                              std::to_string(n));
        }
        require_valid(per_cycle[m]);
        state.emplace_back(n);
    }
    std::vector<RealizedStep> out;
    for (std::size_t m : interleaving) {
        if (m >= per_cycle.size() || used[m] >= per_cycle[m].steps.size()) {
            throw DomainError("interleaving does not match the per-cycle scenario lengths");
        }
        const Fission f = per_cycle[m].steps[used[m]++];
        const LabeledCycle& cycle = graph.cycles()[m];
        out.push_back({m, f, partner_of(state[m], f), fission_to_dcj(cycle, state[m], f)});
        state[m] = apply_fission(state[m], f);
    }
    for (std::size_t m = 0; m < per_cycle.size(); ++m) {
        if (used[m] != per_cycle[m].steps.size()) {
            throw DomainError("interleaving does not match the per-cycle scenario lengths");
        }
    }
    return out;
}

std::vector<DcjOp> realize_scenario(const Genome& a, const Genome& b,
                                    const std::vector<FissionScenario>& per_cycle,
                                    const std::vector<std::size_t>& interleaving) {
    std::vector<DcjOp> ops;
    for (auto& step : realize_scenario_steps(a, b, per_cycle, interleaving)) {
        ops.push_back(std::move(step.dcj));
    }
    return ops;
}

void verify_sorting_sequence(const Genome& a, const Genome& b, const std::vector<DcjOp>& ops) {
    Genome g = a;
    std::size_t d = dcj_distance(g, b);
    if (ops.size() != d) {
        throw DomainError("sequence has " + std::to_string(ops.size()) + " operations, distance is " +
                          std::to_string(d));
    }
    for (std::size_t i = 0; i < ops.size(); ++i) {
        g = apply_dcj(g, ops[i]);
        std::size_t next = dcj_distance(g, b);
        if (next + 1 != d) {
            throw DomainError("operation " + std::to_string(i + 1) + " is not sorting");
        }
        d = next;
    }
    if (!genomes_equal(g, b)) {
        throw DomainError("sequence does not end at the target genome");
    }
}

}  // namespace dcjscen
