#pragma once

#include <cstddef>
#include <vector>

#include "dcjscen/fission.hpp"
#include "dcjscen/genome.hpp"

namespace dcjscen {

// A cycle of the adjacency graph with its B-adjacencies numbered 1..n in
// traversal order. Walking the cycle, B-adjacency i is entered through
// entry[i-1] and left through exit[i-1]; the A-adjacency that follows it is
// {exit[i-1], entry[i]} (cyclically).
struct LabeledCycle {
    std::vector<Adjacency> b_order;
    std::vector<Adjacency> a_between;  // a_between[i-1]: between label i and its successor
    std::vector<Extremity> entry;
    std::vector<Extremity> exit;

    int size() const noexcept { return static_cast<int>(b_order.size()); }
    // The A-adjacency sitting after `label` when its cycle successor is `next`.
    Adjacency a_after(int label, int next) const;

    bool operator==(const LabeledCycle&) const = default;
};

class AdjacencyGraph {
public:
    // Throws DomainError when the genomes have different blocks or are not
    // co-tailed.
    AdjacencyGraph(const Genome& a, const Genome& b);

    const std::vector<Adjacency>& a_adjacencies() const noexcept { return a_adj_; }
    const std::vector<Adjacency>& b_adjacencies() const noexcept { return b_adj_; }
    // Cycles ordered by their smallest extremity, each canonically labeled.
    const std::vector<LabeledCycle>& cycles() const noexcept { return cycles_; }

    std::size_t block_count() const noexcept { return blocks_; }
    std::size_t cycle_count() const noexcept { return cycles_.size(); }
    std::size_t linear_count() const noexcept { return linear_; }
    std::size_t distance() const noexcept { return blocks_ - cycles_.size() - linear_; }

    // l_m per cycle, where cycle m has 2(l_m + 1) vertices.
    std::vector<std::size_t> length_profile() const;

private:
    std::vector<Adjacency> a_adj_;
    std::vector<Adjacency> b_adj_;
    std::vector<LabeledCycle> cycles_;
    std::size_t blocks_ = 0;
    std::size_t linear_ = 0;
};

AdjacencyGraph build_adjacency_graph(const Genome& a, const Genome& b);

// N - (C + K)
std::size_t dcj_distance(const Genome& a, const Genome& b);

// Labeling starts at the B-adjacency holding the cycle's smallest extremity
// and leaves it through that extremity.
const LabeledCycle& label_cycle(const AdjacencyGraph& g, std::size_t cycle_index);

// The DCJ on genome A that performs `f` on a cycle currently split as `state`.
DcjOp fission_to_dcj(const LabeledCycle& cycle, const CyclePartition& state, const Fission& f);

struct RealizedStep {
    std::size_t cycle = 0;
    Fission fission;
    int partner = 0;
    DcjOp dcj;
};

// Interleaves the per-cycle scenarios (one per cycle, in cycle order) as
// directed by `interleaving` (a cycle index per step) and translates every
// fission into a DCJ on A.
std::vector<RealizedStep> realize_scenario_steps(const Genome& a, const Genome& b,
                                                 const std::vector<FissionScenario>& per_cycle,
                                                 const std::vector<std::size_t>& interleaving);
std::vector<DcjOp> realize_scenario(const Genome& a, const Genome& b,
                                    const std::vector<FissionScenario>& per_cycle,
                                    const std::vector<std::size_t>& interleaving);

// Applies `ops` to `a`, checking that each lowers the distance to `b` by one
// and that the result equals `b`. Throws DomainError otherwise.
void verify_sorting_sequence(const Genome& a, const Genome& b, const std::vector<DcjOp>& ops);

}  // namespace dcjscen
