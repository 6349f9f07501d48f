#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dcjscen/fission.hpp"

namespace dcjscen {

// A tree on the vertices {0, 1, ..., n-1}. Edges are stored as (u, v) with
// u < v, sorted.
class LabeledTree {
public:
    using Edge = std::pair<int, int>;

    // Throws DomainError unless `edges` forms a spanning tree on {0..n-1}.
    LabeledTree(int n, std::vector<Edge> edges);

    int size() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::vector<std::vector<int>> neighbours() const;

    bool operator==(const LabeledTree&) const = default;
    auto operator<=>(const LabeledTree&) const = default;

private:
    int n_;
    std::vector<Edge> edges_;
};

// Vertex i (1 <= i < n) stands for step i; it hangs below the step whose
// partner is its base, or below vertex 0 when its base is 1.
LabeledTree scenario_to_tree(const FissionScenario& s);

// Inverse of scenario_to_tree. Rooted at 0 with children in increasing order,
// vertices are renumbered 1..n in preorder; the edge into vertex i is step i,
// its base is the new number of the parent and its top the largest new number
// still reachable below vertex i once the edges into 1..i-1 are gone.
FissionScenario tree_to_scenario(const LabeledTree& t);

// Standard Prüfer code: repeatedly remove the smallest leaf, recording its
// neighbour. Sequences have length n-2 over {0..n-1}.
LabeledTree prufer_decode(std::span<const int> seq, int n);
std::vector<int> prufer_encode(const LabeledTree& t);

// Cycles left after the first k steps, read off the tree by deleting the
// edges into vertices 1..k and numbering vertices in preorder.
CyclePartition erase_edges_components(const LabeledTree& t, int k);
// Same, after checking that `t` is the tree of `s`.
CyclePartition erase_edges_components(const LabeledTree& t, const FissionScenario& s, int k);

std::string tree_to_dot(const LabeledTree& t);

}  // namespace dcjscen
