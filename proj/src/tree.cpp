#include "dcjscen/tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "dcjscen/errors.hpp"

namespace dcjscen {

namespace {

std::size_t idx(int v) {
    return static_cast<std::size_t>(v);
}

// The tree hung from vertex 0 with ordered children and preorder numbers.
struct RootedTree {
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    std::vector<int> preorder;  // preorder[v] in 1..n

    explicit RootedTree(const LabeledTree& t)
        : parent(idx(t.size()), -1), children(idx(t.size())), preorder(idx(t.size()), 0) {
        auto nb = t.neighbours();
        std::vector<int> stack{0};
        std::vector<bool> seen(idx(t.size()), false);
        seen[0] = true;
        int counter = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            preorder[idx(v)] = ++counter;
            for (int w : nb[idx(v)]) {
                if (!seen[idx(w)]) {
                    seen[idx(w)] = true;
                    parent[idx(w)] = v;
                    children[idx(v)].push_back(w);
                }
            }
            // neighbours are sorted, so children are in increasing order;
            // push in reverse to visit the smallest first
            for (auto it = children[idx(v)].rbegin(); it != children[idx(v)].rend(); ++it) {
                stack.push_back(*it);
            }
        }
    }
};

}  // namespace

LabeledTree::LabeledTree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 1) {
        throw DomainError("a tree needs at least one vertex");
    }
    if (edges_.size() != idx(n - 1)) {
        throw DomainError("a tree on " + std::to_string(n) + " vertices needs " +
                          std::to_string(n - 1) + " edges, got " + std::to_string(edges_.size()));
    }
    std::vector<int> root(idx(n));
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
        while (root[idx(v)] != v) {
            root[idx(v)] = root[idx(root[idx(v)])];
            v = root[idx(v)];
        }
        return v;
    };
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has a label outside {0.." + std::to_string(n - 1) + "}");
        }
        if (u > v) {
            std::swap(u, v);
        }
        int ru = find(u);
        int rv = find(v);
        if (ru == rv) {
            throw DomainError("edges contain a cycle through (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
        }
        root[idx(ru)] = rv;
    }
    // n-1 edges and no cycle: connected
    std::sort(edges_.begin(), edges_.end());
}

std::vector<std::vector<int>> LabeledTree::neighbours() const {
    std::vector<std::vector<int>> nb(idx(n_));
    for (const auto& [u, v] : edges_) {
        nb[idx(u)].push_back(v);
        nb[idx(v)].push_back(u);
    }
    for (auto& l : nb) {
        std::sort(l.begin(), l.end());
    }
    return nb;
}

LabeledTree scenario_to_tree(const FissionScenario& s) {
    const auto pairs = base_partner_pairs(s);
    // step_with_partner[q] = step (1-based) whose partner is q
    std::vector<int> step_with_partner(idx(s.n) + 1, 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        step_with_partner[idx(pairs[i].second)] = static_cast<int>(i) + 1;
    }
    std::vector<LabeledTree::Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const int base = pairs[i].first;
        const int step = static_cast<int>(i) + 1;
        edges.emplace_back(base == 1 ? 0 : step_with_partner[idx(base)], step);
    }
    return LabeledTree(s.n, std::move(edges));
}

FissionScenario tree_to_scenario(const LabeledTree& t) {
    const RootedTree rt(t);
    FissionScenario s{t.size(), {}};
    for (int i = 1; i < t.size(); ++i) {
        int top = 0;
        std::vector<int> stack{i};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            top = std::max(top, rt.preorder[idx(v)]);
            for (int c : rt.children[idx(v)]) {
                if (c > i) {  // edges into 1..i-1 are already erased
                    stack.push_back(c);
                }
            }
        }
        s.steps.push_back({rt.preorder[idx(rt.parent[idx(i)])], top});
    }
    return s;
}

LabeledTree prufer_decode(std::span<const int> seq, int n) {
    if (n < 1) {
        throw DomainError("a tree needs at least one vertex");
    }
    if (n == 1) {
        if (!seq.empty()) {
            throw DomainError("the single-vertex tree has an empty Prüfer code");
        }
        return LabeledTree(1, {});
    }
    if (seq.size() != idx(n - 2)) {
        throw DomainError("Prüfer code for " + std::to_string(n) + " vertices must have length " +
                          std::to_string(n - 2));
    }
    std::vector<int> degree(idx(n), 1);
    for (int v : seq) {
        if (v < 0 || v >= n) {
            throw DomainError("Prüfer value " + std::to_string(v) + " outside {0.." +
                              std::to_string(n - 1) + "}");
        }
        ++degree[idx(v)];
    }
    std::set<int> leaves;
    for (int v = 0; v < n; ++v) {
        if (degree[idx(v)] == 1) {
            leaves.insert(v);
        }
    }
    std::vector<LabeledTree::Edge> edges;
    for (int v : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, v);
        if (--degree[idx(v)] == 1) {
            leaves.insert(v);
        }
    }
    edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
    return LabeledTree(n, std::move(edges));
}

std::vector<int> prufer_encode(const LabeledTree& t) {
    const int n = t.size();
    std::vector<int> out;
    if (n <= 2) {
        return out;
    }
    auto nb = t.neighbours();
    std::vector<std::set<int>> live(idx(n));
    std::set<int> leaves;
    for (int v = 0; v < n; ++v) {
        live[idx(v)] = std::set<int>(nb[idx(v)].begin(), nb[idx(v)].end());
        if (live[idx(v)].size() == 1) {
            leaves.insert(v);
        }
    }
    while (static_cast<int>(out.size()) < n - 2) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        int next = *live[idx(leaf)].begin();
        out.push_back(next);
        live[idx(next)].erase(leaf);
        if (live[idx(next)].size() == 1) {
            leaves.insert(next);
        }
    }
    return out;
}

CyclePartition erase_edges_components(const LabeledTree& t, int k) {
    const int n = t.size();
    if (k < 0 || k > n - 1) {
        throw DomainError("k must lie in 0.." + std::to_string(n - 1));
    }
    const RootedTree rt(t);
    std::vector<std::vector<int>> blocks;
    // a component is headed by the root or by a vertex whose incoming edge is erased
    for (int head = 0; head < n; ++head) {
        if (head != 0 && head > k) {
            continue;
        }
        std::vector<int> members;
        std::vector<int> stack{head};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(rt.preorder[idx(v)]);
            for (int c : rt.children[idx(v)]) {
                if (c > k) {
                    stack.push_back(c);
                }
            }
        }
        std::sort(members.begin(), members.end());
        blocks.push_back(std::move(members));
    }
    return CyclePartition(n, std::move(blocks));
}

CyclePartition erase_edges_components(const LabeledTree& t, const FissionScenario& s, int k) {
    if (scenario_to_tree(s) != t) {
        throw DomainError("tree does not encode the given scenario");
    }
    return erase_edges_components(t, k);
}

std::string tree_to_dot(const LabeledTree& t) {
    std::ostringstream os;
    os << "graph tree {\n";
    if (t.edges().empty()) {
        os << "  0;\n";
    }
    for (const auto& [u, v] : t.edges()) {
        os << "  " << u << " -- " << v << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace dcjscen
