#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the code paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dcjscen/fission.hpp"
#include "dcjscen/genome.hpp"

namespace dcjscen::oracle {

// Cars arrive with preferred spots p_i in 1..m and take the first free spot
// at or after it; the sequence is a parking function iff every car parks.
inline bool parks(const std::vector<int>& prefs) {
    const int m = static_cast<int>(prefs.size());
    std::vector<bool> taken(static_cast<std::size_t>(m) + 1, false);
    for (int p : prefs) {
        if (p < 1) {
            return false;
        }
        while (p <= m && taken[static_cast<std::size_t>(p)]) {
            ++p;
        }
        if (p > m) {
            return false;
        }
        taken[static_cast<std::size_t>(p)] = true;
    }
    return true;
}

// Every sequence in {1..m}^m that parks, lexicographically.
inline std::vector<std::vector<int>> all_parking_functions(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> seq(static_cast<std::size_t>(m), 1);
    while (true) {
        if (parks(seq)) {
            out.push_back(seq);
        }
        int i = m - 1;
        while (i >= 0 && seq[static_cast<std::size_t>(i)] == m) {
            seq[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) {
            break;
        }
        ++seq[static_cast<std::size_t>(i)];
    }
    return out;
}

// Trees on {0..n-1} found by testing every (n-1)-subset of the complete
// graph's edges for connectivity.
inline std::vector<std::vector<std::pair<int, int>>> all_trees(int n) {
    std::vector<std::pair<int, int>> kn;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            kn.emplace_back(u, v);
        }
    }
    std::vector<std::vector<std::pair<int, int>>> out;
    const std::size_t k = static_cast<std::size_t>(std::max(n - 1, 0));
    std::vector<bool> pick(kn.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::pair<int, int>> edges;
        std::vector<std::vector<int>> nb(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < kn.size(); ++i) {
            if (pick[i]) {
                edges.push_back(kn[i]);
                nb[static_cast<std::size_t>(kn[i].first)].push_back(kn[i].second);
                nb[static_cast<std::size_t>(kn[i].second)].push_back(kn[i].first);
            }
        }
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        std::vector<int> stack{0};
        seen[0] = true;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : nb[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached == n) {
            out.push_back(edges);
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

// Distinct arrangements of a multiset, by explicit permutation listing.
inline std::size_t count_multiset_permutations(const std::vector<std::size_t>& lengths) {
    std::vector<std::size_t> word;
    for (std::size_t m = 0; m < lengths.size(); ++m) {
        word.insert(word.end(), lengths[m], m);
    }
    std::size_t count = 0;
    do {
        ++count;
    } while (std::next_permutation(word.begin(), word.end()));
    return count;
}

// Partition checks straight from the definitions, over all quadruples.
inline bool non_crossing_by_quadruples(const CyclePartition& p) {
    const int n = p.ground_size();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d)
                    if (p.same_block(a, c) && p.same_block(b, d) && !p.same_block(a, b)) {
                        return false;
                    }
    return true;
}

// The min/max form: for blocks (c..d), (e..f) with c < e, either d < e or
// c < e <= f < d.
inline bool nested_or_disjoint(const CyclePartition& p) {
    for (const auto& x : p.blocks()) {
        for (const auto& y : p.blocks()) {
            const int c = x.front(), d = x.back(), e = y.front(), f = y.back();
            if (c < e && !(d < e || (c < e && e <= f && f < d))) {
                return false;
            }
        }
    }
    return true;
}

// Random genome over blocks b0..b{n-1}: shuffled, randomly signed, cut into
// chromosomes of random kinds.
inline Genome random_genome(std::mt19937_64& rng, int n, bool allow_circular = true) {
    std::vector<SignedBlock> blocks;
    for (int i = 0; i < n; ++i) {
        blocks.push_back({"b" + std::to_string(i), (rng() & 1U) != 0});
    }
    std::shuffle(blocks.begin(), blocks.end(), rng);
    std::vector<Chromosome> chromosomes;
    std::size_t i = 0;
    while (i < blocks.size()) {
        std::size_t len = 1 + rng() % std::min<std::size_t>(4, blocks.size() - i);
        const bool circular = allow_circular && rng() % 3 == 0;
        chromosomes.push_back({circular ? ChromosomeKind::Circular : ChromosomeKind::Linear,
                               {blocks.begin() + static_cast<std::ptrdiff_t>(i),
                                blocks.begin() + static_cast<std::ptrdiff_t>(i + len)}});
        i += len;
    }
    return Genome(std::move(chromosomes));
}

// Rearranges the interior of every linear chromosome of `g` and shuffles
// circular content, keeping the tail set: yields a co-tailed partner.
inline Genome random_cotailed_partner(std::mt19937_64& rng, const Genome& g) {
    std::vector<SignedBlock> interior;
    std::vector<std::pair<SignedBlock, SignedBlock>> ends;
    std::vector<SignedBlock> singles;
    for (const Chromosome& c : g.chromosomes()) {
        if (c.kind == ChromosomeKind::Circular) {
            interior.insert(interior.end(), c.blocks.begin(), c.blocks.end());
        } else if (c.blocks.size() == 1) {
            singles.push_back(c.blocks.front());
        } else {
            ends.emplace_back(c.blocks.front(), c.blocks.back());
            interior.insert(interior.end(), c.blocks.begin() + 1, c.blocks.end() - 1);
        }
    }
    for (auto& b : interior) {
        b.reversed = (rng() & 1U) != 0;
    }
    std::shuffle(interior.begin(), interior.end(), rng);
    // re-pair left and right ends of the multi-block linear chromosomes
    std::vector<SignedBlock> rights;
    for (auto& e : ends) {
        rights.push_back(e.second);
    }
    std::shuffle(rights.begin(), rights.end(), rng);

    std::vector<Chromosome> out;
    for (const auto& s : singles) {
        out.push_back({ChromosomeKind::Linear, {s}});
    }
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < ends.size(); ++i) {
        Chromosome c{ChromosomeKind::Linear, {ends[i].first}};
        std::size_t take = i + 1 == ends.size() ? 0 : rng() % (interior.size() - cursor + 1);
        for (std::size_t j = 0; j < take; ++j) {
            c.blocks.push_back(interior[cursor++]);
        }
        c.blocks.push_back(rights[i]);
        out.push_back(std::move(c));
    }
    // whatever interior is left becomes circular chromosomes
    while (cursor < interior.size()) {
        std::size_t len = 1 + rng() % (interior.size() - cursor);
        out.push_back({ChromosomeKind::Circular,
                       {interior.begin() + static_cast<std::ptrdiff_t>(cursor),
                        interior.begin() + static_cast<std::ptrdiff_t>(cursor + len)}});
        cursor += len;
    }
    return Genome(std::move(out));
}

}  // namespace dcjscen::oracle
