#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dcjscen/bigint.hpp"
#include "dcjscen/fission.hpp"
#include "dcjscen/genome.hpp"
#include "dcjscen/random.hpp"

namespace dcjscen {

// Exhaustive searches refuse larger inputs unless forced.
inline constexpr int kMaxEnumeratedCycle = 8;
inline constexpr std::size_t kMaxOracleDistance = 5;

// (l_1 + ... + l_C)! / (l_1! ... l_C!)
BigInt multinomial(std::span<const std::size_t> lengths);

// Number of parsimonious DCJ scenarios for a graph whose cycles have
// 2(l_m + 1) vertices: the multinomial times the product of (l_m + 1)^(l_m - 1).
BigInt count_scenarios(std::span<const std::size_t> lengths);

// Visitors return false to stop the enumeration early.
using ScenarioVisitor = std::function<bool(const FissionScenario&)>;
using DcjScenarioVisitor = std::function<bool(const std::vector<DcjOp>&)>;

// All fission scenarios on (1 2 ... n), lexicographic in their (base, top)
// step sequences. Returns the number visited.
std::size_t for_each_scenario(int n, const ScenarioVisitor& visit, bool force = false);
std::vector<FissionScenario> enumerate_scenarios(int n, std::optional<std::size_t> limit = {},
                                                 bool force = false);

// Brute force over genomes: every DCJ on two adjacencies of the current
// genome that lowers the distance to `b`, explored depth first. Independent
// of the fission machinery.
std::size_t for_each_dcj_sorting_scenario(const Genome& a, const Genome& b,
                                          const DcjScenarioVisitor& visit, bool force = false);
std::vector<std::vector<DcjOp>> enumerate_dcj_sorting_scenarios(
    const Genome& a, const Genome& b, std::optional<std::size_t> limit = {}, bool force = false);

// Uniform over the n^(n-2) scenarios on n elements: a uniform Prüfer code is
// decoded to a tree and the tree to a scenario.
FissionScenario sample_scenario(int n, RandomSource& rng);

// Interleavings are sequences holding cycle index m exactly lengths[m] times.
std::vector<std::size_t> interleaving(std::span<const std::size_t> lengths, RandomSource& rng);
// The index-th interleaving in lexicographic order, 0 <= index < multinomial.
std::vector<std::size_t> interleaving(std::span<const std::size_t> lengths, const BigInt& index);

struct InterleavedStep {
    std::size_t cycle = 0;
    Fission fission;

    bool operator==(const InterleavedStep&) const = default;
};

std::vector<InterleavedStep> interleave(const std::vector<FissionScenario>& per_cycle,
                                        RandomSource& rng);
std::vector<InterleavedStep> interleave(const std::vector<FissionScenario>& per_cycle,
                                        const BigInt& index);

// Steps per scenario, i.e. the length profile of `per_cycle`.
std::vector<std::size_t> scenario_lengths(const std::vector<FissionScenario>& per_cycle);

}  // namespace dcjscen
