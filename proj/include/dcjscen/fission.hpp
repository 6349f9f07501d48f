#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dcjscen {

// A fission of a cycle, given by its two cuts: `base` is the element left of
// the first cut, `top` the element left of the second cut. The partner (the
// element right of the first cut) depends on the current partition.
struct Fission {
    int base = 0;
    int top = 0;

    auto operator<=>(const Fission&) const = default;
};

// Partition of {1..n} into cycles, each stored in increasing order; blocks are
// ordered by their smallest element.
class CyclePartition {
public:
    // The single cycle (1 2 ... n).
    explicit CyclePartition(int n);
    CyclePartition(int n, std::vector<std::vector<int>> blocks);

    int ground_size() const noexcept { return n_; }
    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
    const std::vector<int>& block_containing(int x) const;
    bool same_block(int x, int y) const;
    bool all_singletons() const noexcept { return blocks_.size() == static_cast<std::size_t>(n_); }

    bool operator==(const CyclePartition&) const = default;

private:
    void index();

    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<std::size_t> owner_;  // owner_[x - 1] = index into blocks_
};

// "(1)(2 7 8)(3 4 6)"
std::string to_string(const CyclePartition& p);
CyclePartition parse_partition(int n, std::string_view text);

struct FissionScenario {
    int n = 1;
    std::vector<Fission> steps;

    bool operator==(const FissionScenario&) const = default;
    auto operator<=>(const FissionScenario&) const = default;
};

struct ValidationReport {
    bool ok = true;
    std::size_t failing_step = 0;  // 1-based; 0 when ok or when the length is wrong
    std::string reason;
    std::optional<CyclePartition> partition;  // state the failing step was applied to

    explicit operator bool() const noexcept { return ok; }
};

// Smallest element greater than f.base in the cycle containing it. Throws
// DomainError when the fission does not apply to `part`.
int partner_of(const CyclePartition& part, const Fission& f);

CyclePartition apply_fission(const CyclePartition& part, const Fission& f);

ValidationReport validate_scenario(const FissionScenario& s);

// Throws DomainError carrying the validation message when `s` is invalid.
void require_valid(const FissionScenario& s);

// n partitions: the initial cycle, then the state after each step.
std::vector<CyclePartition> run_scenario(const FissionScenario& s);

// (base, partner) of every step, in scenario order.
std::vector<std::pair<int, int>> base_partner_pairs(const FissionScenario& s);

// Follows last partners from x through `pairs` until reaching an element that
// is never a base.
int sup(std::span<const std::pair<int, int>> pairs, int x);

bool blocks_increasing(const CyclePartition& p);

// No a < b < c < d with a, c in one block and b, d in another.
bool is_non_crossing(const CyclePartition& p);

// Every block of `finer` lies inside a block of `coarser`.
bool refines(const CyclePartition& finer, const CyclePartition& coarser);

}  // namespace dcjscen
