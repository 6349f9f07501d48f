#include "dcjscen/enumeration.hpp"

#include <algorithm>
#include <numeric>

#include "dcjscen/adjacency_graph.hpp"
#include "dcjscen/errors.hpp"
#include "dcjscen/tree.hpp"

namespace dcjscen {

namespace {

BigInt factorial(std::size_t k) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

std::vector<Fission> applicable_fissions(const CyclePartition& part) {
    std::vector<Fission> out;
    for (const auto& b : part.blocks()) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                out.push_back({b[i], b[j]});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

BigInt multinomial(std::span<const std::size_t> lengths) {
    const std::size_t total = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
    BigInt result = factorial(total);
    for (std::size_t l : lengths) {
        result /= factorial(l);
    }
    return result;
}

BigInt count_scenarios(std::span<const std::size_t> lengths) {
    BigInt result = multinomial(lengths);
    for (std::size_t l : lengths) {
        if (l >= 2) {
            result *= boost::multiprecision::pow(BigInt(l + 1), static_cast<unsigned>(l - 1));
        }
    }
    return result;
}

std::size_t for_each_scenario(int n, const ScenarioVisitor& visit, bool force) {
    if (n < 1) {
        throw DomainError("cycle size must be at least 1");
    }
    if (n > kMaxEnumeratedCycle && !force) {
        throw GuardError("refusing to enumerate scenarios for n = " + std::to_string(n) + " > " +
                         std::to_string(kMaxEnumeratedCycle) + " without force");
    }
    FissionScenario current{n, {}};
    std::size_t count = 0;
    bool stopped = false;

    std::function<void(const CyclePartition&)> descend = [&](const CyclePartition& part) {
        if (part.all_singletons()) {
            ++count;
            stopped = !visit(current);
            return;
        }
        for (const Fission& f : applicable_fissions(part)) {
            current.steps.push_back(f);
            descend(apply_fission(part, f));
            current.steps.pop_back();
            if (stopped) {
                return;
            }
        }
    };
    descend(CyclePartition(n));
    return count;
}

std::vector<FissionScenario> enumerate_scenarios(int n, std::optional<std::size_t> limit,
                                                 bool force) {
    std::vector<FissionScenario> out;
    if (limit && *limit == 0) {
        return out;
    }
    for_each_scenario(
        n,
        [&](const FissionScenario& s) {
            out.push_back(s);
            return !limit || out.size() < *limit;
        },
        force);
    return out;
}

std::size_t for_each_dcj_sorting_scenario(const Genome& a, const Genome& b,
                                          const DcjScenarioVisitor& visit, bool force) {
    const std::size_t d = dcj_distance(a, b);
    if (d > kMaxOracleDistance && !force) {
        throw GuardError("refusing brute-force DCJ search at distance " + std::to_string(d) + " > " +
                         std::to_string(kMaxOracleDistance) + " without force");
    }
    std::vector<DcjOp> current;
    std::size_t count = 0;
    bool stopped = false;

    std::function<void(const Genome&, std::size_t)> descend = [&](const Genome& g,
                                                                  std::size_t dist) {
        if (dist == 0) {
            ++count;
            stopped = !visit(current);
            return;
        }
        const std::vector<Adjacency> adjs(g.adjacencies().begin(), g.adjacencies().end());
        for (std::size_t i = 0; i < adjs.size(); ++i) {
            for (std::size_t j = i + 1; j < adjs.size(); ++j) {
                for (const DcjOp& op : DcjOp::rewirings(adjs[i], adjs[j])) {
                    Genome next = apply_dcj(g, op);
                    if (dcj_distance(next, b) + 1 != dist) {
                        continue;
                    }
                    current.push_back(op);
                    descend(next, dist - 1);
                    current.pop_back();
                    if (stopped) {
                        return;
                    }
                }
            }
        }
    };
    descend(a, d);
    return count;
}

std::vector<std::vector<DcjOp>> enumerate_dcj_sorting_scenarios(const Genome& a, const Genome& b,
                                                                std::optional<std::size_t> limit,
                                                                bool force) {
    std::vector<std::vector<DcjOp>> out;
    if (limit && *limit == 0) {
        return out;
    }
    for_each_dcj_sorting_scenario(
        a, b,
        [&](const std::vector<DcjOp>& ops) {
            out.push_back(ops);
            return !limit || out.size() < *limit;
        },
        force);
    return out;
}

FissionScenario sample_scenario(int n, RandomSource& rng) {
    if (n < 1) {
        throw DomainError("cycle size must be at least 1");
    }
    std::vector<int> code;
    for (int i = 0; i + 2 < n; ++i) {
        code.push_back(static_cast<int>(rng.uniform(static_cast<std::uint64_t>(n))));
    }
    return tree_to_scenario(prufer_decode(code, n));
}

std::vector<std::size_t> interleaving(std::span<const std::size_t> lengths, RandomSource& rng) {
    std::vector<std::size_t> remaining(lengths.begin(), lengths.end());
    std::size_t total = std::accumulate(remaining.begin(), remaining.end(), std::size_t{0});
    std::vector<std::size_t> out;
    out.reserve(total);
    for (; total > 0; --total) {
        // cycle m is next with probability remaining[m] / total
        std::uint64_t r = rng.uniform(total);
        std::size_t m = 0;
        while (r >= remaining[m]) {
            r -= remaining[m++];
        }
        --remaining[m];
        out.push_back(m);
    }
    return out;
}

std::vector<std::size_t> interleaving(std::span<const std::size_t> lengths, const BigInt& index) {
    if (index < 0 || index >= multinomial(lengths)) {
        throw DomainError("interleaving index " + to_decimal(index) + " out of range");
    }
    std::vector<std::size_t> remaining(lengths.begin(), lengths.end());
    std::size_t total = std::accumulate(remaining.begin(), remaining.end(), std::size_t{0});
    BigInt rank = index;
    std::vector<std::size_t> out;
    out.reserve(total);
    for (; total > 0; --total) {
        for (std::size_t m = 0; m < remaining.size(); ++m) {
            if (remaining[m] == 0) {
                continue;
            }
            --remaining[m];
            BigInt block = multinomial(remaining);
            if (rank < block) {
                out.push_back(m);
                break;
            }
            rank -= block;
            ++remaining[m];
        }
    }
    return out;
}

std::vector<std::size_t> scenario_lengths(const std::vector<FissionScenario>& per_cycle) {
    std::vector<std::size_t> lengths;
    lengths.reserve(per_cycle.size());
    for (const FissionScenario& s : per_cycle) {
        lengths.push_back(s.steps.size());
    }
    return lengths;
}

namespace {

std::vector<InterleavedStep> substitute(const std::vector<FissionScenario>& per_cycle,
                                        const std::vector<std::size_t>& order) {
    std::vector<std::size_t> used(per_cycle.size(), 0);
    std::vector<InterleavedStep> out;
    out.reserve(order.size());
    for (std::size_t m : order) {
        out.push_back({m, per_cycle[m].steps[used[m]++]});
    }
    return out;
}

}  // namespace

std::vector<InterleavedStep> interleave(const std::vector<FissionScenario>& per_cycle,
                                        RandomSource& rng) {
    return substitute(per_cycle, interleaving(scenario_lengths(per_cycle), rng));
}

std::vector<InterleavedStep> interleave(const std::vector<FissionScenario>& per_cycle,
                                        const BigInt& index) {
    return substitute(per_cycle, interleaving(scenario_lengths(per_cycle), index));
}

}  // namespace dcjscen
