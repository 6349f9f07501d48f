#include "dcjscen/parking.hpp"

#include <algorithm>
#include <set>

#include "dcjscen/errors.hpp"

namespace dcjscen {

bool is_parking_function(std::span<const int> seq) {
    std::vector<int> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1 || sorted[i] > static_cast<int>(i) + 1) {
            return false;
        }
    }
    return true;
}

ParkingFunction::ParkingFunction(std::vector<int> values) : values_(std::move(values)) {
    if (!is_parking_function(values_)) {
        throw DomainError("not a parking function");
    }
}

ParkingFunction scenario_to_parking(const FissionScenario& s) {
    require_valid(s);
    std::vector<int> bases;
    bases.reserve(s.steps.size());
    for (const Fission& f : s.steps) {
        bases.push_back(f.base);
    }
    return ParkingFunction(std::move(bases));
}

DecodedParking decode_parking(const ParkingFunction& pf) {
    const auto& p = pf.values();
    const int n = pf.cycle_size();
    const std::size_t m = p.size();

    std::set<int> free;
    for (int q = 2; q <= n; ++q) {
        free.insert(q);
    }
    std::vector<int> partners(m, 0);
    for (int base = n - 1; base >= 1; --base) {
        for (std::size_t i = 0; i < m; ++i) {
            if (p[i] != base) {
                continue;
            }
            auto it = free.upper_bound(base);
            if (it == free.end()) {
                throw DomainError("no partner left for base " + std::to_string(base));
            }
            partners[i] = *it;
            free.erase(it);
        }
    }

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        pairs.emplace_back(p[i], partners[i]);
    }

    DecodedParking out{FissionScenario{n, {}}, partners};
    std::span<const std::pair<int, int>> all(pairs);
    for (std::size_t i = 0; i < m; ++i) {
        out.scenario.steps.push_back({p[i], sup(all.subspan(i + 1), partners[i])});
    }
    return out;
}

FissionScenario parking_to_scenario(const ParkingFunction& pf) {
    return decode_parking(pf).scenario;
}

BigInt count_parking(unsigned m) {
    if (m == 0) {
        return 1;
    }
    return boost::multiprecision::pow(BigInt(m + 1), m - 1);
}

}  // namespace dcjscen
