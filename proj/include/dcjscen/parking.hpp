#pragma once

#include <span>
#include <vector>

#include "dcjscen/bigint.hpp"
#include "dcjscen/fission.hpp"

namespace dcjscen {

// A sequence p_1 ... p_m whose non-decreasing rearrangement p'_i satisfies
// 1 <= p'_i <= i. Encodes a fission scenario on (1 2 ... m+1).
class ParkingFunction {
public:
    ParkingFunction() = default;
    // Throws DomainError if `values` is not a parking function.
    explicit ParkingFunction(std::vector<int> values);

    const std::vector<int>& values() const noexcept { return values_; }
    std::size_t length() const noexcept { return values_.size(); }
    int cycle_size() const noexcept { return static_cast<int>(values_.size()) + 1; }

    bool operator==(const ParkingFunction&) const = default;
    auto operator<=>(const ParkingFunction&) const = default;

private:
    std::vector<int> values_;
};

bool is_parking_function(std::span<const int> seq);

// The bases of the scenario, in order.
ParkingFunction scenario_to_parking(const FissionScenario& s);

// Scenario reconstruction with the intermediate partner assignment exposed.
struct DecodedParking {
    FissionScenario scenario;
    std::vector<int> partners;
};

// Partners go to bases from the largest base value down, each occurrence
// (left to right) taking the smallest free element of {2..n} above it; the
// top of step i is the Sup of its partner over the pairs of steps after i.
DecodedParking decode_parking(const ParkingFunction& pf);
FissionScenario parking_to_scenario(const ParkingFunction& pf);

// (m+1)^(m-1), the number of parking functions of length m; 1 for m = 0.
BigInt count_parking(unsigned m);

}  // namespace dcjscen
