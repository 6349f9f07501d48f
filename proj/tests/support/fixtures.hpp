#pragma once

#include "dcjscen/fission.hpp"
#include "dcjscen/genome.hpp"

namespace dcjscen::fixtures {

// Two co-tailed genomes whose adjacency graph is a single cycle of length 10.
inline Genome genome_a() { return parse_genome("(a -f -b e -d)\n(-c g)"); }
inline Genome genome_b() { return parse_genome("(a b c)\n(d e f g)"); }

// The eight-fission scenario on (1 2 ... 9) used throughout the tests.
inline FissionScenario nine_cycle_scenario() {
    return {9, {{4, 5}, {8, 9}, {1, 8}, {2, 6}, {2, 7}, {3, 6}, {2, 8}, {4, 6}}};
}

// Cycle profile (2, 1): a 6-cycle on the linear chromosome, a 4-cycle on the
// circular one.
inline Genome two_cycle_a() { return parse_genome("(a c b d)\n[x -y]"); }
inline Genome two_cycle_b() { return parse_genome("(a b c d)\n[x y]"); }

}  // namespace dcjscen::fixtures
