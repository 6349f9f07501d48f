#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dcjscen {

enum class End : std::uint8_t { Tail, Head };

// One end of a block. Ordered by block name, then tail < head; this is the
// single total order used for canonical labelings throughout the library.
struct Extremity {
    std::string block;
    End end = End::Tail;

    auto operator<=>(const Extremity&) const = default;
};

std::string to_string(const Extremity& e);

// A block read in a given orientation. Ordered by name, then forward < reverse.
struct SignedBlock {
    std::string name;
    bool reversed = false;

    auto operator<=>(const SignedBlock&) const = default;
};

std::string to_string(const SignedBlock& b);
SignedBlock parse_signed_block(std::string_view token);
SignedBlock flipped(SignedBlock b);

// Extremity met first / last when reading the signed block left to right.
Extremity left_end(const SignedBlock& b);
Extremity right_end(const SignedBlock& b);

// Unordered pair of distinct extremities, stored smallest first.
class Adjacency {
public:
    Adjacency(Extremity a, Extremity b);

    const Extremity& first() const noexcept { return first_; }
    const Extremity& second() const noexcept { return second_; }
    bool contains(const Extremity& e) const noexcept { return first_ == e || second_ == e; }
    const Extremity& other(const Extremity& e) const;

    auto operator<=>(const Adjacency&) const = default;

private:
    Extremity first_;
    Extremity second_;
};

// The adjacency (x y) formed by reading x then y; (x y) == (-y -x).
Adjacency make_adjacency(const SignedBlock& x, const SignedBlock& y);
Adjacency make_adjacency(std::string_view x, std::string_view y);

// Signed-block reading of an adjacency, starting from its smaller extremity.
std::pair<SignedBlock, SignedBlock> signed_pair(const Adjacency& adj);
std::string to_string(const Adjacency& adj);

enum class ChromosomeKind : std::uint8_t { Linear, Circular };

struct Chromosome {
    ChromosomeKind kind = ChromosomeKind::Linear;
    std::vector<SignedBlock> blocks;

    bool operator==(const Chromosome&) const = default;
};

// A genome over uniquely named blocks. The chromosome list is kept as given
// (or as rebuilt after a DCJ); the adjacency and telomere sets are the
// canonical form used for comparisons and for the adjacency graph.
class Genome {
public:
    Genome() = default;
    explicit Genome(std::vector<Chromosome> chromosomes);

    // Rebuild chromosomes from an adjacency set: linear chromosomes are walked
    // from their telomeres, the remaining blocks form circular chromosomes.
    static Genome from_adjacencies(const std::set<std::string>& blocks,
                                   const std::set<Adjacency>& adjacencies,
                                   const std::set<Extremity>& telomeres);

    const std::vector<Chromosome>& chromosomes() const noexcept { return chromosomes_; }
    const std::set<Adjacency>& adjacencies() const noexcept { return adjacencies_; }
    const std::set<Extremity>& telomeres() const noexcept { return telomeres_; }
    const std::set<std::string>& blocks() const noexcept { return blocks_; }

    std::size_t block_count() const noexcept { return blocks_.size(); }
    std::size_t linear_count() const noexcept { return telomeres_.size() / 2; }

    // Union of {x1, -xm} over the linear chromosomes (x1 ... xm).
    std::set<SignedBlock> tails() const;

private:
    std::vector<Chromosome> chromosomes_;
    std::set<std::string> blocks_;
    std::set<Adjacency> adjacencies_;
    std::set<Extremity> telomeres_;
};

struct NamedGenome {
    std::string name;
    Genome genome;
};

// Genome text: one or more chromosomes per line, `( ... )` linear and
// `[ ... ]` circular, `-` marks reverse orientation, `#` starts a comment.
// `>Name` lines start a new genome in multi-genome files.
std::vector<NamedGenome> parse_genome_file(std::string_view text);
Genome parse_genome(std::string_view text);

// Canonical text: each chromosome in its lexicographically smallest reading,
// chromosomes sorted, one per line, no trailing newline.
std::string serialize_genome(const Genome& g);

bool co_tailed(const Genome& a, const Genome& b);

std::set<Adjacency> adjacency_set(const Genome& g);

bool genomes_equal(const Genome& a, const Genome& b);

// A double-cut-and-join: the two `cut` adjacencies are replaced by the two
// `form` adjacencies over the same four extremities.
class DcjOp {
public:
    DcjOp(Adjacency cut1, Adjacency cut2, Adjacency form1, Adjacency form2);

    const std::array<Adjacency, 2>& cut() const noexcept { return cut_; }
    const std::array<Adjacency, 2>& form() const noexcept { return form_; }
    DcjOp inverse() const;

    // Both non-identity rewirings of a pair of adjacencies.
    static std::array<DcjOp, 2> rewirings(const Adjacency& x, const Adjacency& y);

    auto operator<=>(const DcjOp&) const = default;

private:
    std::array<Adjacency, 2> cut_;
    std::array<Adjacency, 2> form_;
};

std::string to_string(const DcjOp& op);

Genome apply_dcj(const Genome& g, const DcjOp& op);

}  // namespace dcjscen
