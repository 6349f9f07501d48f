#include <doctest.h>

#include <random>

#include "dcjscen/errors.hpp"
#include "dcjscen/genome.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dcjscen;

TEST_SUITE("genome_model") {

TEST_CASE("parse genome A") {
    Genome a = fixtures::genome_a();
    CHECK(a.block_count() == 7);
    CHECK(a.linear_count() == 2);
    REQUIRE(a.chromosomes().size() == 2);
    CHECK(a.chromosomes()[0].blocks.size() == 5);
    CHECK(a.chromosomes()[0].blocks[1] == SignedBlock{"f", true});
    CHECK(a.chromosomes()[1].kind == ChromosomeKind::Linear);
}

TEST_CASE("single block genome has no adjacencies") {
    Genome g = parse_genome("(a)");
    CHECK(g.block_count() == 1);
    CHECK(g.linear_count() == 1);
    CHECK(g.adjacencies().empty());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_genome("(a b) (a c)"), ParseError);
    CHECK_THROWS_AS(parse_genome("()"), ParseError);
    CHECK_THROWS_AS(parse_genome("(a b"), ParseError);
    CHECK_THROWS_AS(parse_genome("(a b$)"), ParseError);
    CHECK_THROWS_AS(parse_genome("a b"), ParseError);
    CHECK_THROWS_AS(parse_genome(""), ParseError);

    try {
        parse_genome("(a b)\n(c d e\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 7);
    }
}

TEST_CASE("comments, headers and circular chromosomes") {
    auto gs = parse_genome_file("# two genomes\n>first\n(a b) [c d] # trailing\n>second\n(a b)\n[c -d]\n");
    REQUIRE(gs.size() == 2);
    CHECK(gs[0].name == "first");
    CHECK(gs[1].name == "second");
    CHECK(gs[0].genome.linear_count() == 1);
    CHECK(gs[0].genome.adjacencies().size() == 3);
    CHECK_THROWS_AS(parse_genome_file(">x\n>y\n(a)"), ParseError);
}

TEST_CASE("serialize") {
    CHECK(serialize_genome(fixtures::genome_a()) == "(a -f -b e -d)\n(-c g)");
    CHECK(serialize_genome(parse_genome("[a b]")) == "[a b]");
    CHECK(serialize_genome(parse_genome("(-g c)\n(d -e b f -a)")) == "(a -f -b e -d)\n(-c g)");
    CHECK(serialize_genome(parse_genome("[-b -a]")) == "[a b]");
    CHECK(serialize_genome(parse_genome("[c a b]")) == "[a b c]");
}

TEST_CASE("serialize/parse round trip on random genomes") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        Genome g = oracle::random_genome(rng, 1 + static_cast<int>(rng() % 12));
        const std::string text = serialize_genome(g);
        Genome back = parse_genome(text);
        CHECK(genomes_equal(g, back));
        CHECK(serialize_genome(back) == text);
    }
}

TEST_CASE("co-tailed") {
    Genome a = fixtures::genome_a();
    Genome b = fixtures::genome_b();
    CHECK(co_tailed(a, b));
    const std::set<SignedBlock> expected{{"a", false}, {"c", true}, {"d", false}, {"g", true}};
    CHECK(a.tails() == expected);
    CHECK(b.tails() == expected);
    CHECK(co_tailed(a, a));
    CHECK_FALSE(co_tailed(parse_genome("(a b)(c)"), parse_genome("(a b c)")));
    CHECK(co_tailed(parse_genome("[a b]"), parse_genome("[a -b]")));
    CHECK_THROWS_AS(co_tailed(parse_genome("(a b)"), parse_genome("(a c)")), DomainError);
}

TEST_CASE("adjacency sets") {
    const auto& adj_a = adjacency_set(fixtures::genome_a());
    CHECK(adj_a.size() == 5);
    CHECK(adj_a.contains(make_adjacency("e", "-d")));
    CHECK(adj_a.contains(make_adjacency("-c", "g")));
    CHECK(adj_a.contains(make_adjacency("d", "-e")));  // (x y) = (-y -x)

    const auto& adj_b = adjacency_set(fixtures::genome_b());
    CHECK(adj_b.size() == 5);
    CHECK(adj_b.contains(make_adjacency("a", "b")));

    const auto& circ = adjacency_set(parse_genome("[a b]"));
    CHECK(circ == std::set<Adjacency>{make_adjacency("a", "b"), make_adjacency("b", "a")});
}

TEST_CASE("adjacency count is N - K") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Genome g = oracle::random_genome(rng, 1 + static_cast<int>(rng() % 15));
        CHECK(g.adjacencies().size() == g.block_count() - g.linear_count());
        CHECK(g.adjacencies().size() * 2 + g.telomeres().size() == 2 * g.block_count());
    }
}

TEST_CASE("signed pair reading") {
    CHECK(to_string(make_adjacency("a", "-f")) == "(a -f)");
    CHECK(to_string(make_adjacency("-c", "g")) == "(-c g)");
    CHECK(to_string(make_adjacency("-g", "c")) == "(-c g)");
    CHECK(to_string(make_adjacency("f", "g")) == "(f g)");
}

TEST_CASE("apply_dcj") {
    Genome g = parse_genome("(a b c d)");
    DcjOp inversion(make_adjacency("a", "b"), make_adjacency("c", "d"), make_adjacency("a", "-c"),
                    make_adjacency("-b", "d"));
    Genome inv = apply_dcj(g, inversion);
    CHECK(genomes_equal(inv, parse_genome("(a -c -b d)")));
    CHECK(inv.telomeres() == g.telomeres());

    DcjOp excision(make_adjacency("a", "b"), make_adjacency("c", "d"), make_adjacency("a", "d"),
                   make_adjacency("c", "b"));
    Genome exc = apply_dcj(g, excision);
    CHECK(genomes_equal(exc, parse_genome("(a d)\n[b c]")));
    CHECK(serialize_genome(exc) == "(a d)\n[b c]");

    DcjOp missing(make_adjacency("a", "c"), make_adjacency("b", "d"), make_adjacency("a", "d"),
                  make_adjacency("b", "c"));
    CHECK_THROWS_AS(apply_dcj(g, missing), DomainError);
}

TEST_CASE("malformed DCJ operations are rejected") {
    // identity rewiring
    CHECK_THROWS_AS(DcjOp(make_adjacency("a", "b"), make_adjacency("c", "d"), make_adjacency("a", "b"),
                          make_adjacency("c", "d")),
                    DomainError);
    // different extremities
    CHECK_THROWS_AS(DcjOp(make_adjacency("a", "b"), make_adjacency("c", "d"), make_adjacency("a", "e"),
                          make_adjacency("c", "b")),
                    DomainError);
    // overlapping cuts
    CHECK_THROWS_AS(DcjOp(make_adjacency("a", "b"), make_adjacency("a", "b"), make_adjacency("a", "b"),
                          make_adjacency("a", "b")),
                    DomainError);
    CHECK_THROWS_AS(Adjacency({"a", End::Head}, {"a", End::Head}), DomainError);
}

TEST_CASE("DCJ then its inverse restores the genome") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        Genome g = oracle::random_genome(rng, 2 + static_cast<int>(rng() % 10));
        std::vector<Adjacency> adjs(g.adjacencies().begin(), g.adjacencies().end());
        if (adjs.size() < 2) {
            continue;
        }
        const auto& x = adjs[rng() % adjs.size()];
        const auto& y = adjs[rng() % adjs.size()];
        if (x == y) {
            continue;
        }
        for (const DcjOp& op : DcjOp::rewirings(x, y)) {
            Genome h = apply_dcj(g, op);
            CHECK(h.block_count() == g.block_count());
            CHECK(h.linear_count() == g.linear_count());
            CHECK(h.telomeres() == g.telomeres());
            CHECK(genomes_equal(apply_dcj(h, op.inverse()), g));
        }
    }
}

TEST_CASE("genomes_equal") {
    CHECK(genomes_equal(parse_genome("(a b)"), parse_genome("(-b -a)")));
    CHECK(genomes_equal(parse_genome("(a b)\n(c)"), parse_genome("(c)\n(a b)")));
    CHECK(genomes_equal(parse_genome("[a b c]"), parse_genome("[-b -a -c]")));
    CHECK_FALSE(genomes_equal(parse_genome("(a b)"), parse_genome("(b a)")));
    CHECK_FALSE(genomes_equal(parse_genome("(a b)"), parse_genome("[a b]")));
}

}  // TEST_SUITE
