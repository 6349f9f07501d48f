#include <doctest.h>

#include "dcjscen/enumeration.hpp"
#include "dcjscen/errors.hpp"
#include "dcjscen/fission.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dcjscen;

TEST_SUITE("fission_core") {

TEST_CASE("apply_fission") {
    CHECK(apply_fission(CyclePartition(9), {4, 5}) == parse_partition(9, "(1 2 3 4 6 7 8 9)(5)"));
    CHECK(apply_fission(parse_partition(9, "(1)(2 3 4 6 7 8)(5)(9)"), {2, 6}) ==
          parse_partition(9, "(1)(2 7 8)(3 4 6)(5)(9)"));
    CHECK(apply_fission(CyclePartition(2), {1, 2}) == parse_partition(2, "(1)(2)"));
    CHECK(to_string(apply_fission(CyclePartition(4), {1, 4})) == "(1)(2 3 4)");
}

TEST_CASE("apply_fission errors") {
    CyclePartition p = parse_partition(4, "(1 3)(2)(4)");
    CHECK_THROWS_AS(apply_fission(p, {1, 2}), DomainError);  // different cycles
    CHECK_THROWS_AS(apply_fission(p, {3, 4}), DomainError);
    CHECK_THROWS_AS(apply_fission(p, {3, 1}), DomainError);  // base above top
    CHECK_THROWS_AS(apply_fission(p, {1, 1}), DomainError);
    CHECK_THROWS_AS(apply_fission(p, {0, 3}), DomainError);
    CHECK_THROWS_AS(apply_fission(p, {1, 5}), DomainError);
}

TEST_CASE("partitions") {
    CHECK_THROWS_AS(CyclePartition(0), DomainError);
    CHECK_THROWS_AS(parse_partition(3, "(1 2)"), DomainError);
    CHECK_THROWS_AS(parse_partition(3, "(1 2)(2 3)"), DomainError);
    CHECK_THROWS_AS(parse_partition(3, "(2 1)(3)"), DomainError);
    CHECK_THROWS_AS(parse_partition(3, "(1 2)(3"), ParseError);
    CHECK(to_string(parse_partition(5, "(3 5)(1 2)(4)")) == "(1 2)(3 5)(4)");
}

TEST_CASE("partner_of") {
    CHECK(partner_of(CyclePartition(9), {4, 5}) == 5);
    CHECK(partner_of(parse_partition(9, "(1)(2 7 8)(3 4 6)(5)(9)"), {2, 7}) == 7);
}

TEST_CASE("validate_scenario") {
    CHECK(validate_scenario(fixtures::nine_cycle_scenario()).ok);

    ValidationReport short_one = validate_scenario({3, {{1, 2}}});
    CHECK_FALSE(short_one.ok);
    CHECK(short_one.failing_step == 0);
    CHECK(short_one.reason.find("needs 2") != std::string::npos);

    ValidationReport crossing = validate_scenario({3, {{1, 2}, {2, 3}}});
    CHECK_FALSE(crossing);
    CHECK(crossing.failing_step == 2);
    REQUIRE(crossing.partition);
    CHECK(*crossing.partition == parse_partition(3, "(1 3)(2)"));

    CHECK(validate_scenario({1, {}}).ok);
    CHECK_FALSE(validate_scenario({0, {}}).ok);
    CHECK_THROWS_AS(require_valid({3, {{1, 2}}}), DomainError);
}

TEST_CASE("run_scenario") {
    const auto trace = run_scenario(fixtures::nine_cycle_scenario());
    REQUIRE(trace.size() == 9);
    CHECK(to_string(trace[1]) == "(1 2 3 4 6 7 8 9)(5)");
    CHECK(to_string(trace[2]) == "(1 2 3 4 6 7 8)(5)(9)");
    CHECK(to_string(trace[3]) == "(1)(2 3 4 6 7 8)(5)(9)");
    CHECK(to_string(trace[4]) == "(1)(2 7 8)(3 4 6)(5)(9)");
    CHECK(to_string(trace[5]) == "(1)(2 8)(3 4 6)(5)(7)(9)");
    CHECK(to_string(trace[6]) == "(1)(2 8)(3)(4 6)(5)(7)(9)");
    CHECK(to_string(trace[7]) == "(1)(2)(3)(4 6)(5)(7)(8)(9)");
    CHECK(trace[8].all_singletons());

    const auto tiny = run_scenario({2, {{1, 2}}});
    REQUIRE(tiny.size() == 2);
    CHECK(to_string(tiny[0]) == "(1 2)");
    CHECK(to_string(tiny[1]) == "(1)(2)");

    CHECK_THROWS_AS(run_scenario({3, {{2, 3}, {1, 3}}}), DomainError);
}

TEST_CASE("sup") {
    const std::vector<std::pair<int, int>> suffix{{2, 7}, {3, 4}, {2, 8}, {4, 6}};
    CHECK(sup(suffix, 3) == 6);
    CHECK(sup(suffix, 4) == 6);
    CHECK(sup(suffix, 6) == 6);
    CHECK(sup(suffix, 2) == 8);

    const auto pairs = base_partner_pairs(fixtures::nine_cycle_scenario());
    const std::vector<std::pair<int, int>> expected{{4, 5}, {8, 9}, {1, 2}, {2, 3},
                                                    {2, 7}, {3, 4}, {2, 8}, {4, 6}};
    CHECK(pairs == expected);
    for (int x : {1, 2, 8, 9}) {
        CHECK(sup(pairs, x) == 9);
    }
    CHECK(sup(pairs, 9) == 9);
}

TEST_CASE("sup maps the smallest element of every cycle to its largest") {
    for (int n = 1; n <= 6; ++n) {
        for_each_scenario(n, [&](const FissionScenario& s) {
            const auto pairs = base_partner_pairs(s);
            CHECK(sup(pairs, 1) == n);
            // the cycle excised by step i is destroyed by the steps after it
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                std::span<const std::pair<int, int>> later(pairs);
                CHECK(sup(later.subspan(i + 1), pairs[i].second) == s.steps[i].top);
            }
            return true;
        });
    }
}

TEST_CASE("partitions along every scenario are non-crossing refinements") {
    for (int n = 1; n <= 6; ++n) {
        for_each_scenario(n, [&](const FissionScenario& s) {
            const auto trace = run_scenario(s);
            for (std::size_t k = 0; k < trace.size(); ++k) {
                CHECK(blocks_increasing(trace[k]));
                CHECK(is_non_crossing(trace[k]));
                CHECK(oracle::non_crossing_by_quadruples(trace[k]));
                CHECK(oracle::nested_or_disjoint(trace[k]));
                if (k > 0) {
                    CHECK(refines(trace[k], trace[k - 1]));
                    CHECK(trace[k].blocks().size() == trace[k - 1].blocks().size() + 1);
                }
            }
            return true;
        });
    }
}

TEST_CASE("partners form a bijection onto 2..n and grow per base") {
    for (int n = 2; n <= 6; ++n) {
        for_each_scenario(n, [&](const FissionScenario& s) {
            const auto pairs = base_partner_pairs(s);
            std::set<int> partners;
            std::map<int, int> last;
            for (const auto& [p, q] : pairs) {
                partners.insert(q);
                CHECK(q > p);
                if (last.contains(p)) {
                    CHECK(q > last[p]);
                }
                last[p] = q;
            }
            CHECK(partners.size() == static_cast<std::size_t>(n - 1));
            CHECK(*partners.begin() == 2);
            CHECK(*partners.rbegin() == n);
            return true;
        });
    }
}

TEST_CASE("non-crossing detector") {
    CHECK(is_non_crossing(parse_partition(4, "(1 4)(2 3)")));
    CHECK_FALSE(is_non_crossing(parse_partition(4, "(1 3)(2 4)")));
    CHECK_FALSE(is_non_crossing(parse_partition(6, "(1 4)(2 6)(3)(5)")));
    CHECK(refines(parse_partition(4, "(1)(2 3)(4)"), parse_partition(4, "(1 4)(2 3)")));
    CHECK_FALSE(refines(parse_partition(4, "(1 2)(3 4)"), parse_partition(4, "(1 4)(2 3)")));
}

}  // TEST_SUITE
