#include <doctest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "oracles.hpp"
#include "revlab/loops.hpp"

using namespace revlab;

namespace {

ModelSet ms(std::initializer_list<int> worlds) {
    ModelSet m;
    for (int w : worlds) m = m.with(w);
    return m;
}

std::set<std::uint64_t> gamma_model_sets(const Logic& logic, const CriticalLoop& loop) {
    std::set<std::uint64_t> out;
    for (int g : loop.gamma_classes) out.insert(logic.classes()[g].models.bits());
    return out;
}

void check_detector_matches_oracle(const LogicPtr& logic) {
    auto oracle_triples = oracle::critical_loop_triples(*logic);
    LoopSearchResult found = find_critical_loops(logic, 1000);
    REQUIRE(found.total_count == static_cast<int>(oracle_triples.size()));
    std::set<std::set<std::uint64_t>> ours;
    for (const auto& loop : found.loops) ours.insert(gamma_model_sets(*logic, loop));
    for (const auto& t : oracle_triples)
        CHECK(ours.count({t[0], t[1], t[2]}) == 1);
}

}  // namespace

TEST_CASE("lex_core admits exactly the repaired loop") {
    auto core = make_lex_core();
    LoopSearchResult result = find_critical_loops(core, 10);
    REQUIRE(result.total_count == 1);
    REQUIRE(result.loops.size() == 1);
    const CriticalLoop& loop = result.loops[0];

    CHECK(gamma_model_sets(*core, loop) ==
          std::set<std::uint64_t>{ms({1, 2}).bits(), ms({1, 3}).bits(), ms({2, 3}).bits()});
    std::set<std::uint64_t> primes;
    for (int p : loop.gamma_prime_classes) primes.insert(core->classes()[p].models.bits());
    CHECK(primes == std::set<std::uint64_t>{ms({1}).bits(), ms({2}).bits(), ms({3}).bits()});
    CHECK(core->classes()[loop.k_class].models == ms({0}));

    SUBCASE("certificate replays") { CHECK(loop.revalidate(*core)); }

    SUBCASE("condition-3 evidence names a witness for every qualifying class") {
        // qualifying classes on lex_core: the full set and the phi4 class
        REQUIRE(loop.condition3.size() == 2);
        CHECK(core->classes()[loop.condition3[0].first].models == core->all_worlds());
        CHECK(core->classes()[loop.condition3[1].first].models == ms({1, 2, 3, 4, 5}));
        for (auto [g, w] : loop.condition3) {
            ModelSet witness = core->classes()[w].models;
            CHECK(!witness.empty());
            CHECK(witness.subset_of(core->classes()[g].models - ms({1, 2, 3})));
        }
    }
}

TEST_CASE("lex_paper admits no critical loop at all") {
    auto lex = make_lex_paper();
    CHECK(find_critical_loops(lex, 10).total_count == 0);
    check_detector_matches_oracle(lex);

    // the reference triple itself dies on condition (3): the {w1,w2,w3}
    // class is expressible and has no escape region
    CHECK(lex->class_of(ms({1, 2, 3})) >= 0);
}

TEST_CASE("detector agrees with the oracle on every fixture") {
    for (auto logic : {make_lex_core(), make_propositional(2), make_horn(2)})
        check_detector_matches_oracle(logic);
}

TEST_CASE("disjunctive logics have no loops") {
    CHECK(find_critical_loops(make_propositional(2), 10).total_count == 0);
    CHECK(is_disjunctive(*make_propositional(1)).holds);
    CHECK(is_disjunctive(*make_propositional(2)).holds);
    CHECK(is_disjunctive(*make_propositional(3)).holds);
}

TEST_CASE("is_disjunctive reports least non-expressible unions") {
    auto lex = make_lex_paper();
    auto verdict = is_disjunctive(*lex);
    CHECK(!verdict.holds);
    // least failing pair in canonical order: the phi0 class with the psi4 class
    REQUIRE(verdict.witness.has_value());
    CHECK(lex->classes()[verdict.witness->classes[0]].models == ms({0, 1, 2, 3}));
    CHECK(lex->classes()[verdict.witness->classes[1]].models == ms({4}));

    auto core = make_lex_core();
    auto core_verdict = is_disjunctive(*core);
    CHECK(!core_verdict.holds);
    CHECK(core->classes()[core_verdict.witness->classes[0]].models == ms({1, 2}));
    CHECK(core->classes()[core_verdict.witness->classes[1]].models == ms({1, 3}));

    CHECK(!is_disjunctive(*make_horn(2)).holds);
}

TEST_CASE("one-world logics cannot host a loop") {
    auto logic = std::make_shared<Logic>(
        "solo", std::vector<std::string>{"w0"}, std::vector<std::string>{"s0"},
        std::vector<ModelSet>{ms({0})});
    CHECK(find_critical_loops(logic, 10).total_count == 0);
}

TEST_CASE("counterexample pipeline") {
    SUBCASE("lex_core: loop, audited operator, not representable") {
        PipelineReport report = counterexample_pipeline(make_lex_core());
        CHECK(report.loop_found);
        CHECK(report.loop_count == 1);
        REQUIRE(report.loop_audit.has_value());
        CHECK(report.loop_audit->all_passed());
        REQUIRE(report.verdict.has_value());
        CHECK(*report.verdict == RepStatus::not_representable);
        CHECK(report.findings.empty());
        REQUIRE(report.cycle.has_value());
        ModelSet worlds;
        for (int w : report.cycle->worlds) worlds = worlds.with(w);
        CHECK(worlds == ms({1, 2, 3}));
    }

    SUBCASE("propositional(2): no loop, fixtures lift") {
        PipelineReport report = counterexample_pipeline(make_propositional(2));
        CHECK(!report.loop_found);
        CHECK(report.findings.empty());
        REQUIRE(report.fixture_results.size() == 1);
        CHECK(report.fixture_results[0].first == "full-meet");
        CHECK(report.fixture_results[0].second == "representable");
    }

    SUBCASE("lex_paper: no loop; full meet lifts; builtin ex is excluded by its audit") {
        PipelineReport report = counterexample_pipeline(make_lex_paper());
        CHECK(!report.loop_found);
        CHECK(report.findings.empty());
        REQUIRE(report.fixture_results.size() == 2);
        CHECK(report.fixture_results[0].second == "representable");
        CHECK(report.fixture_results[1].second ==
              "fails the postulate audit; not a theorem subject");
    }
}

TEST_CASE("fuzz: union-closed logics never show loops, found loops always convert") {
    SplitMix64 rng(20240801);
    int converted = 0;
    for (int round = 0; round < 40; ++round) {
        auto disjunctive = testgen::random_disjunctive_logic(rng);
        CHECK(is_disjunctive(*disjunctive).holds);
        CHECK(find_critical_loops(disjunctive, 5).total_count == 0);

        auto logic = testgen::random_logic(rng);
        LoopSearchResult found = find_critical_loops(logic, 3);
        for (const auto& loop : found.loops) {
            CHECK(loop.revalidate(*logic));
            PipelineReport report = counterexample_pipeline(logic);
            CHECK(report.findings.empty());
            ++converted;
            break;
        }
    }
    // lex_core guarantees at least one conversion even if the fuzz misses
    PipelineReport anchor = counterexample_pipeline(make_lex_core());
    CHECK(anchor.findings.empty());
    INFO("fuzz conversions: " << converted);
}
