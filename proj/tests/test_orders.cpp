#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "revlab/orders.hpp"

using namespace revlab;

namespace {

ModelSet ms(std::initializer_list<int> worlds) {
    ModelSet m;
    for (int w : worlds) m = m.with(w);
    return m;
}

LogicPtr tiny_logic(int worlds, std::vector<ModelSet> sentence_models) {
    std::vector<std::string> wnames, snames;
    for (int i = 0; i < worlds; ++i) wnames.push_back("w" + std::to_string(i));
    for (std::size_t i = 0; i < sentence_models.size(); ++i) snames.push_back("s" + std::to_string(i));
    return std::make_shared<Logic>("tiny", wnames, snames, sentence_models);
}

Relation from_rows(LogicPtr logic, std::vector<std::uint64_t> rows) {
    return Relation(std::move(logic), std::move(rows));
}

// reflexive strict 3-cycle w0 < w1 < w2 < w0
Relation strict_cycle(LogicPtr logic) {
    return from_rows(std::move(logic), {0b011, 0b110, 0b101});
}

}  // namespace

TEST_CASE("min_set uses the universal definition") {
    auto logic = tiny_logic(3, {ms({0, 1, 2})});
    Relation cycle = strict_cycle(logic);
    CHECK(min_set(cycle, ms({0, 1, 2})) == ModelSet{});
    CHECK(min_set(cycle, ms({0, 1})) == ms({0}));
    CHECK(min_set(cycle, ms({})) == ModelSet{});

    Relation everything = Relation::all_pairs(logic);
    CHECK(min_set(everything, ms({0, 2})) == ms({0, 2}));
    CHECK(min_set(everything, ms({1})) == ms({1}));
}

TEST_CASE("structural predicates with least witnesses") {
    auto logic = tiny_logic(3, {ms({0, 1, 2})});

    Relation identity = Relation::identity(logic);
    auto total = is_total(identity);
    CHECK(!total.holds);
    CHECK(total.witness->worlds == std::vector<int>{0, 1});

    Relation cycle = strict_cycle(logic);
    CHECK(is_total(cycle).holds);
    CHECK(is_reflexive(cycle).holds);
    auto trans_verdict = is_transitive(cycle);
    CHECK(!trans_verdict.holds);
    CHECK(trans_verdict.witness->worlds == std::vector<int>{0, 1, 2});
    CHECK(!is_preorder(cycle).holds);

    CHECK(is_preorder(Relation::all_pairs(logic)).holds);
}

TEST_CASE("min-retractive: equivalent-to-minimal must be minimal") {
    // worlds a,b,c; expressible: omega and {a,b}; a ~ b, a below c, b not below c
    auto logic = tiny_logic(3, {ms({0, 1})});
    Relation rel = from_rows(logic, {0b111, 0b011, 0b111});
    auto verdict = is_min_retractive(rel);
    CHECK(!verdict.holds);
    CHECK(verdict.witness->classes == std::vector<int>{0});
    CHECK(verdict.witness->worlds == std::vector<int>{1, 0});

    SUBCASE("preorders are always min-retractive") {
        SplitMix64 rng(11);
        for (int round = 0; round < 100; ++round) {
            auto fuzz = testgen::random_logic(rng);
            Relation preorder = testgen::random_total_preorder(rng, fuzz);
            CHECK(is_min_retractive(preorder).holds);
        }
    }
}

TEST_CASE("min-complete: cycles with no escape fail, covered cycles hold") {
    // {a,b,c} expressible and cyclic: no universal minimum
    auto logic = tiny_logic(3, {ms({0, 1, 2})});
    auto verdict = is_min_complete(strict_cycle(logic));
    CHECK(!verdict.holds);
    CHECK(verdict.witness->classes == std::vector<int>{0});

    // cycle over w0..w2 but every class is a singleton or has w3 at the bottom
    auto logic4 = tiny_logic(4, {ms({0}), ms({1}), ms({2}), ms({3})});
    std::vector<std::uint64_t> rows(4, 0);
    auto set = [&](int i, int j) { rows[i] |= std::uint64_t{1} << j; };
    for (int i = 0; i < 4; ++i) set(i, i);
    set(0, 1); set(1, 2); set(2, 0);              // strict cycle w0<w1<w2<w0
    for (int i = 0; i < 3; ++i) set(3, i);        // w3 below everything
    for (int i = 0; i < 3; ++i) set(i, 3);        // and everything below w3 (total)
    Relation covered(logic4, rows);
    CHECK(is_total(covered).holds);
    CHECK(is_min_complete(covered).holds);
}

TEST_CASE("min-expressible fails when a minimum is not a base's model set") {
    auto lex = make_lex_paper();
    // ranks: w0 and w4 at the bottom -> min over omega is {w0,w4}, inexpressible
    std::vector<std::uint64_t> rows(6, 0);
    auto rank = [&](int w) { return (w == 0 || w == 4) ? 0 : 1; };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (rank(i) <= rank(j)) rows[i] |= std::uint64_t{1} << j;
    Relation rel(lex, rows);
    auto verdict = is_min_expressible(rel);
    CHECK(!verdict.holds);
    CHECK(verdict.witness->classes == std::vector<int>{0});

    SUBCASE("every relation on a propositional logic is min-expressible") {
        auto p2 = make_propositional(2);
        SplitMix64 rng(5);
        for (int round = 0; round < 50; ++round)
            CHECK(is_min_expressible(testgen::random_total_relation(rng, p2)).holds);
    }
}

TEST_CASE("order_extend ranks by longest strict chain") {
    auto logic = tiny_logic(3, {ms({0, 1, 2})});

    SUBCASE("already-total preorder keeps its layers") {
        std::vector<std::uint64_t> rows(3, 0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if ((i == 0 ? 0 : 1) <= (j == 0 ? 0 : 1)) rows[i] |= std::uint64_t{1} << j;
        Relation layered(logic, rows);
        CHECK(order_extend(layered) == layered);
    }

    SUBCASE("incomparable fresh worlds become equivalent") {
        Relation identity = Relation::identity(logic);
        Relation extended = order_extend(identity);
        CHECK(extended == Relation::all_pairs(logic));
    }

    SUBCASE("chain plus incomparable world") {
        // w0 < w1, w2 incomparable
        Relation partial = from_rows(logic, {0b011, 0b010, 0b100});
        Relation extended = order_extend(partial);
        CHECK(extended.le(0, 2));
        CHECK(extended.le(2, 0));
        CHECK(extended.strict(0, 1));
        CHECK(extended.strict(2, 1));
    }

    SUBCASE("contract violations throw") {
        CHECK_THROWS_AS(order_extend(strict_cycle(logic)), ContractError);
        Relation irreflexive = from_rows(logic, {0b000, 0b010, 0b100});
        CHECK_THROWS_AS(order_extend(irreflexive), ContractError);
    }
}

TEST_CASE("order_extend postconditions on fuzzed partial preorders") {
    SplitMix64 rng(31337);
    for (int round = 0; round < 200; ++round) {
        auto logic = testgen::random_logic(rng);
        const int n = logic->world_count();
        // product order on random 2-vectors: reflexive, transitive, partial
        std::vector<std::pair<int, int>> v(n);
        for (auto& p : v) p = {rng.range(0, 3), rng.range(0, 3)};
        std::vector<std::uint64_t> rows(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (v[i].first <= v[j].first && v[i].second <= v[j].second)
                    rows[i] |= std::uint64_t{1} << j;
        Relation partial(logic, rows);
        Relation extended = order_extend(partial);

        CHECK(is_total(extended).holds);
        CHECK(is_preorder(extended).holds);
        CHECK(partial.contained_in(extended));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (partial.strict(i, j)) CHECK(extended.strict(i, j));
    }
}

TEST_CASE("footnote equivalence: universal min equals no-strictly-smaller min on total relations") {
    SplitMix64 rng(99);
    for (int round = 0; round < 300; ++round) {
        auto logic = testgen::random_logic(rng);
        Relation rel = testgen::random_total_relation(rng, logic);
        const std::uint64_t space = std::uint64_t{1} << logic->world_count();
        for (std::uint64_t bits = 1; bits < space; ++bits) {
            ModelSet subset = ModelSet::from_bits(bits);
            CHECK(min_set(rel, subset) == oracle::min_no_strictly_smaller(rel, subset));
        }
    }
}

TEST_CASE("min over unions of classes decomposes for min-retractive relations") {
    SplitMix64 rng(4242);
    int scanned = 0;
    for (int round = 0; round < 150; ++round) {
        auto logic = testgen::random_logic(rng);
        Relation rel = testgen::random_min_retractive_relation(rng, logic);
        REQUIRE(is_min_retractive(rel).holds);
        const auto& classes = logic->classes();
        for (std::size_t a = 0; a < classes.size(); ++a) {
            for (std::size_t b = 0; b < classes.size(); ++b) {
                ModelSet u = classes[a].models | classes[b].models;
                if (logic->class_of(u) < 0) continue;
                ModelSet whole = min_set(rel, u);
                ModelSet ma = min_set(rel, classes[a].models);
                ModelSet mb = min_set(rel, classes[b].models);
                ModelSet rebuilt;
                if (ma.intersects(whole)) rebuilt = rebuilt | ma;
                if (mb.intersects(whole)) rebuilt = rebuilt | mb;
                CHECK(whole == rebuilt);
                ++scanned;
            }
        }
    }
    CHECK(scanned > 1000);
}

TEST_CASE("relation construction validates shape") {
    auto logic = tiny_logic(2, {ms({0})});
    CHECK_THROWS_AS(Relation(logic, {0b11}), InputError);
    CHECK_THROWS_AS(Relation(logic, {0b111, 0b11}), InputError);
    CHECK_THROWS_AS(Relation(nullptr, {}), InputError);
}
