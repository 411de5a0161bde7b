#include <doctest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "oracles.hpp"
#include "revlab/kernel.hpp"

using namespace revlab;

namespace {

ModelSet ms(std::initializer_list<int> worlds) {
    ModelSet m;
    for (int w : worlds) m = m.with(w);
    return m;
}

BeliefBase named(const Logic& logic, std::initializer_list<const char*> names) {
    std::vector<std::string> v(names.begin(), names.end());
    return logic.base_from_names(v);
}

}  // namespace

TEST_CASE("lex fixtures match their published tables") {
    auto lex = make_lex_paper();
    CHECK(lex->world_count() == 6);
    CHECK(lex->sentence_count() == 11);
    CHECK(lex->sentence_models(*lex->sentence_index("φ0")) == ms({0, 1, 2, 3}));
    CHECK(lex->sentence_models(*lex->sentence_index("φ3")) == ms({1, 3}));
    CHECK(lex->sentence_models(*lex->sentence_index("ψ4")) == ms({4}));

    auto core = make_lex_core();
    CHECK(core->sentence_count() == 10);
    CHECK(!core->sentence_index("φ0").has_value());
    CHECK(core->sentence_models(*core->sentence_index("φ4")) == ms({1, 2, 3, 4, 5}));
}

TEST_CASE("models_of folds intersections, empty base means everything") {
    auto lex = make_lex_paper();
    CHECK(lex->models_of(named(*lex, {"ψ1"})) == ms({1}));
    CHECK(lex->models_of(BeliefBase{}) == ms({0, 1, 2, 3, 4, 5}));
    CHECK(lex->models_of(named(*lex, {"φ1", "φ2"})) == ms({2}));
    CHECK_THROWS_AS(lex->base_from_names({"nope"}), InputError);
    CHECK_THROWS_AS(lex->base_from_ids({42}), InputError);
}

TEST_CASE("entailment is model-set inclusion") {
    auto lex = make_lex_paper();
    BeliefBase psi1 = named(*lex, {"ψ1"});
    BeliefBase phi1 = named(*lex, {"φ1"});
    CHECK(lex->entails(psi1, phi1));
    CHECK(lex->entails(phi1, phi1));
    CHECK(!lex->entails(phi1, psi1));
    CHECK(lex->is_consistent(phi1));
    CHECK(!lex->is_consistent(named(*lex, {"ψ0", "ψ1"})));
}

TEST_CASE("expressible closure of lex_paper: all fourteen sets, nothing else") {
    auto lex = make_lex_paper();
    const auto& closure = lex->expressible_closure();
    CHECK(closure.size() == 14);
    auto has = [&](ModelSet m) {
        return std::find(closure.begin(), closure.end(), m) != closure.end();
    };
    CHECK(has(ms({1, 2, 3})));
    CHECK(has(ms({})));
    CHECK(!has(ms({0, 4})));
    CHECK(!has(ms({0, 1, 2, 3, 4})));

    // intersection-closed and contains the full set
    CHECK(has(lex->all_worlds()));
    for (ModelSet a : closure)
        for (ModelSet b : closure) CHECK(has(a & b));

    // agrees with the full base-enumeration oracle
    auto oracle_sets = oracle::expressible_sets(*lex);
    CHECK(oracle_sets.size() == closure.size());
    for (auto bits : oracle_sets) CHECK(has(ModelSet::from_bits(bits)));
}

TEST_CASE("closure oracle agreement on the other fixtures") {
    for (auto logic : {make_lex_core(), make_propositional(2), make_horn(2)}) {
        auto oracle_sets = oracle::expressible_sets(*logic);
        const auto& closure = logic->expressible_closure();
        REQUIRE(closure.size() == oracle_sets.size());
        std::set<std::uint64_t> ours;
        for (ModelSet m : closure) ours.insert(m.bits());
        for (auto bits : oracle_sets) CHECK(ours.count(bits) == 1);
    }
}

TEST_CASE("class enumeration order: full set first, empty last, member-first ties") {
    auto lex = make_lex_paper();
    const auto& classes = lex->classes();
    CHECK(classes.front().models == lex->all_worlds());
    CHECK(classes.back().models == ModelSet{});
    for (std::size_t i = 0; i + 1 < classes.size(); ++i)
        CHECK(class_order_less(classes[i].models, classes[i + 1].models, 6));
    // the {omega4} class precedes the {omega5} class
    CHECK(lex->class_of(ms({4})) < lex->class_of(ms({5})));
}

TEST_CASE("canonical bases: fewest sentences, then least indices") {
    auto lex = make_lex_paper();
    const auto& classes = lex->classes();

    CHECK(classes[lex->class_of(ms({1}))].canonical_base == named(*lex, {"ψ1"}));
    CHECK(classes[lex->class_of(lex->all_worlds())].canonical_base == BeliefBase{});
    CHECK(classes[lex->class_of(ms({1, 2, 3}))].canonical_base == named(*lex, {"φ0", "φ4"}));
    CHECK(classes[lex->class_of(ms({}))].canonical_base == named(*lex, {"ψ0", "ψ1"}));

    for (const auto& cls : classes) CHECK(lex->models_of(cls.canonical_base) == cls.models);
}

TEST_CASE("propositional fixture") {
    auto p1 = make_propositional(1);
    CHECK(p1->world_count() == 2);
    CHECK(p1->sentence_count() == 4);
    CHECK(p1->expressible_closure().size() == 4);

    auto p2 = make_propositional(2);
    CHECK(p2->classes().size() == 16);
    for (const auto& cls : p2->classes()) CHECK(p2->models_of(cls.canonical_base) == cls.models);

    CHECK_THROWS_AS(make_propositional(5), InputError);
}

TEST_CASE("horn fixture") {
    auto h2 = make_horn(2);
    CHECK(h2->world_count() == 4);
    CHECK(h2->sentence_count() == 8);
    auto idx = h2->sentence_index("!a0|a1");
    REQUIRE(idx.has_value());
    CHECK(h2->sentence_models(*idx).size() == 3);
    auto fidx = h2->sentence_index("false");
    REQUIRE(fidx.has_value());
    CHECK(h2->sentence_models(*fidx).empty());

    CHECK_THROWS_AS(make_horn(4), InputError);
    CHECK(make_horn(3)->sentence_count() == 20);
}

TEST_CASE("builtin logic name parsing") {
    CHECK(make_builtin_logic("lex_paper")->name() == "lex_paper");
    CHECK(make_builtin_logic("propositional2")->world_count() == 4);
    CHECK(make_builtin_logic("propositional(2)")->world_count() == 4);
    CHECK(make_builtin_logic("horn(2)")->name() == "horn2");
    CHECK_THROWS_AS(make_builtin_logic("socrates"), InputError);
}

TEST_CASE("logic construction rejects bad specs") {
    CHECK_THROWS_AS(Logic("bad", {}, {}, {}), InputError);
    CHECK_THROWS_AS(Logic("bad", {"w", "w"}, {}, {}), InputError);
    CHECK_THROWS_AS(Logic("bad", {"w"}, {"s", "s"}, {ModelSet{}, ModelSet{}}), InputError);
    CHECK_THROWS_AS(Logic("bad", {"w"}, {"s"}, {ModelSet::from_bits(2)}), InputError);
    // inconsistent sentences are fine
    Logic ok("ok", {"w"}, {"s"}, {ModelSet{}});
    CHECK(ok.expressible_closure().size() == 2);
}

TEST_CASE("antitonicity: growing a base shrinks its models") {
    SplitMix64 rng(2024);
    for (int round = 0; round < 200; ++round) {
        auto logic = testgen::random_logic(rng);
        BeliefBase small = testgen::random_base(rng, *logic);
        BeliefBase big = small.united_with(testgen::random_base(rng, *logic));
        CHECK(logic->models_of(big).subset_of(logic->models_of(small)));
    }
    for (auto logic : {make_lex_paper(), make_horn(2)}) {
        SplitMix64 r2(7);
        for (int round = 0; round < 200; ++round) {
            BeliefBase small = testgen::random_base(r2, *logic);
            BeliefBase big = small.united_with(testgen::random_base(r2, *logic));
            CHECK(logic->models_of(big).subset_of(logic->models_of(small)));
        }
    }
}

TEST_CASE("belief bases have set semantics") {
    BeliefBase a({3, 1, 3, 2});
    BeliefBase b({1, 2, 3});
    CHECK(a == b);
    CHECK(a.united_with(BeliefBase({0, 1})) == BeliefBase({0, 1, 2, 3}));
    CHECK(a.contains(2));
    CHECK(!a.contains(0));
}
