#include "revlab/orders.hpp"

#include <algorithm>

namespace revlab {

Relation::Relation(LogicPtr logic, std::vector<std::uint64_t> rows)
    : logic_(std::move(logic)), rows_(std::move(rows)) {
    if (!logic_) throw InputError("relation requires a logic");
    const int n = logic_->world_count();
    if (static_cast<int>(rows_.size()) != n)
        throw InputError("relation matrix has " + std::to_string(rows_.size()) +
                         " rows for a " + std::to_string(n) + "-world logic");
    const std::uint64_t universe = logic_->all_worlds().bits();
    for (auto& r : rows_)
        if ((r & ~universe) != 0) throw InputError("relation matrix has columns beyond the world count");
}

Relation Relation::all_pairs(LogicPtr logic) {
    const int n = logic->world_count();
    const std::uint64_t universe = logic->all_worlds().bits();
    return Relation(std::move(logic), std::vector<std::uint64_t>(n, universe));
}

Relation Relation::identity(LogicPtr logic) {
    const int n = logic->world_count();
    std::vector<std::uint64_t> rows(n, 0);
    for (int i = 0; i < n; ++i) rows[i] = std::uint64_t{1} << i;
    return Relation(std::move(logic), std::move(rows));
}

bool Relation::contained_in(const Relation& other) const {
    for (int i = 0; i < size(); ++i)
        if ((rows_[i] & ~other.rows_[i]) != 0) return false;
    return true;
}

ModelSet min_set(const Relation& rel, ModelSet subset) {
    ModelSet out;
    const std::uint64_t s = subset.bits();
    for (int i = 0; i < rel.size(); ++i) {
        if (!subset.contains(i)) continue;
        if ((rel.row(i) & s) == s) out = out.with(i);
    }
    return out;
}

PropertyVerdict is_total(const Relation& rel) {
    for (int i = 0; i < rel.size(); ++i)
        for (int j = i; j < rel.size(); ++j)
            if (!rel.le(i, j) && !rel.le(j, i))
                return {false, Witness{{i, j}, {}}};
    return {true, std::nullopt};
}

PropertyVerdict is_reflexive(const Relation& rel) {
    for (int i = 0; i < rel.size(); ++i)
        if (!rel.le(i, i)) return {false, Witness{{i}, {}}};
    return {true, std::nullopt};
}

PropertyVerdict is_transitive(const Relation& rel) {
    for (int i = 0; i < rel.size(); ++i)
        for (int j = 0; j < rel.size(); ++j) {
            if (!rel.le(i, j)) continue;
            // need row(j) ⊆ row(i); report the least missing k
            std::uint64_t missing = rel.row(j) & ~rel.row(i);
            if (missing != 0) {
                for (int k = 0; k < rel.size(); ++k)
                    if ((missing >> k) & 1) return {false, Witness{{i, j, k}, {}}};
            }
        }
    return {true, std::nullopt};
}

PropertyVerdict is_preorder(const Relation& rel) {
    PropertyVerdict r = is_reflexive(rel);
    if (!r.holds) return r;
    return is_transitive(rel);
}

PropertyVerdict is_min_retractive(const Relation& rel) {
    const auto& logic = *rel.logic();
    const auto& classes = logic.classes();
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
        ModelSet mods = classes[c].models;
        if (mods.empty()) continue;
        ModelSet mins = min_set(rel, mods);
        for (int wp = 0; wp < rel.size(); ++wp) {
            if (!mods.contains(wp) || mins.contains(wp)) continue;
            for (int w = 0; w < rel.size(); ++w) {
                if (!mins.contains(w)) continue;
                if (rel.le(wp, w))
                    return {false, Witness{{wp, w}, {c}}};
            }
        }
    }
    return {true, std::nullopt};
}

PropertyVerdict is_min_complete(const Relation& rel) {
    const auto& logic = *rel.logic();
    const auto& classes = logic.classes();
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
        ModelSet mods = classes[c].models;
        if (mods.empty()) continue;
        if (min_set(rel, mods).empty()) return {false, Witness{{}, {c}}};
    }
    return {true, std::nullopt};
}

PropertyVerdict is_min_expressible(const Relation& rel) {
    const auto& logic = *rel.logic();
    const auto& classes = logic.classes();
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
        ModelSet mins = min_set(rel, classes[c].models);
        if (logic.class_of(mins) < 0) return {false, Witness{{}, {c}}};
    }
    return {true, std::nullopt};
}

Relation order_extend(const Relation& rel) {
    if (!is_reflexive(rel).holds || !is_transitive(rel).holds)
        throw ContractError("order_extend requires a reflexive, transitive relation");

    const int n = rel.size();
    // Equivalence classes: with transitivity, mutual relation is an SCC.
    std::vector<int> group(n, -1);
    int group_count = 0;
    for (int i = 0; i < n; ++i) {
        if (group[i] >= 0) continue;
        group[i] = group_count;
        for (int j = i + 1; j < n; ++j)
            if (group[j] < 0 && rel.le(i, j) && rel.le(j, i)) group[j] = group_count;
        ++group_count;
    }

    // rank = longest strict chain below; strict edges are acyclic under
    // transitivity, so the recursion terminates
    std::vector<int> rank(n, -1);
    auto compute = [&](auto&& self, int i) -> int {
        if (rank[i] >= 0) return rank[i];
        int best = 0;
        for (int j = 0; j < n; ++j)
            if (rel.strict(j, i)) best = std::max(best, self(self, j) + 1);
        rank[i] = best;
        return best;
    };
    for (int i = 0; i < n; ++i) compute(compute, i);
    // members of one group share a rank by construction; make it explicit
    std::vector<int> group_rank(group_count, 0);
    for (int i = 0; i < n; ++i) group_rank[group[i]] = rank[i];

    std::vector<std::uint64_t> rows(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (group_rank[group[i]] <= group_rank[group[j]]) rows[i] |= std::uint64_t{1} << j;
    return Relation(rel.logic(), std::move(rows));
}

}  // namespace revlab
