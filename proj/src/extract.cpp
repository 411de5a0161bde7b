#include "revlab/extract.hpp"

#include <algorithm>

namespace revlab {

namespace {

std::vector<ModelSet> outputs_for_k(const Operator& op, int k_class) {
    const auto& classes = op.logic()->classes();
    std::vector<ModelSet> out(classes.size());
    for (int c = 0; c < static_cast<int>(classes.size()); ++c)
        out[c] = op.output_models(k_class, c);
    return out;
}

}  // namespace

Relation extract_relation(const OperatorPtr& op, int k_class) {
    const Logic& logic = *op->logic();
    const auto& classes = logic.classes();
    const int n = logic.world_count();
    const auto out = outputs_for_k(*op, k_class);

    std::vector<std::uint64_t> rows(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            bool related = true;
            for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
                ModelSet gm = classes[c].models;
                if (!gm.contains(i) || !gm.contains(j)) continue;
                if (!(out[c].contains(i) || !out[c].contains(j))) {
                    related = false;
                    break;
                }
            }
            if (related) rows[i] |= std::uint64_t{1} << j;
        }
    }
    return Relation(op->logic(), std::move(rows));
}

Assignment extract_assignment(const OperatorPtr& op) {
    const Logic& logic = *op->logic();
    std::vector<Relation> rels;
    rels.reserve(logic.class_count());
    for (int k = 0; k < logic.class_count(); ++k) rels.push_back(extract_relation(op, k));
    return Assignment(op->logic(), std::move(rels), "extracted(" + op->name() + ")");
}

std::vector<std::pair<int, int>> detached_pairs(const OperatorPtr& op, int k_class) {
    const Logic& logic = *op->logic();
    ModelSet covered;
    for (int c = 0; c < logic.class_count(); ++c) covered = covered | op->output_models(k_class, c);
    ModelSet uncovered = logic.all_worlds() - covered;

    std::vector<std::pair<int, int>> pairs;
    const int n = logic.world_count();
    for (int i = 0; i < n; ++i) {
        if (!uncovered.contains(i)) continue;
        for (int j = i; j < n; ++j)
            if (uncovered.contains(j)) pairs.emplace_back(i, j);
    }
    return pairs;
}

std::vector<std::pair<int, int>> detached_pairs(const OperatorPtr& op, const BeliefBase& k) {
    return detached_pairs(op, op->logic()->class_of_base(k));
}

ForcedStrictGraph forced_strict_graph(const OperatorPtr& op, int k_class) {
    const Logic& logic = *op->logic();
    const auto& classes = logic.classes();
    const int n = logic.world_count();
    const auto out = outputs_for_k(*op, k_class);

    // first witnessing class in canonical order per ordered pair
    std::vector<std::vector<int>> gamma(n, std::vector<int>(n, -1));
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
        ModelSet gm = classes[c].models;
        ModelSet in = out[c];
        ModelSet dropped = gm - in;
        if (in.empty() || dropped.empty()) continue;
        for (int i = 0; i < n; ++i) {
            if (!in.contains(i) || !gm.contains(i)) continue;
            for (int j = 0; j < n; ++j)
                if (dropped.contains(j) && gamma[i][j] < 0) gamma[i][j] = c;
        }
    }

    ForcedStrictGraph graph{op->logic(), k_class, {}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (gamma[i][j] >= 0) graph.edges.push_back(ForcedEdge{i, j, gamma[i][j]});
    return graph;
}

std::optional<ForcedEdge> ForcedStrictGraph::edge_between(int from, int to) const {
    for (const auto& e : edges)
        if (e.from == from && e.to == to) return e;
    return std::nullopt;
}

std::vector<int> ForcedStrictGraph::find_cycle() const {
    const int n = logic->world_count();
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : edges) adj[e.from].push_back(e.to);

    std::vector<int> color(n, 0);  // 0 white, 1 on stack, 2 done
    std::vector<int> stack;
    std::vector<int> cycle;

    auto dfs = [&](auto&& self, int v) -> bool {
        color[v] = 1;
        stack.push_back(v);
        for (int w : adj[v]) {
            if (color[w] == 1) {
                auto it = std::find(stack.begin(), stack.end(), w);
                cycle.assign(it, stack.end());
                return true;
            }
            if (color[w] == 0 && self(self, w)) return true;
        }
        stack.pop_back();
        color[v] = 2;
        return false;
    };

    for (int v = 0; v < n; ++v) {
        if (color[v] == 0 && dfs(dfs, v)) {
            auto least = std::min_element(cycle.begin(), cycle.end());
            std::rotate(cycle.begin(), least, cycle.end());
            return cycle;
        }
    }
    return {};
}

std::variant<Relation, LiftFailure> preorder_lift(const OperatorPtr& op, int k_class) {
    const Logic& logic = *op->logic();
    Relation extracted = extract_relation(op, k_class);

    std::vector<std::uint64_t> rows = extracted.rows();
    for (auto [i, j] : detached_pairs(op, k_class)) {
        rows[i] &= ~(std::uint64_t{1} << j);
        rows[j] &= ~(std::uint64_t{1} << i);
    }
    for (int i = 0; i < logic.world_count(); ++i) rows[i] |= std::uint64_t{1} << i;
    Relation pruned(op->logic(), std::move(rows));

    PropertyVerdict trans = is_transitive(pruned);
    if (!trans.holds) {
        LiftFailure f;
        f.kind = LiftFailure::Kind::transitivity;
        f.worlds = {trans.witness->worlds[0], trans.witness->worlds[1], trans.witness->worlds[2]};
        return f;
    }

    Relation lifted = order_extend(pruned);
    const auto& classes = logic.classes();
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
        if (min_set(lifted, classes[c].models) != min_set(extracted, classes[c].models)) {
            LiftFailure f;
            f.kind = LiftFailure::Kind::min_preservation;
            f.class_index = c;
            return f;
        }
    }
    return lifted;
}

std::variant<Relation, LiftFailure> preorder_lift(const OperatorPtr& op, const BeliefBase& k) {
    return preorder_lift(op, op->logic()->class_of_base(k));
}

RepresentabilityVerdict representability(const OperatorPtr& op, const AuditOptions& opts) {
    AuditOptions all = opts;
    all.which.clear();  // full postulate set
    AuditReport audit = check_postulates(op, all);
    if (!audit.all_passed())
        throw PostulateFailureError(
            "representability is only defined for postulate-satisfying operators", std::move(audit));

    const Logic& logic = *op->logic();
    RepresentabilityVerdict verdict;

    for (int k = 0; k < logic.class_count(); ++k) {
        ForcedStrictGraph graph = forced_strict_graph(op, k);
        std::vector<int> cycle = graph.find_cycle();
        if (cycle.empty()) continue;
        CycleWitness cw;
        cw.k_class = k;
        cw.worlds = cycle;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i];
            int to = cycle[(i + 1) % cycle.size()];
            cw.edges.push_back(*graph.edge_between(from, to));
        }
        verdict.status = RepStatus::not_representable;
        verdict.cycle = std::move(cw);
        return verdict;
    }

    std::vector<Relation> lifted;
    for (int k = 0; k < logic.class_count(); ++k) {
        auto result = preorder_lift(op, k);
        if (std::holds_alternative<Relation>(result)) {
            lifted.push_back(std::get<Relation>(std::move(result)));
        } else {
            verdict.lift_failures.emplace_back(k, std::get<LiftFailure>(result));
        }
    }
    if (verdict.lift_failures.empty()) {
        verdict.status = RepStatus::representable;
        verdict.witness = Assignment(op->logic(), std::move(lifted), "lifted(" + op->name() + ")");
    } else {
        verdict.status = RepStatus::unknown;
    }
    return verdict;
}

}  // namespace revlab
