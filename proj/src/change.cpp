#include "revlab/change.hpp"

#include <algorithm>

namespace revlab {

namespace {

int require_class(const Logic& logic, int index, const char* what) {
    if (index < 0 || index >= logic.class_count())
        throw InputError(std::string(what) + " class index out of range");
    return index;
}

}  // namespace

LoopData make_loop_data(const LogicPtr& logic,
                        std::array<int, 3> gamma_classes,
                        std::array<int, 3> gamma_prime_classes,
                        int k_class) {
    const auto& classes = logic->classes();
    for (int i = 0; i < 3; ++i) {
        require_class(*logic, gamma_classes[i], "loop gamma");
        require_class(*logic, gamma_prime_classes[i], "loop gamma-prime");
    }
    require_class(*logic, k_class, "loop k");

    ModelSet m[3], p[3];
    for (int i = 0; i < 3; ++i) {
        m[i] = classes[gamma_classes[i]].models;
        p[i] = classes[gamma_prime_classes[i]].models;
    }
    const ModelSet mk = classes[k_class].models;

    for (int i = 0; i < 3; ++i) {
        if (mk.intersects(m[i]))
            throw ContractError("loop condition (1) fails: K is consistent with a loop base");
        ModelSet region = (m[i] & m[(i + 1) % 3]) - m[(i + 2) % 3];
        if (p[i].empty() || !p[i].subset_of(region))
            throw ContractError("loop condition (2) fails for index " + std::to_string(i));
    }

    // B: classes contained in some qualifying class's outside region, where
    // qualifying means consistent with all three witness regions. B' keeps
    // those inconsistent with K, in canonical order.
    const ModelSet loop_union = m[0] | m[1] | m[2];
    std::vector<ModelSet> qualifying;
    for (const auto& cls : classes) {
        if (cls.models.intersects(p[0]) && cls.models.intersects(p[1]) && cls.models.intersects(p[2]))
            qualifying.push_back(cls.models);
    }
    LoopData data{gamma_classes, gamma_prime_classes, k_class, {}};
    for (int b = 0; b < static_cast<int>(classes.size()); ++b) {
        ModelSet mb = classes[b].models;
        if (mb.empty() || mb.intersects(loop_union) || mb.intersects(mk)) continue;
        bool in_b = std::any_of(qualifying.begin(), qualifying.end(),
                                [&](ModelSet q) { return mb.subset_of(q); });
        if (in_b) data.b_prime.push_back(b);
    }
    return data;
}

int Operator::full_meet_class(int k_class, int g_class) const {
    const auto& classes = logic_->classes();
    ModelSet joint = classes[k_class].models & classes[g_class].models;
    if (!joint.empty()) return logic_->class_of(joint);
    return g_class;
}

int Operator::apply_class(int k_class, int g_class) const {
    const auto& logic = *logic_;
    require_class(logic, k_class, "operator k");
    require_class(logic, g_class, "operator input");
    const auto& classes = logic.classes();
    const ModelSet gm = classes[g_class].models;

    switch (kind_) {
        case Kind::full_meet:
            return full_meet_class(k_class, g_class);

        case Kind::builtin_ex: {
            if (k_class != ex_k_class_) return full_meet_class(k_class, g_class);
            ModelSet joint = classes[k_class].models & gm;
            if (!joint.empty()) return logic.class_of(joint);
            const auto psi = [&](int i) { return logic.sentence_models(ex_psi_[i]); };
            if (psi(4).intersects(gm)) return logic.class_of(gm & psi(4));
            if (psi(1).intersects(gm) && !psi(3).intersects(gm)) return logic.class_of(gm & psi(1));
            if (psi(2).intersects(gm) && !psi(1).intersects(gm)) return logic.class_of(gm & psi(2));
            if (psi(3).intersects(gm) && !psi(2).intersects(gm)) return logic.class_of(gm & psi(3));
            return g_class;
        }

        case Kind::induced: {
            const Relation& rel = induced_source_->relation_for_class(k_class);
            return logic.class_of(min_set(rel, gm));
        }

        case Kind::loop_counterexample: {
            const LoopData& loop = *loop_;
            if (k_class != loop.k_class) return full_meet_class(k_class, g_class);
            ModelSet joint = classes[k_class].models & gm;
            if (!joint.empty()) return logic.class_of(joint);
            for (int b : loop.b_prime) {
                ModelSet bm = classes[b].models;
                if (bm.intersects(gm)) return logic.class_of(gm & bm);
            }
            for (int i = 0; i < 3; ++i) {
                ModelSet pi = classes[loop.gamma_prime_classes[i]].models;
                ModelSet prev = classes[loop.gamma_prime_classes[(i + 2) % 3]].models;
                if (pi.intersects(gm) && !prev.intersects(gm)) return logic.class_of(gm & pi);
            }
            return g_class;
        }

        case Kind::table: {
            int out = table_map_[k_class][g_class];
            if (out >= 0) return out;
            return full_meet_class(k_class, g_class);
        }
    }
    throw ContractError("unreachable operator kind");
}

ModelSet Operator::output_models(int k_class, int g_class) const {
    return logic_->classes()[apply_class(k_class, g_class)].models;
}

BeliefBase Operator::apply(const BeliefBase& k, const BeliefBase& g) const {
    const auto& logic = *logic_;
    const int k_class = logic.class_of_base(k);
    const int g_class = logic.class_of_base(g);
    const auto& classes = logic.classes();
    const ModelSet gm = logic.models_of(g);

    switch (kind_) {
        case Kind::full_meet:
            return logic.is_consistent(k.united_with(g)) ? k.united_with(g) : g;

        case Kind::builtin_ex: {
            if (k_class != ex_k_class_)
                return logic.is_consistent(k.united_with(g)) ? k.united_with(g) : g;
            const BeliefBase rep = logic.base_from_ids({ex_psi_[0]});
            if (logic.is_consistent(rep.united_with(g))) return rep.united_with(g);
            const auto psi = [&](int i) { return logic.sentence_models(ex_psi_[i]); };
            if (psi(4).intersects(gm)) return g.with(ex_psi_[4]);
            if (psi(1).intersects(gm) && !psi(3).intersects(gm)) return g.with(ex_psi_[1]);
            if (psi(2).intersects(gm) && !psi(1).intersects(gm)) return g.with(ex_psi_[2]);
            if (psi(3).intersects(gm) && !psi(2).intersects(gm)) return g.with(ex_psi_[3]);
            return g;
        }

        case Kind::induced:
            return classes[apply_class(k_class, g_class)].canonical_base;

        case Kind::loop_counterexample: {
            const LoopData& loop = *loop_;
            if (k_class != loop.k_class)
                return logic.is_consistent(k.united_with(g)) ? k.united_with(g) : g;
            const BeliefBase rep = classes[loop.k_class].canonical_base;
            if (logic.is_consistent(rep.united_with(g))) return rep.united_with(g);
            for (int b : loop.b_prime) {
                if (classes[b].models.intersects(gm))
                    return g.united_with(classes[b].canonical_base);
            }
            for (int i = 0; i < 3; ++i) {
                ModelSet pi = classes[loop.gamma_prime_classes[i]].models;
                ModelSet prev = classes[loop.gamma_prime_classes[(i + 2) % 3]].models;
                if (pi.intersects(gm) && !prev.intersects(gm))
                    return g.united_with(classes[loop.gamma_prime_classes[i]].canonical_base);
            }
            return g;
        }

        case Kind::table: {
            int entry = table_entry_index_[k_class][g_class];
            if (entry >= 0) return table_entries_[entry].result;
            return logic.is_consistent(k.united_with(g)) ? k.united_with(g) : g;
        }
    }
    throw ContractError("unreachable operator kind");
}

const Assignment* Operator::source_assignment() const {
    return induced_source_ ? &*induced_source_ : nullptr;
}

OperatorPtr make_full_meet(LogicPtr logic) {
    auto op = std::shared_ptr<Operator>(new Operator());
    op->kind_ = Operator::Kind::full_meet;
    op->logic_ = std::move(logic);
    op->name_ = "full-meet";
    return op;
}

OperatorPtr make_builtin_ex(LogicPtr logic) {
    auto op = std::shared_ptr<Operator>(new Operator());
    op->kind_ = Operator::Kind::builtin_ex;
    op->name_ = "builtin:ex";
    for (int i = 0; i < 5; ++i) {
        auto idx = logic->sentence_index("ψ" + std::to_string(i));
        if (!idx) throw InputError("builtin:ex requires a lex logic (missing ψ" + std::to_string(i) + ")");
        op->ex_psi_[i] = *idx;
    }
    op->ex_k_class_ = logic->class_of(logic->sentence_models(op->ex_psi_[0]));
    op->logic_ = std::move(logic);
    return op;
}

OperatorPtr make_induced(Assignment assignment) {
    if (assignment.syntactic())
        throw InputError("induced operators require a class-keyed assignment");
    auto logic = assignment.logic();
    const auto& classes = logic->classes();
    for (int k = 0; k < static_cast<int>(classes.size()); ++k) {
        const Relation& rel = assignment.relation_for_class(k);
        for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
            if (logic->class_of(min_set(rel, classes[c].models)) < 0)
                throw MinExpressibilityError(
                    "assignment '" + assignment.name() + "' is not min-expressible at (K-class " +
                        std::to_string(k) + ", input class " + std::to_string(c) + ")",
                    k, c);
        }
    }
    auto op = std::shared_ptr<Operator>(new Operator());
    op->kind_ = Operator::Kind::induced;
    op->name_ = "induced(" + assignment.name() + ")";
    op->logic_ = logic;
    op->induced_source_ = std::move(assignment);
    return op;
}

OperatorPtr make_loop_operator(LogicPtr logic, LoopData loop) {
    // Revalidate: the data may predate this logic instance.
    LoopData checked = make_loop_data(logic, loop.gamma_classes, loop.gamma_prime_classes, loop.k_class);
    auto op = std::shared_ptr<Operator>(new Operator());
    op->kind_ = Operator::Kind::loop_counterexample;
    op->name_ = "loop-counterexample";
    op->logic_ = std::move(logic);
    op->loop_ = std::move(checked);
    return op;
}

OperatorPtr make_table(LogicPtr logic, std::vector<TableEntry> entries, TableDefault dflt) {
    const int class_count = logic->class_count();
    std::vector<std::vector<int>> map(class_count, std::vector<int>(class_count, -1));
    std::vector<std::vector<int>> entry_index(class_count, std::vector<int>(class_count, -1));
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        int kc = logic->class_of_base(e.base);
        int gc = logic->class_of_base(e.input);
        int rc = logic->class_of_base(e.result);
        if (map[kc][gc] >= 0 && map[kc][gc] != rc)
            throw InputError("table operator maps one class pair to inequivalent results");
        if (map[kc][gc] < 0) entry_index[kc][gc] = static_cast<int>(i);
        map[kc][gc] = rc;
    }
    if (dflt == TableDefault::error) {
        for (int k = 0; k < class_count; ++k)
            for (int c = 0; c < class_count; ++c)
                if (map[k][c] < 0)
                    throw InputError("table operator with default 'error' does not cover every class pair");
    }
    auto op = std::shared_ptr<Operator>(new Operator());
    op->kind_ = Operator::Kind::table;
    op->name_ = "table";
    op->logic_ = std::move(logic);
    op->table_entries_ = std::move(entries);
    op->table_default_ = dflt;
    op->table_map_ = std::move(map);
    op->table_entry_index_ = std::move(entry_index);
    return op;
}

}  // namespace revlab
