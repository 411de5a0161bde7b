#include "revlab/audit.hpp"

#include <algorithm>
#include <bit>

#include "revlab/rng.hpp"

namespace revlab {

bool AuditReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.verdict != Verdict::fail; });
}

int AuditReport::pass_count() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                          [](const CheckResult& c) { return c.verdict != Verdict::fail; }));
}

int AuditReport::fail_count() const {
    return static_cast<int>(checks.size()) - pass_count();
}

const CheckResult* AuditReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

void enforce_class_cap(const Logic& logic, const AuditOptions& opts) {
    if (logic.class_count() > opts.max_classes)
        throw InputError("logic '" + logic.name() + "' has " + std::to_string(logic.class_count()) +
                         " semantic classes, above the cap of " + std::to_string(opts.max_classes));
}

bool wanted(const AuditOptions& opts, const std::string& name) {
    if (opts.which.empty()) return true;
    return std::find(opts.which.begin(), opts.which.end(), name) != opts.which.end();
}

struct PairScan {
    CheckResult g1{"G1"}, g2{"G2"}, g3{"G3"};
};

// G4 over every syntactic base against its class representative.
CheckResult g4_exhaustive(const Operator& op) {
    const Logic& logic = *op.logic();
    CheckResult result{"G4"};
    const int s = logic.sentence_count();
    const std::uint64_t total = std::uint64_t{1} << s;

    std::vector<BeliefBase> bases(total);
    std::vector<int> cls(total);
    std::vector<ModelSet> mods(total, logic.all_worlds());
    for (std::uint64_t m = 0; m < total; ++m) {
        std::vector<int> ids;
        for (int i = 0; i < s; ++i)
            if ((m >> i) & 1) ids.push_back(i);
        bases[m] = logic.base_from_ids(std::move(ids));
        if (m != 0) mods[m] = mods[m & (m - 1)] & logic.sentence_models(std::countr_zero(m));
        cls[m] = logic.class_of(mods[m]);
    }

    const int nclasses = logic.class_count();
    std::vector<std::vector<ModelSet>> canon_out(nclasses, std::vector<ModelSet>(nclasses));
    std::vector<std::vector<char>> canon_ready(nclasses, std::vector<char>(nclasses, 0));
    const auto& classes = logic.classes();

    for (std::uint64_t km = 0; km < total; ++km) {
        for (std::uint64_t gm = 0; gm < total; ++gm) {
            int kc = cls[km], gc = cls[gm];
            if (!canon_ready[kc][gc]) {
                canon_out[kc][gc] = logic.models_of(
                    op.apply(classes[kc].canonical_base, classes[gc].canonical_base));
                canon_ready[kc][gc] = 1;
            }
            ModelSet left = logic.models_of(op.apply(bases[km], bases[gm]));
            ++result.checked;
            if (left != canon_out[kc][gc]) {
                AuditWitness w;
                w.k1 = bases[km];
                w.k2 = classes[kc].canonical_base;
                w.g1 = bases[gm];
                w.g2 = classes[gc].canonical_base;
                w.left = left;
                w.right = canon_out[kc][gc];
                result.verdict = Verdict::fail;
                result.witnesses.push_back(std::move(w));
                return result;
            }
        }
    }
    result.verdict = Verdict::pass;
    return result;
}

CheckResult g4_sampled(const Operator& op, const AuditOptions& opts) {
    const Logic& logic = *op.logic();
    CheckResult result{"G4"};
    result.verdict = Verdict::sampled_pass;
    SplitMix64 rng(opts.seed ^ 0x6734F2A9B1C55ull);
    const int s = logic.sentence_count();
    const auto& classes = logic.classes();

    auto random_base = [&]() {
        int size = static_cast<int>(rng.below(4));
        std::vector<int> ids;
        for (int i = 0; i < size; ++i) ids.push_back(static_cast<int>(rng.below(s)));
        return logic.base_from_ids(std::move(ids));
    };
    // Equivalent variant: optionally restart from the canonical base, then
    // add sentences whose models cover the class (these never change Mod).
    auto equivalent_variant = [&](const BeliefBase& b) {
        ModelSet m = logic.models_of(b);
        BeliefBase out = rng.chance(1, 2) ? classes[logic.class_of(m)].canonical_base : b;
        int extra = static_cast<int>(rng.below(4));
        for (int i = 0; i < extra; ++i) {
            int cand = static_cast<int>(rng.below(s));
            if (m.subset_of(logic.sentence_models(cand))) out = out.with(cand);
        }
        return out;
    };

    for (std::uint64_t it = 0; it < opts.g4_samples; ++it) {
        BeliefBase k1 = random_base(), g1 = random_base();
        BeliefBase k2 = equivalent_variant(k1), g2 = equivalent_variant(g1);
        ModelSet left = logic.models_of(op.apply(k1, g1));
        ModelSet right = logic.models_of(op.apply(k2, g2));
        ++result.checked;
        if (left != right) {
            AuditWitness w;
            w.k1 = k1;
            w.k2 = k2;
            w.g1 = g1;
            w.g2 = g2;
            w.left = left;
            w.right = right;
            result.verdict = Verdict::fail;
            result.witnesses.push_back(std::move(w));
            return result;
        }
    }
    return result;
}

}  // namespace

AuditReport check_postulates(const OperatorPtr& op, const AuditOptions& opts) {
    const Logic& logic = *op->logic();
    enforce_class_cap(logic, opts);
    const auto& classes = logic.classes();
    const int n = static_cast<int>(classes.size());

    AuditReport report;
    report.subject = "postulates: " + op->name() + " @ " + logic.name();

    auto add_pair_witness = [&](CheckResult& r, int k, int c, ModelSet left, ModelSet right) {
        if (r.verdict == Verdict::fail) return;
        AuditWitness w;
        w.k_class = k;
        w.g1_class = c;
        w.left = left;
        w.right = right;
        r.verdict = Verdict::fail;
        r.witnesses.push_back(std::move(w));
    };

    const bool want_g1 = wanted(opts, "G1"), want_g2 = wanted(opts, "G2"), want_g3 = wanted(opts, "G3");
    const bool want_g4 = wanted(opts, "G4") && !opts.syntax_sensitive;
    const bool want_g5 = wanted(opts, "G5"), want_g6 = wanted(opts, "G6");

    CheckResult g1{"G1"}, g2{"G2"}, g3{"G3"}, g5{"G5"}, g6{"G6"};

    if (want_g1 || want_g2 || want_g3) {
        for (int k = 0; k < n; ++k) {
            for (int c = 0; c < n; ++c) {
                ModelSet out = op->output_models(k, c);
                ModelSet gm = classes[c].models;
                if (want_g1 && g1.verdict != Verdict::fail) {
                    ++g1.checked;
                    if (!out.subset_of(gm)) add_pair_witness(g1, k, c, out, gm);
                }
                if (want_g2 && g2.verdict != Verdict::fail) {
                    ++g2.checked;
                    ModelSet joint = classes[k].models & gm;
                    if (!joint.empty() && out != joint) add_pair_witness(g2, k, c, out, joint);
                }
                if (want_g3 && g3.verdict != Verdict::fail) {
                    ++g3.checked;
                    if (!gm.empty() && out.empty()) add_pair_witness(g3, k, c, out, gm);
                }
            }
        }
    }

    if (want_g5 || want_g6) {
        for (int k = 0; k < n && (g5.verdict != Verdict::fail || g6.verdict != Verdict::fail); ++k) {
            std::vector<int> out_cache(n, -1);
            auto out_of = [&](int c) {
                if (out_cache[c] < 0) out_cache[c] = op->apply_class(k, c);
                return classes[out_cache[c]].models;
            };
            for (int c1 = 0; c1 < n; ++c1) {
                ModelSet out1 = out_of(c1);
                for (int c2 = 0; c2 < n; ++c2) {
                    ModelSet lhs = out1 & classes[c2].models;
                    int meet = logic.class_of(classes[c1].models & classes[c2].models);
                    ModelSet out12 = out_of(meet);
                    if (want_g5 && g5.verdict != Verdict::fail) {
                        ++g5.checked;
                        if (!lhs.subset_of(out12)) {
                            AuditWitness w;
                            w.k_class = k;
                            w.g1_class = c1;
                            w.g2_class = c2;
                            w.left = lhs;
                            w.right = out12;
                            g5.verdict = Verdict::fail;
                            g5.witnesses.push_back(std::move(w));
                        }
                    }
                    if (want_g6 && g6.verdict != Verdict::fail) {
                        ++g6.checked;
                        if (!lhs.empty() && !out12.subset_of(lhs)) {
                            AuditWitness w;
                            w.k_class = k;
                            w.g1_class = c1;
                            w.g2_class = c2;
                            w.left = out12;
                            w.right = lhs;
                            g6.verdict = Verdict::fail;
                            g6.witnesses.push_back(std::move(w));
                        }
                    }
                }
            }
        }
    }

    if (want_g1) report.checks.push_back(std::move(g1));
    if (want_g2) report.checks.push_back(std::move(g2));
    if (want_g3) report.checks.push_back(std::move(g3));
    if (want_g4) {
        const int s = logic.sentence_count();
        const bool small = s < 63 && (std::uint64_t{1} << s) <= opts.g4_base_space_cap;
        CheckResult g4 = small ? g4_exhaustive(*op) : g4_sampled(*op, opts);
        if (g4.verdict == Verdict::sampled_pass) report.exhaustive = false;
        report.checks.push_back(std::move(g4));
    }
    if (want_g5) report.checks.push_back(std::move(g5));
    if (want_g6) report.checks.push_back(std::move(g6));
    return report;
}

namespace {

// F1/F2 for one relation against one model set; adds to existing results.
void scan_faithful_pair(const Relation& rel, ModelSet kmods, int k_class,
                        const BeliefBase* key_base, CheckResult& f1, CheckResult& f2) {
    const int n = rel.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            bool im = kmods.contains(i), jm = kmods.contains(j);
            if (im && jm && f1.verdict != Verdict::fail) {
                ++f1.checked;
                if (rel.strict(i, j)) {
                    AuditWitness w;
                    w.k_class = k_class;
                    if (key_base) w.k1 = *key_base;
                    w.worlds = {i, j};
                    f1.verdict = Verdict::fail;
                    f1.witnesses.push_back(std::move(w));
                }
            }
            if (im && !jm && f2.verdict != Verdict::fail) {
                ++f2.checked;
                if (!rel.strict(i, j)) {
                    AuditWitness w;
                    w.k_class = k_class;
                    if (key_base) w.k1 = *key_base;
                    w.worlds = {i, j};
                    f2.verdict = Verdict::fail;
                    f2.witnesses.push_back(std::move(w));
                }
            }
        }
    }
}

}  // namespace

AuditReport check_faithful(const Assignment& assignment, const AuditOptions& opts) {
    const Logic& logic = *assignment.logic();
    enforce_class_cap(logic, opts);

    AuditReport report;
    report.subject = "faithful: " + assignment.name() + " @ " + logic.name();
    CheckResult f1{"F1"}, f2{"F2"}, f3{"F3"};

    if (!assignment.syntactic()) {
        const auto& classes = logic.classes();
        for (int k = 0; k < static_cast<int>(classes.size()); ++k)
            scan_faithful_pair(assignment.relation_for_class(k), classes[k].models, k, nullptr, f1, f2);
        // class-keyed storage: equivalent bases share a relation structurally
        f3.verdict = Verdict::pass;
    } else {
        for (const auto& [base, rel] : assignment.base_relations()) {
            ModelSet kmods = logic.models_of(base);
            scan_faithful_pair(rel, kmods, logic.class_of(kmods), &base, f1, f2);
        }
        const auto& by_base = assignment.base_relations();
        for (auto it1 = by_base.begin(); it1 != by_base.end() && f3.verdict != Verdict::fail; ++it1) {
            for (auto it2 = std::next(it1); it2 != by_base.end(); ++it2) {
                if (logic.models_of(it1->first) != logic.models_of(it2->first)) continue;
                ++f3.checked;
                if (!(it1->second == it2->second)) {
                    AuditWitness w;
                    w.k1 = it1->first;
                    w.k2 = it2->first;
                    f3.verdict = Verdict::fail;
                    f3.witnesses.push_back(std::move(w));
                    break;
                }
            }
        }
    }

    report.checks.push_back(std::move(f1));
    report.checks.push_back(std::move(f2));
    if (!opts.syntax_sensitive) report.checks.push_back(std::move(f3));
    return report;
}

AuditReport check_compatible(const OperatorPtr& op, const Assignment& assignment,
                             const AuditOptions& opts) {
    const Logic& logic = *op->logic();
    if (assignment.logic().get() != op->logic().get())
        throw InputError("operator and assignment belong to different logics");
    enforce_class_cap(logic, opts);
    const auto& classes = logic.classes();
    const int n = static_cast<int>(classes.size());

    AuditReport report;
    report.subject = "compatible: " + op->name() + " ~ " + assignment.name() + " @ " + logic.name();
    CheckResult check{"compatible"};

    auto scan_k = [&](int k_class, const Relation& rel, const BeliefBase* key_base) {
        for (int c = 0; c < n && check.verdict != Verdict::fail; ++c) {
            ModelSet out = op->output_models(k_class, c);
            ModelSet mins = min_set(rel, classes[c].models);
            ++check.checked;
            if (out != mins) {
                AuditWitness w;
                w.k_class = k_class;
                if (key_base) w.k1 = *key_base;
                w.g1_class = c;
                w.left = out;
                w.right = mins;
                check.verdict = Verdict::fail;
                check.witnesses.push_back(std::move(w));
            }
        }
    };

    if (!assignment.syntactic()) {
        for (int k = 0; k < n && check.verdict != Verdict::fail; ++k)
            scan_k(k, assignment.relation_for_class(k), nullptr);
    } else {
        for (const auto& [base, rel] : assignment.base_relations()) {
            if (check.verdict == Verdict::fail) break;
            scan_k(logic.class_of_base(base), rel, &base);
        }
    }

    report.checks.push_back(std::move(check));
    return report;
}

}  // namespace revlab
