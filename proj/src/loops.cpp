#include "revlab/loops.hpp"

#include <algorithm>

namespace revlab {

namespace {

// Nonempty closure members contained in the region, ascending class index.
std::vector<int> expressible_subsets(const Logic& logic, ModelSet region) {
    std::vector<int> out;
    const auto& closure = logic.expressible_closure();
    for (int c = 0; c < static_cast<int>(closure.size()); ++c)
        if (!closure[c].empty() && closure[c].subset_of(region)) out.push_back(c);
    return out;
}

std::vector<int> minimal_members(const Logic& logic, const std::vector<int>& candidates) {
    const auto& closure = logic.expressible_closure();
    std::vector<int> out;
    for (int a : candidates) {
        bool minimal = true;
        for (int b : candidates) {
            if (a == b) continue;
            if (closure[b].subset_of(closure[a]) && closure[b] != closure[a]) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(a);
    }
    return out;
}

int first_expressible_subset(const Logic& logic, ModelSet region) {
    const auto& closure = logic.expressible_closure();
    for (int c = 0; c < static_cast<int>(closure.size()); ++c)
        if (!closure[c].empty() && closure[c].subset_of(region)) return c;
    return -1;
}

// First canonical class disjoint from the union, or -1.
int first_k_class(const Logic& logic, ModelSet loop_union) {
    const auto& closure = logic.expressible_closure();
    for (int c = 0; c < static_cast<int>(closure.size()); ++c)
        if (!closure[c].intersects(loop_union)) return c;
    return -1;
}

// Condition (3) for a concrete witness-region choice: every class
// consistent with all three regions must leave a nonempty expressible
// subset outside the loop union. Fills the evidence map on success.
bool check_condition3(const Logic& logic, ModelSet p0, ModelSet p1, ModelSet p2,
                ModelSet loop_union, std::vector<std::pair<int, int>>& evidence) {
    evidence.clear();
    const auto& closure = logic.expressible_closure();
    for (int g = 0; g < static_cast<int>(closure.size()); ++g) {
        ModelSet gm = closure[g];
        if (!gm.intersects(p0) || !gm.intersects(p1) || !gm.intersects(p2)) continue;
        int witness = first_expressible_subset(logic, gm - loop_union);
        if (witness < 0) return false;
        evidence.emplace_back(g, witness);
    }
    return true;
}

}  // namespace

bool CriticalLoop::revalidate(const Logic& logic) const {
    const auto& closure = logic.expressible_closure();
    ModelSet m[3], p[3];
    for (int i = 0; i < 3; ++i) {
        if (gamma_classes[i] < 0 || gamma_classes[i] >= static_cast<int>(closure.size())) return false;
        if (gamma_prime_classes[i] < 0 || gamma_prime_classes[i] >= static_cast<int>(closure.size())) return false;
        m[i] = closure[gamma_classes[i]];
        p[i] = closure[gamma_prime_classes[i]];
    }
    if (k_class < 0 || k_class >= static_cast<int>(closure.size())) return false;
    ModelSet mk = closure[k_class];

    for (int i = 0; i < 3; ++i) {
        if (mk.intersects(m[i])) return false;
        ModelSet region = (m[i] & m[(i + 1) % 3]) - m[(i + 2) % 3];
        if (p[i].empty() || !p[i].subset_of(region)) return false;
    }

    ModelSet loop_union = m[0] | m[1] | m[2];
    std::vector<std::pair<int, int>> fresh;
    if (!check_condition3(logic, p[0], p[1], p[2], loop_union, fresh)) return false;
    return fresh == condition3;
}

LoopSearchResult find_critical_loops(const LogicPtr& logic, int limit) {
    const Logic& lg = *logic;
    const auto& closure = lg.expressible_closure();
    const int n = static_cast<int>(closure.size());

    LoopSearchResult result;
    for (int i = 0; i < n; ++i) {
        if (closure[i].empty()) continue;
        for (int j = i + 1; j < n; ++j) {
            if (closure[j].empty()) continue;
            for (int k = j + 1; k < n; ++k) {
                if (closure[k].empty()) continue;
                ModelSet mi = closure[i], mj = closure[j], mk = closure[k];
                ModelSet r0 = (mi & mj) - mk;
                ModelSet r1 = (mj & mk) - mi;
                ModelSet r2 = (mk & mi) - mj;
                if (r0.empty() || r1.empty() || r2.empty()) continue;

                ModelSet loop_union = mi | mj | mk;
                int k_class = first_k_class(lg, loop_union);
                if (k_class < 0) continue;

                // Inclusion-minimal witness choices decide loop-ness: any
                // valid choice shrinks to a minimal one, which only weakens
                // condition (3)'s quantifier domain.
                auto c0 = minimal_members(lg, expressible_subsets(lg, r0));
                auto c1 = minimal_members(lg, expressible_subsets(lg, r1));
                auto c2 = minimal_members(lg, expressible_subsets(lg, r2));
                if (c0.empty() || c1.empty() || c2.empty()) continue;

                bool found = false;
                std::vector<std::pair<int, int>> evidence;
                for (int p0 : c0) {
                    for (int p1 : c1) {
                        for (int p2 : c2) {
                            if (check_condition3(lg, closure[p0], closure[p1], closure[p2],
                                           loop_union, evidence)) {
                                found = true;
                                CriticalLoop loop;
                                loop.gamma_classes = {i, j, k};
                                loop.gamma_prime_classes = {p0, p1, p2};
                                loop.k_class = k_class;
                                loop.condition3 = evidence;
                                ++result.total_count;
                                if (static_cast<int>(result.loops.size()) < limit)
                                    result.loops.push_back(std::move(loop));
                                break;
                            }
                        }
                        if (found) break;
                    }
                    if (found) break;
                }
            }
        }
    }
    return result;
}

PropertyVerdict is_disjunctive(const Logic& logic) {
    const auto& closure = logic.expressible_closure();
    const int n = static_cast<int>(closure.size());
    // All-subsets closure is trivially union-closed.
    if (logic.world_count() <= 20 &&
        static_cast<std::uint64_t>(n) == (std::uint64_t{1} << logic.world_count()))
        return {true, std::nullopt};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (logic.class_of(closure[i] | closure[j]) < 0)
                return {false, Witness{{}, {i, j}}};
    return {true, std::nullopt};
}

PipelineReport counterexample_pipeline(const LogicPtr& logic, const AuditOptions& opts) {
    PipelineReport report;
    LoopSearchResult search = find_critical_loops(logic, 10);
    report.loop_found = !search.loops.empty();
    report.loop_count = search.total_count;

    if (report.loop_found) {
        report.loop = search.loops.front();
        LoopData data = make_loop_data(logic, report.loop->gamma_classes,
                                       report.loop->gamma_prime_classes, report.loop->k_class);
        OperatorPtr op = make_loop_operator(logic, std::move(data));
        AuditOptions all = opts;
        all.which.clear();
        report.loop_audit = check_postulates(op, all);
        if (!report.loop_audit->all_passed()) {
            report.findings.push_back("constructed loop operator fails the postulate audit");
            return report;
        }
        RepresentabilityVerdict verdict = representability(op, opts);
        report.verdict = verdict.status;
        report.cycle = verdict.cycle;
        if (verdict.status != RepStatus::not_representable)
            report.findings.push_back(
                "loop operator was expected to be not total preorder representable, got '" +
                std::string(verdict.status == RepStatus::representable ? "representable" : "unknown") + "'");
        return report;
    }

    // No loop: every postulate-satisfying fixture operator must lift.
    std::vector<OperatorPtr> fixtures{make_full_meet(logic)};
    try {
        fixtures.push_back(make_builtin_ex(logic));
    } catch (const InputError&) {
        // not a lex variant
    }
    for (const auto& op : fixtures) {
        AuditOptions all = opts;
        all.which.clear();
        AuditReport audit = check_postulates(op, all);
        if (!audit.all_passed()) {
            report.fixture_results.emplace_back(op->name(), "fails the postulate audit; not a theorem subject");
            continue;
        }
        RepresentabilityVerdict verdict = representability(op, opts);
        if (verdict.status == RepStatus::representable) {
            report.fixture_results.emplace_back(op->name(), "representable");
        } else {
            report.fixture_results.emplace_back(
                op->name(), verdict.status == RepStatus::not_representable ? "notRepresentable" : "unknown");
            report.findings.push_back("operator '" + op->name() +
                                      "' passes the audit on a loop-free logic but did not lift");
        }
    }
    return report;
}

}  // namespace revlab
