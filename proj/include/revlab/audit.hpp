#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "revlab/assignment.hpp"
#include "revlab/change.hpp"

namespace revlab {

enum class Verdict { pass, fail, sampled_pass };

/// Counterexample for a failed audit check. Classes are indices into the
/// logic's class list; bases are present for syntactic (G4) witnesses;
/// left/right are the two sides of the violated (in)equation.
struct AuditWitness {
    std::optional<int> k_class;
    std::optional<int> g1_class;
    std::optional<int> g2_class;
    std::optional<BeliefBase> k1, k2, g1, g2;
    std::optional<ModelSet> left, right;
    std::optional<std::pair<int, int>> worlds;
};

struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::pass;
    std::vector<AuditWitness> witnesses;  // the least counterexample, if failed
    std::uint64_t checked = 0;
};

struct AuditReport {
    std::string subject;
    std::vector<CheckResult> checks;
    bool exhaustive = true;

    bool all_passed() const;
    int pass_count() const;
    int fail_count() const;
    const CheckResult* find(const std::string& name) const;
};

struct AuditOptions {
    std::vector<std::string> which;  // empty = all of G1..G6
    std::uint64_t seed = 0;
    bool syntax_sensitive = false;   // drops G4 (and F3 in faithfulness)
    int max_classes = 4096;
    // exhaustive G4 when 2^|sentences| is at most this; sampled otherwise
    std::uint64_t g4_base_space_cap = 4096;
    std::uint64_t g4_samples = 10000;
};

/// Audits the six change postulates over semantic classes (all class pairs
/// for G1-G3, all triples for G5/G6); G4 runs over all syntactic base pairs
/// against class representatives when the base space is small, else over a
/// seeded sample reported as non-exhaustive.
AuditReport check_postulates(const OperatorPtr& op, const AuditOptions& opts = {});

/// F1: no strict preference among K-models. F2: K-models strictly below
/// non-models. F3: structural in semantic mode, scanned in syntactic mode
/// (dropped entirely under syntax_sensitive).
AuditReport check_faithful(const Assignment& assignment, const AuditOptions& opts = {});

/// Output models of every class pair equal the assigned relation's minimum.
AuditReport check_compatible(const OperatorPtr& op, const Assignment& assignment,
                             const AuditOptions& opts = {});

}  // namespace revlab
