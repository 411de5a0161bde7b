#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "revlab/extract.hpp"

namespace revlab {

/// A validated critical loop: three base classes whose cyclic overlap
/// structure forces a strict preference cycle in any compatible assignment.
/// Stores per-condition evidence; revalidate() rechecks all three
/// conditions from the stored data.
struct CriticalLoop {
    std::array<int, 3> gamma_classes{};
    std::array<int, 3> gamma_prime_classes{};
    int k_class = -1;
    /// Condition (3) evidence: every qualifying class paired with a
    /// nonempty expressible subset of its outside region.
    std::vector<std::pair<int, int>> condition3;

    bool revalidate(const Logic& logic) const;
};

struct LoopSearchResult {
    std::vector<CriticalLoop> loops;  // up to the requested limit
    int total_count = 0;              // exhaustive count over all class triples
};

/// Enumerates unordered class triples in canonical order and validates the
/// three loop conditions exactly (searching inclusion-minimal expressible
/// witness regions). Empty result means the logic admits no critical loop.
LoopSearchResult find_critical_loops(const LogicPtr& logic, int limit = 10);

/// Closure of the expressible sets under pairwise union; witness is the
/// least non-expressible union (two class indices).
PropertyVerdict is_disjunctive(const Logic& logic);

/// End-to-end counterexample run: loop search; if a loop exists, build the
/// counterexample operator, audit it, and demand a not-representable
/// verdict. Without a loop, the shipped fixture operators must lift to
/// total preorders. Violated expectations are reported as findings.
struct PipelineReport {
    bool loop_found = false;
    int loop_count = 0;
    std::optional<CriticalLoop> loop;
    std::optional<AuditReport> loop_audit;
    std::optional<RepStatus> verdict;
    std::optional<CycleWitness> cycle;
    std::vector<std::pair<std::string, std::string>> fixture_results;  // op -> outcome
    std::vector<std::string> findings;

    bool ok() const { return findings.empty(); }
};

PipelineReport counterexample_pipeline(const LogicPtr& logic, const AuditOptions& opts = {});

}  // namespace revlab
