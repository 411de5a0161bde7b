#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "revlab/audit.hpp"

namespace revlab {

/// Raised when a question presupposes a postulate-satisfying operator but
/// the audit fails. Carries the failing report.
class PostulateFailureError : public std::runtime_error {
public:
    PostulateFailureError(std::string msg, AuditReport report)
        : std::runtime_error(std::move(msg)), report(std::move(report)) {}
    AuditReport report;
};

/// The canonical preference encoding of an operator: world i is at-most
/// world j under K iff every input class containing both either keeps i in
/// the output or drops j. Pairs sharing no class are related both ways.
Relation extract_relation(const OperatorPtr& op, int k_class);

/// extract_relation for every K-class, packaged as a semantic assignment.
Assignment extract_assignment(const OperatorPtr& op);

/// Unordered world pairs (i <= j) such that neither world ever appears in
/// any revision output for this K.
std::vector<std::pair<int, int>> detached_pairs(const OperatorPtr& op, int k_class);
std::vector<std::pair<int, int>> detached_pairs(const OperatorPtr& op, const BeliefBase& k);

/// Directed strict-preference evidence: an edge from i to j witnessed by a
/// class whose output separates them. Any compatible preorder assignment
/// must orient every edge strictly.
struct ForcedEdge {
    int from = 0;
    int to = 0;
    int gamma_class = -1;
};

struct ForcedStrictGraph {
    LogicPtr logic;
    int k_class = -1;
    std::vector<ForcedEdge> edges;

    /// Least directed cycle found by ordered DFS, rotated to start at the
    /// least world; empty when acyclic.
    std::vector<int> find_cycle() const;
    std::optional<ForcedEdge> edge_between(int from, int to) const;
};

ForcedStrictGraph forced_strict_graph(const OperatorPtr& op, int k_class);

struct LiftFailure {
    enum class Kind { transitivity, min_preservation };
    Kind kind = Kind::transitivity;
    std::array<int, 3> worlds{-1, -1, -1};  // violating triple, if transitivity
    int class_index = -1;                   // violating class, if min preservation
};

/// Removes detached pairs from the extracted relation, restores reflexive
/// pairs, and order-extends to a total preorder when transitive; the result
/// must preserve the extracted minimum on every class.
std::variant<Relation, LiftFailure> preorder_lift(const OperatorPtr& op, int k_class);
std::variant<Relation, LiftFailure> preorder_lift(const OperatorPtr& op, const BeliefBase& k);

enum class RepStatus { representable, not_representable, unknown };

struct CycleWitness {
    int k_class = -1;
    std::vector<int> worlds;          // cycle, least world first
    std::vector<ForcedEdge> edges;    // consecutive edges incl. the closing one
};

/// Three-valued verdict. A representable witness is a total preorder
/// assignment that passes the faithfulness, min-completeness, preorder and
/// compatibility checks; a negative witness is a forced strict cycle.
struct RepresentabilityVerdict {
    RepStatus status = RepStatus::unknown;
    std::optional<Assignment> witness;
    std::optional<CycleWitness> cycle;
    std::vector<std::pair<int, LiftFailure>> lift_failures;  // k_class -> failure
};

/// Audits (G1)-(G6) first and throws PostulateFailureError on failure;
/// then: a forced strict cycle in some K-class decides not-representable;
/// otherwise all K-classes lifting decides representable; otherwise unknown.
RepresentabilityVerdict representability(const OperatorPtr& op, const AuditOptions& opts = {});

}  // namespace revlab
