#pragma once

#include <string>

#include <json.hpp>

#include "revlab/loops.hpp"

namespace revlab {

// All emitted JSON uses ordered_json so key order, and therefore bytes,
// are stable across runs.
using json = nlohmann::ordered_json;

/// Logic file: {"name": ..., "worlds": [...], "sentences": [{"name": ...,
/// "models": [world names]}]}. Unknown keys are rejected; file world order
/// is the canonical world order downstream.
LogicPtr parse_logic_json(const json& j);
LogicPtr load_logic_file(const std::string& path);

/// Relation file: {"logic": name, "matrix": [[0/1 master row-major]]}.
Relation parse_relation_json(const json& j, const LogicPtr& logic);
Relation load_relation_file(const std::string& path, const LogicPtr& logic);
json relation_to_json(const Relation& rel);

/// Operator file: {"type": "full-meet"} | {"type": "builtin", "name": "ex"}
/// | {"type": "table", "default": "full-meet"|"error", "entries": [...]}.
OperatorPtr parse_operator_json(const json& j, const LogicPtr& logic);
OperatorPtr load_operator_file(const std::string& path, const LogicPtr& logic);

/// Assignment file: {"logic": name, "relations": [{"base": [sentence
/// names of the K-class canonical base], "matrix": ...}]}. Every class
/// must be covered.
Assignment parse_assignment_json(const json& j, const LogicPtr& logic);
Assignment load_assignment_file(const std::string& path, const LogicPtr& logic);
json assignment_to_json(const Assignment& assignment);

json audit_report_to_json(const AuditReport& report, const Logic& logic);
json witness_to_json(const AuditWitness& w, const Logic& logic);
json property_verdict_to_json(const PropertyVerdict& v, const Logic& logic);
json critical_loop_to_json(const CriticalLoop& loop, const Logic& logic);
json representability_to_json(const RepresentabilityVerdict& verdict, const Logic& logic);
json pipeline_report_to_json(const PipelineReport& report, const Logic& logic);

json base_to_json(const BeliefBase& base, const Logic& logic);
json model_set_to_json(ModelSet models, const Logic& logic);

std::string verdict_name(Verdict v);
std::string rep_status_name(RepStatus s);

}  // namespace revlab
