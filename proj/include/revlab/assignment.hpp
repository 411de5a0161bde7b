#pragma once

#include <map>
#include <string>
#include <vector>

#include "revlab/orders.hpp"

namespace revlab {

/// A map from belief bases to total relations over worlds. The normal mode
/// keys by semantic class, which makes equal treatment of equivalent bases
/// structural. A syntactic mode keyed by raw bases exists for the setting
/// where syntax-sensitivity is wanted; there the class condition must be
/// scanned instead.
class Assignment {
public:
    /// One relation per semantic class, in class order. All must be total.
    Assignment(LogicPtr logic, std::vector<Relation> by_class, std::string name = "assignment");

    /// Syntactic mode: explicit per-base relations. All must be total.
    Assignment(LogicPtr logic, std::map<BeliefBase, Relation> by_base, std::string name = "assignment");

    const LogicPtr& logic() const { return logic_; }
    const std::string& name() const { return name_; }
    bool syntactic() const { return syntactic_; }

    const Relation& relation_for_class(int class_index) const;
    const Relation& relation_for_base(const BeliefBase& base) const;

    /// Semantic mode only.
    const std::vector<Relation>& class_relations() const;
    /// Syntactic mode only.
    const std::map<BeliefBase, Relation>& base_relations() const;

private:
    LogicPtr logic_;
    std::string name_;
    bool syntactic_ = false;
    std::vector<Relation> by_class_;
    std::map<BeliefBase, Relation> by_base_;
};

}  // namespace revlab
