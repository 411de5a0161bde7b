#include "revlab/assignment.hpp"

namespace revlab {

namespace {

void require_total(const Relation& rel, const std::string& where) {
    if (!is_total(rel).holds)
        throw InputError("assignment '" + where + "' contains a non-total relation");
}

}  // namespace

Assignment::Assignment(LogicPtr logic, std::vector<Relation> by_class, std::string name)
    : logic_(std::move(logic)), name_(std::move(name)), by_class_(std::move(by_class)) {
    if (!logic_) throw InputError("assignment requires a logic");
    if (static_cast<int>(by_class_.size()) != logic_->class_count())
        throw InputError("assignment '" + name_ + "' must cover every semantic class (" +
                         std::to_string(logic_->class_count()) + " classes, got " +
                         std::to_string(by_class_.size()) + ")");
    for (const auto& rel : by_class_) {
        if (rel.logic().get() != logic_.get())
            throw InputError("assignment '" + name_ + "' mixes logics");
        require_total(rel, name_);
    }
}

Assignment::Assignment(LogicPtr logic, std::map<BeliefBase, Relation> by_base, std::string name)
    : logic_(std::move(logic)), name_(std::move(name)), syntactic_(true), by_base_(std::move(by_base)) {
    if (!logic_) throw InputError("assignment requires a logic");
    if (by_base_.empty()) throw InputError("syntactic assignment '" + name_ + "' is empty");
    for (const auto& [base, rel] : by_base_) {
        logic_->models_of(base);  // validates sentence ids
        if (rel.logic().get() != logic_.get())
            throw InputError("assignment '" + name_ + "' mixes logics");
        require_total(rel, name_);
    }
}

const Relation& Assignment::relation_for_class(int class_index) const {
    if (syntactic_)
        throw ContractError("syntactic assignment has no per-class relation");
    if (class_index < 0 || class_index >= static_cast<int>(by_class_.size()))
        throw InputError("class index out of range");
    return by_class_[class_index];
}

const Relation& Assignment::relation_for_base(const BeliefBase& base) const {
    if (!syntactic_) return by_class_[static_cast<std::size_t>(logic_->class_of_base(base))];
    auto it = by_base_.find(base);
    if (it == by_base_.end())
        throw InputError("syntactic assignment '" + name_ + "' has no relation for the given base");
    return it->second;
}

const std::vector<Relation>& Assignment::class_relations() const {
    if (syntactic_) throw ContractError("syntactic assignment has no class table");
    return by_class_;
}

const std::map<BeliefBase, Relation>& Assignment::base_relations() const {
    if (!syntactic_) throw ContractError("semantic assignment has no base table");
    return by_base_;
}

}  // namespace revlab
