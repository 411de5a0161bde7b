#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "revlab/assignment.hpp"
#include "revlab/kernel.hpp"

namespace revlab {

/// An induced operator needs its source assignment to be min-expressible;
/// construction fails with the first offending pair.
class MinExpressibilityError : public std::runtime_error {
public:
    MinExpressibilityError(std::string msg, int k_class, int gamma_class)
        : std::runtime_error(std::move(msg)), k_class(k_class), gamma_class(gamma_class) {}
    int k_class;
    int gamma_class;
};

/// Validated payload of the critical-loop counterexample operator: the
/// three loop bases, their witness regions, the distinguished K-class,
/// and the candidate set B' under its linear order (canonical class order
/// stands in for a well-order).
struct LoopData {
    std::array<int, 3> gamma_classes;
    std::array<int, 3> gamma_prime_classes;
    int k_class = -1;
    std::vector<int> b_prime;  // class indices, ascending canonical order
};

/// Validates loop conditions (1) and (2) for the given classes and computes
/// B' per the counterexample construction. Throws ContractError when the
/// stored data does not satisfy the conditions.
LoopData make_loop_data(const LogicPtr& logic,
                        std::array<int, 3> gamma_classes,
                        std::array<int, 3> gamma_prime_classes,
                        int k_class);

struct TableEntry {
    BeliefBase base;
    BeliefBase input;
    BeliefBase result;
};

enum class TableDefault { full_meet, error };

/// A total map (base, base) -> base over one logic. All built-in kinds are
/// semantic: the output class depends only on the input classes.
class Operator {
public:
    enum class Kind { full_meet, table, induced, builtin_ex, loop_counterexample };

    Kind kind() const { return kind_; }
    const LogicPtr& logic() const { return logic_; }
    const std::string& name() const { return name_; }

    /// Kind-dispatched application; always returns a valid base.
    BeliefBase apply(const BeliefBase& k, const BeliefBase& g) const;

    /// Class-level application: index of the output class.
    int apply_class(int k_class, int g_class) const;
    ModelSet output_models(int k_class, int g_class) const;

    /// Source assignment of an induced operator.
    const Assignment* source_assignment() const;

private:
    friend std::shared_ptr<const Operator> make_full_meet(LogicPtr);
    friend std::shared_ptr<const Operator> make_builtin_ex(LogicPtr);
    friend std::shared_ptr<const Operator> make_induced(Assignment);
    friend std::shared_ptr<const Operator> make_loop_operator(LogicPtr, LoopData);
    friend std::shared_ptr<const Operator> make_table(LogicPtr, std::vector<TableEntry>, TableDefault);
    Operator() = default;

    int full_meet_class(int k_class, int g_class) const;

    Kind kind_ = Kind::full_meet;
    LogicPtr logic_;
    std::string name_;

    // builtin_ex: sentence ids of the five guard singletons psi0..psi4.
    std::array<int, 5> ex_psi_{};
    int ex_k_class_ = -1;

    std::optional<Assignment> induced_source_;

    std::optional<LoopData> loop_;

    std::vector<TableEntry> table_entries_;
    TableDefault table_default_ = TableDefault::full_meet;
    // class-pair -> output class / defining entry, resolved at construction
    std::vector<std::vector<int>> table_map_;
    std::vector<std::vector<int>> table_entry_index_;
};

using OperatorPtr = std::shared_ptr<const Operator>;

/// K revised by G is their union when consistent, G otherwise.
OperatorPtr make_full_meet(LogicPtr logic);

/// The six-case fixture operator of the lex logics; full meet for any base
/// class other than that of {psi0}. Requires a lex variant.
OperatorPtr make_builtin_ex(LogicPtr logic);

/// Operator induced by a min-expressible assignment: the output is the
/// canonical base of the minimum of the input's models under the relation
/// assigned to K. Throws MinExpressibilityError at construction otherwise.
OperatorPtr make_induced(Assignment assignment);

/// The four-case counterexample operator for a validated critical loop;
/// full meet outside the distinguished K-class.
OperatorPtr make_loop_operator(LogicPtr logic, LoopData loop);

/// Table-defined operator; entries are matched semantically via classes.
/// With TableDefault::error the table must cover every class pair
/// (validated at construction so application stays total).
OperatorPtr make_table(LogicPtr logic, std::vector<TableEntry> entries, TableDefault dflt);

}  // namespace revlab
