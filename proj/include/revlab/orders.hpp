#pragma once

#include <optional>
#include <vector>

#include "revlab/kernel.hpp"

namespace revlab {

/// Binary relation over the worlds of one logic, as a square boolean
/// matrix: row i, column j set means world i is at-most world j.
/// Strictness is derived: i < j iff (i,j) and not (j,i). Immutable.
class Relation {
public:
    Relation(LogicPtr logic, std::vector<std::uint64_t> rows);

    static Relation all_pairs(LogicPtr logic);
    static Relation identity(LogicPtr logic);

    const LogicPtr& logic() const { return logic_; }
    int size() const { return static_cast<int>(rows_.size()); }
    bool le(int i, int j) const { return (rows_[i] >> j) & 1u; }
    bool strict(int i, int j) const { return le(i, j) && !le(j, i); }
    std::uint64_t row(int i) const { return rows_[i]; }
    const std::vector<std::uint64_t>& rows() const { return rows_; }

    friend bool operator==(const Relation& a, const Relation& b) { return a.rows_ == b.rows_; }
    friend bool operator!=(const Relation& a, const Relation& b) { return !(a == b); }

    /// Edge-set containment: every pair related here is related in other.
    bool contained_in(const Relation& other) const;

private:
    LogicPtr logic_;
    std::vector<std::uint64_t> rows_;
};

/// Counterexample payload for a failed property check. Which fields are
/// filled depends on the check; all are canonical-order least.
struct Witness {
    std::vector<int> worlds;
    std::vector<int> classes;
};

struct PropertyVerdict {
    bool holds = true;
    std::optional<Witness> witness;
};

/// Universal minimality: members of the subset that are at-most every
/// member. Valid for non-total relations as well.
ModelSet min_set(const Relation& rel, ModelSet subset);

PropertyVerdict is_total(const Relation& rel);
PropertyVerdict is_reflexive(const Relation& rel);
PropertyVerdict is_transitive(const Relation& rel);
PropertyVerdict is_preorder(const Relation& rel);

/// Anything at-most a minimal element of an expressible set, inside that
/// set, must itself be minimal. Quantifies over semantic classes.
/// Witness: {classes: [gamma], worlds: [w_prime, w]}.
PropertyVerdict is_min_retractive(const Relation& rel);

/// Every nonempty expressible set has a nonempty minimum.
PropertyVerdict is_min_complete(const Relation& rel);

/// The minimum of every expressible set is itself expressible.
PropertyVerdict is_min_expressible(const Relation& rel);

/// Extends a (possibly partial) preorder to a total preorder by longest
/// strict-chain ranking on the quotient. Contains the input and preserves
/// strict pairs. Throws ContractError if the input is not reflexive and
/// transitive.
Relation order_extend(const Relation& rel);

}  // namespace revlab
