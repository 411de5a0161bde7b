#pragma once

// Independent brute-force oracles. Everything here quantifies over raw
// syntactic bases (all 2^|sentences| of them) and computes models by direct
// intersection folds, sharing no enumeration or closure machinery with the
// library code it cross-checks. Only Operator::apply is taken from the
// subject under test, because the operator itself is what the questions are
// about. Desk scale only: sentence counts up to ~16.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "revlab/change.hpp"

namespace revlab::oracle {

// models of the base encoded by a sentence-subset mask, by direct fold
ModelSet models_of_mask(const Logic& logic, std::uint64_t mask);

// every distinct model set of any base, discovered by full enumeration
std::vector<std::uint64_t> expressible_sets(const Logic& logic);

// one representative base mask per distinct model set (first in mask order)
struct Representatives {
    std::vector<std::uint64_t> masks;    // representative base masks
    std::vector<ModelSet> models;        // their model sets, same order
};
Representatives representatives(const Logic& logic);

struct PostulateVerdict {
    bool holds = true;
    // representative base masks of the violating instance
    std::uint64_t k = 0, g1 = 0, g2 = 0;
};

// Each postulate spelled out directly over representative bases (K and
// input bases range over one representative per distinct model set; the
// output of apply is evaluated by the direct fold).
PostulateVerdict check_g1(const Operator& op);
PostulateVerdict check_g2(const Operator& op);
PostulateVerdict check_g3(const Operator& op);
PostulateVerdict check_g4(const Operator& op);  // all base pairs, small logics only
PostulateVerdict check_g5(const Operator& op);
PostulateVerdict check_g6(const Operator& op);
PostulateVerdict check_postulate(const Operator& op, const std::string& name);

// The canonical preference encoding, quantified over every base (not just
// class representatives): entry (i,j) iff for all bases containing both
// worlds, the output keeps i or drops j.
std::vector<std::vector<bool>> extract_matrix(const Operator& op, const BeliefBase& k);

// Critical-loop scan straight from the three conditions, quantifying the
// witness bases over all expressible nonempty subsets of the regions and
// condition (3) over every expressible set. Returns the model-set triples
// (as bit masks, ascending) that form loops.
std::vector<std::array<std::uint64_t, 3>> critical_loop_triples(const Logic& logic);

// The minimum via "no strictly smaller member" instead of the universal
// definition; the two agree on total relations.
ModelSet min_no_strictly_smaller(const Relation& rel, ModelSet subset);

}  // namespace revlab::oracle
