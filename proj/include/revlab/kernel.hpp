#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace revlab {

/// Malformed or out-of-range input (bad file, unknown name, cap exceeded).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated by the caller.
class ContractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Subset of the worlds of one logic, packed into a 64-bit mask.
/// Word order is the logic's declared world order; bit i is world i.
class ModelSet {
public:
    constexpr ModelSet() = default;
    static constexpr ModelSet from_bits(std::uint64_t bits) { return ModelSet(bits); }
    static ModelSet full(int world_count);

    constexpr bool contains(int w) const { return (bits_ >> w) & 1u; }
    ModelSet with(int w) const { return ModelSet(bits_ | (std::uint64_t{1} << w)); }
    ModelSet without(int w) const { return ModelSet(bits_ & ~(std::uint64_t{1} << w)); }

    friend constexpr ModelSet operator&(ModelSet a, ModelSet b) { return ModelSet(a.bits_ & b.bits_); }
    friend constexpr ModelSet operator|(ModelSet a, ModelSet b) { return ModelSet(a.bits_ | b.bits_); }
    friend constexpr ModelSet operator-(ModelSet a, ModelSet b) { return ModelSet(a.bits_ & ~b.bits_); }

    constexpr bool subset_of(ModelSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(ModelSet other) const { return (bits_ & other.bits_) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const;
    constexpr std::uint64_t bits() const { return bits_; }
    std::vector<int> members(int world_count) const;

    friend constexpr bool operator==(ModelSet a, ModelSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(ModelSet a, ModelSet b) { return a.bits_ != b.bits_; }

private:
    explicit constexpr ModelSet(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

/// Finite set of sentence indices of one logic. Sorted, duplicate-free;
/// equality is therefore order-insensitive. The empty base is legal and
/// denotes the whole interpretation space.
struct BeliefBase {
    std::vector<int> ids;

    BeliefBase() = default;
    explicit BeliefBase(std::vector<int> sentence_ids);

    bool contains(int id) const;
    BeliefBase united_with(const BeliefBase& other) const;
    BeliefBase with(int id) const;

    friend bool operator==(const BeliefBase& a, const BeliefBase& b) { return a.ids == b.ids; }
    friend bool operator!=(const BeliefBase& a, const BeliefBase& b) { return !(a == b); }
    friend bool operator<(const BeliefBase& a, const BeliefBase& b) { return a.ids < b.ids; }
};

/// One equivalence class of bases sharing a model set, with its canonical
/// representative (fewest sentences, then least sorted index sequence).
struct SemanticClass {
    ModelSet models;
    BeliefBase canonical_base;
};

/// An extensional finite monotonic logic: named worlds, named sentences,
/// and the models relation as an explicit membership table. Immutable.
class Logic {
public:
    Logic(std::string name,
          std::vector<std::string> worlds,
          std::vector<std::string> sentence_names,
          std::vector<ModelSet> sentence_models);

    const std::string& name() const { return name_; }
    int world_count() const { return static_cast<int>(worlds_.size()); }
    int sentence_count() const { return static_cast<int>(sentence_names_.size()); }
    const std::string& world_name(int w) const { return worlds_.at(w); }
    const std::string& sentence_name(int s) const { return sentence_names_.at(s); }
    const std::vector<std::string>& world_names() const { return worlds_; }
    const std::vector<std::string>& sentence_names() const { return sentence_names_; }
    std::optional<int> world_index(const std::string& name) const;
    std::optional<int> sentence_index(const std::string& name) const;
    ModelSet sentence_models(int s) const { return sentence_models_.at(s); }
    ModelSet all_worlds() const { return ModelSet::full(world_count()); }

    BeliefBase base_from_ids(std::vector<int> ids) const;
    BeliefBase base_from_names(const std::vector<std::string>& names) const;
    std::vector<std::string> base_names(const BeliefBase& base) const;

    ModelSet models_of(const BeliefBase& base) const;
    bool entails(const BeliefBase& k1, const BeliefBase& k2) const;
    bool equivalent(const BeliefBase& k1, const BeliefBase& k2) const;
    bool is_consistent(const BeliefBase& base) const;

    /// Every model set of the form models_of(base): the intersection closure
    /// of the single-sentence model sets together with the full set.
    /// Deterministically ordered (descending size, then member-first).
    const std::vector<ModelSet>& expressible_closure() const;

    /// One SemanticClass per closure member, in closure order.
    const std::vector<SemanticClass>& classes() const;
    int class_count() const { return static_cast<int>(classes().size()); }

    /// Index into classes() for an expressible model set, -1 otherwise.
    int class_of(ModelSet models) const;
    int class_of_base(const BeliefBase& base) const;

private:
    void ensure_classes() const;
    BeliefBase canonical_base_for(ModelSet target) const;

    std::string name_;
    std::vector<std::string> worlds_;
    std::vector<std::string> sentence_names_;
    std::vector<ModelSet> sentence_models_;
    std::unordered_map<std::string, int> world_index_;
    std::unordered_map<std::string, int> sentence_index_;

    mutable bool classes_ready_ = false;
    mutable std::vector<ModelSet> closure_;
    mutable std::vector<SemanticClass> classes_;
    mutable std::unordered_map<std::uint64_t, int> class_index_;
};

using LogicPtr = std::shared_ptr<const Logic>;

/// Deterministic class order: descending size, then member-before-nonmember
/// at the first differing world.
bool class_order_less(ModelSet a, ModelSet b, int world_count);

/// Built-in fixture logics. Accepts "lex_paper", "lex_core",
/// "propositional<n>" / "propositional(<n>)" with n <= 4, and
/// "horn<n>" / "horn(<n>)" with n <= 3.
LogicPtr make_builtin_logic(const std::string& name);

LogicPtr make_lex_paper();
LogicPtr make_lex_core();
LogicPtr make_propositional(int n);
LogicPtr make_horn(int n);

}  // namespace revlab
