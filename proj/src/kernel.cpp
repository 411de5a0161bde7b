#include "revlab/kernel.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

namespace revlab {

namespace {
constexpr int kMaxWorlds = 64;
}

ModelSet ModelSet::full(int world_count) {
    if (world_count <= 0) return ModelSet{};
    if (world_count >= 64) return ModelSet::from_bits(~std::uint64_t{0});
    return ModelSet::from_bits((std::uint64_t{1} << world_count) - 1);
}

int ModelSet::size() const { return std::popcount(bits_); }

std::vector<int> ModelSet::members(int world_count) const {
    std::vector<int> out;
    for (int w = 0; w < world_count; ++w)
        if (contains(w)) out.push_back(w);
    return out;
}

BeliefBase::BeliefBase(std::vector<int> sentence_ids) : ids(std::move(sentence_ids)) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

bool BeliefBase::contains(int id) const {
    return std::binary_search(ids.begin(), ids.end(), id);
}

BeliefBase BeliefBase::united_with(const BeliefBase& other) const {
    std::vector<int> merged;
    merged.reserve(ids.size() + other.ids.size());
    std::merge(ids.begin(), ids.end(), other.ids.begin(), other.ids.end(),
               std::back_inserter(merged));
    return BeliefBase(std::move(merged));
}

BeliefBase BeliefBase::with(int id) const {
    std::vector<int> copy = ids;
    copy.push_back(id);
    return BeliefBase(std::move(copy));
}

bool class_order_less(ModelSet a, ModelSet b, int world_count) {
    if (a.size() != b.size()) return a.size() > b.size();
    for (int w = 0; w < world_count; ++w) {
        bool ia = a.contains(w), ib = b.contains(w);
        if (ia != ib) return ia;
    }
    return false;
}

Logic::Logic(std::string name,
             std::vector<std::string> worlds,
             std::vector<std::string> sentence_names,
             std::vector<ModelSet> sentence_models)
    : name_(std::move(name)),
      worlds_(std::move(worlds)),
      sentence_names_(std::move(sentence_names)),
      sentence_models_(std::move(sentence_models)) {
    if (worlds_.empty()) throw InputError("logic '" + name_ + "' declares no worlds");
    if (static_cast<int>(worlds_.size()) > kMaxWorlds)
        throw InputError("logic '" + name_ + "' exceeds the 64-world cap");
    if (sentence_names_.size() != sentence_models_.size())
        throw InputError("sentence name/model count mismatch");

    for (int w = 0; w < static_cast<int>(worlds_.size()); ++w) {
        if (!world_index_.emplace(worlds_[w], w).second)
            throw InputError("duplicate world name '" + worlds_[w] + "'");
    }
    const ModelSet universe = all_worlds();
    for (int s = 0; s < static_cast<int>(sentence_names_.size()); ++s) {
        if (!sentence_index_.emplace(sentence_names_[s], s).second)
            throw InputError("duplicate sentence name '" + sentence_names_[s] + "'");
        if (!sentence_models_[s].subset_of(universe))
            throw InputError("sentence '" + sentence_names_[s] + "' has models outside the declared worlds");
    }
}

std::optional<int> Logic::world_index(const std::string& name) const {
    auto it = world_index_.find(name);
    if (it == world_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Logic::sentence_index(const std::string& name) const {
    auto it = sentence_index_.find(name);
    if (it == sentence_index_.end()) return std::nullopt;
    return it->second;
}

BeliefBase Logic::base_from_ids(std::vector<int> ids) const {
    for (int id : ids) {
        if (id < 0 || id >= sentence_count())
            throw InputError("sentence index " + std::to_string(id) + " out of range for logic '" + name_ + "'");
    }
    return BeliefBase(std::move(ids));
}

BeliefBase Logic::base_from_names(const std::vector<std::string>& names) const {
    std::vector<int> ids;
    ids.reserve(names.size());
    for (const auto& n : names) {
        auto idx = sentence_index(n);
        if (!idx) throw InputError("unknown sentence '" + n + "' in logic '" + name_ + "'");
        ids.push_back(*idx);
    }
    return BeliefBase(std::move(ids));
}

std::vector<std::string> Logic::base_names(const BeliefBase& base) const {
    std::vector<std::string> out;
    out.reserve(base.ids.size());
    for (int id : base.ids) out.push_back(sentence_name(id));
    return out;
}

ModelSet Logic::models_of(const BeliefBase& base) const {
    ModelSet acc = all_worlds();
    for (int id : base.ids) {
        if (id < 0 || id >= sentence_count())
            throw InputError("sentence index " + std::to_string(id) + " out of range for logic '" + name_ + "'");
        acc = acc & sentence_models_[id];
    }
    return acc;
}

bool Logic::entails(const BeliefBase& k1, const BeliefBase& k2) const {
    return models_of(k1).subset_of(models_of(k2));
}

bool Logic::equivalent(const BeliefBase& k1, const BeliefBase& k2) const {
    return models_of(k1) == models_of(k2);
}

bool Logic::is_consistent(const BeliefBase& base) const {
    return !models_of(base).empty();
}

void Logic::ensure_classes() const {
    if (classes_ready_) return;

    const int n = world_count();
    std::vector<std::uint64_t> masks;
    masks.reserve(sentence_models_.size() + 1);
    masks.push_back(all_worlds().bits());
    {
        std::unordered_set<std::uint64_t> seen(masks.begin(), masks.end());
        for (ModelSet m : sentence_models_)
            if (seen.insert(m.bits()).second) masks.push_back(m.bits());
    }

    std::vector<std::uint64_t> closed;
    const bool small_space = n <= 20;
    if (small_space && masks.size() == (std::uint64_t{1} << n)) {
        // Every subset already present: the family is intersection-closed.
        closed = masks;
    } else if (small_space) {
        std::vector<char> seen(std::size_t{1} << n, 0);
        std::deque<std::uint64_t> queue;
        for (auto m : masks) {
            if (!seen[m]) {
                seen[m] = 1;
                queue.push_back(m);
                closed.push_back(m);
            }
        }
        while (!queue.empty()) {
            std::uint64_t m = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < closed.size(); ++i) {
                std::uint64_t x = m & closed[i];
                if (!seen[x]) {
                    seen[x] = 1;
                    queue.push_back(x);
                    closed.push_back(x);
                }
            }
        }
    } else {
        std::unordered_set<std::uint64_t> seen;
        std::deque<std::uint64_t> queue;
        for (auto m : masks) {
            if (seen.insert(m).second) {
                queue.push_back(m);
                closed.push_back(m);
            }
        }
        while (!queue.empty()) {
            std::uint64_t m = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < closed.size(); ++i) {
                std::uint64_t x = m & closed[i];
                if (seen.insert(x).second) {
                    queue.push_back(x);
                    closed.push_back(x);
                }
            }
        }
    }

    std::sort(closed.begin(), closed.end(), [n](std::uint64_t a, std::uint64_t b) {
        return class_order_less(ModelSet::from_bits(a), ModelSet::from_bits(b), n);
    });

    closure_.clear();
    closure_.reserve(closed.size());
    classes_.clear();
    classes_.reserve(closed.size());
    class_index_.clear();
    for (std::size_t i = 0; i < closed.size(); ++i) {
        ModelSet m = ModelSet::from_bits(closed[i]);
        closure_.push_back(m);
        classes_.push_back(SemanticClass{m, canonical_base_for(m)});
        class_index_.emplace(closed[i], static_cast<int>(i));
    }
    classes_ready_ = true;
}

const std::vector<ModelSet>& Logic::expressible_closure() const {
    ensure_classes();
    return closure_;
}

const std::vector<SemanticClass>& Logic::classes() const {
    ensure_classes();
    return classes_;
}

int Logic::class_of(ModelSet models) const {
    ensure_classes();
    auto it = class_index_.find(models.bits());
    return it == class_index_.end() ? -1 : it->second;
}

int Logic::class_of_base(const BeliefBase& base) const {
    return class_of(models_of(base));
}

namespace {

// Lexicographically least size-k candidate subset whose intersection with
// the universe hits the target exactly. Candidates are pre-filtered to
// supersets of the target; suffix_all[i] is the intersection of all
// candidate masks from i on, used to prune unreachable branches.
bool pick_base_dfs(const std::vector<std::pair<std::uint64_t, int>>& cand,
                   const std::vector<std::uint64_t>& suffix_all,
                   std::uint64_t target, std::uint64_t acc,
                   std::size_t start, int remaining, std::vector<int>& picked) {
    if (remaining == 0) return acc == target;
    if (start >= cand.size()) return false;
    if ((acc & suffix_all[start]) != target) return false;
    for (std::size_t j = start; j + remaining <= cand.size(); ++j) {
        std::uint64_t next = acc & cand[j].first;
        if (next == acc) continue;  // redundant member, never in a minimum base
        picked.push_back(cand[j].second);
        if (pick_base_dfs(cand, suffix_all, target, next, j + 1, remaining - 1, picked))
            return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace

BeliefBase Logic::canonical_base_for(ModelSet target) const {
    if (target == all_worlds()) return BeliefBase{};

    std::vector<std::pair<std::uint64_t, int>> cand;  // mask -> least sentence id
    {
        std::unordered_set<std::uint64_t> seen;
        for (int s = 0; s < sentence_count(); ++s) {
            ModelSet m = sentence_models_[s];
            if (!target.subset_of(m)) continue;
            if (m == target) return base_from_ids({s});  // least id with this mask wins
            if (seen.insert(m.bits()).second) cand.emplace_back(m.bits(), s);
        }
    }

    std::vector<std::uint64_t> suffix_all(cand.size() + 1, ~std::uint64_t{0});
    for (std::size_t i = cand.size(); i-- > 0;)
        suffix_all[i] = suffix_all[i + 1] & cand[i].first;

    std::vector<int> picked;
    for (int k = 2; k <= static_cast<int>(cand.size()); ++k) {
        if (pick_base_dfs(cand, suffix_all, target.bits(), all_worlds().bits(), 0, k, picked))
            return base_from_ids(picked);
    }
    throw ContractError("no base expresses the requested model set");
}

namespace {

std::string greek(const char* letter, int i) { return std::string(letter) + std::to_string(i); }

LogicPtr make_lex(bool with_phi0) {
    std::vector<std::string> worlds;
    for (int i = 0; i < 6; ++i) worlds.push_back(greek("ω", i));  // omega

    std::vector<std::string> names;
    std::vector<ModelSet> models;
    for (int i = 0; i < 6; ++i) {
        names.push_back(greek("ψ", i));  // psi
        models.push_back(ModelSet{}.with(i));
    }
    auto add_phi = [&](int i, std::initializer_list<int> ws) {
        names.push_back(greek("φ", i));  // phi
        ModelSet m;
        for (int w : ws) m = m.with(w);
        models.push_back(m);
    };
    if (with_phi0) add_phi(0, {0, 1, 2, 3});
    add_phi(1, {1, 2});
    add_phi(2, {2, 3});
    add_phi(3, {3, 1});
    add_phi(4, {1, 2, 3, 4, 5});

    return std::make_shared<Logic>(with_phi0 ? "lex_paper" : "lex_core",
                                   std::move(worlds), std::move(names), std::move(models));
}

std::string bit_name(char prefix, std::uint64_t bits, int width) {
    std::string s(1, prefix);
    for (int i = 0; i < width; ++i) s += ((bits >> i) & 1) ? '1' : '0';
    return s;
}

}  // namespace

LogicPtr make_lex_paper() {
    static LogicPtr instance = make_lex(true);
    return instance;
}

LogicPtr make_lex_core() {
    static LogicPtr instance = make_lex(false);
    return instance;
}

LogicPtr make_propositional(int n) {
    if (n < 1 || n > 4) throw InputError("propositional(n) supports 1 <= n <= 4");
    const int world_count = 1 << n;
    std::vector<std::string> worlds;
    for (int w = 0; w < world_count; ++w)
        worlds.push_back(bit_name('w', static_cast<std::uint64_t>(w), n));

    // One sentence per subset of worlds; the name spells the membership
    // vector in world order.
    const std::uint64_t subsets = std::uint64_t{1} << world_count;
    std::vector<std::string> names;
    std::vector<ModelSet> models;
    names.reserve(subsets);
    models.reserve(subsets);
    for (std::uint64_t m = 0; m < subsets; ++m) {
        names.push_back(bit_name('s', m, world_count));
        models.push_back(ModelSet::from_bits(m));
    }
    return std::make_shared<Logic>("propositional" + std::to_string(n),
                                   std::move(worlds), std::move(names), std::move(models));
}

LogicPtr make_horn(int n) {
    if (n < 1 || n > 3) throw InputError("horn(n) supports 1 <= n <= 3");
    const int world_count = 1 << n;
    std::vector<std::string> worlds;
    for (int w = 0; w < world_count; ++w)
        worlds.push_back(bit_name('w', static_cast<std::uint64_t>(w), n));

    // Clauses with at most one positive literal, each atom used at most
    // once. World w satisfies atom a iff bit a of w is set.
    std::vector<std::string> names;
    std::vector<ModelSet> models;
    for (int pos = -1; pos < n; ++pos) {
        for (std::uint64_t neg = 0; neg < (std::uint64_t{1} << n); ++neg) {
            if (pos >= 0 && ((neg >> pos) & 1)) continue;
            std::string name;
            for (int a = 0; a < n; ++a) {
                bool is_pos = (a == pos);
                bool is_neg = (neg >> a) & 1;
                if (!is_pos && !is_neg) continue;
                if (!name.empty()) name += '|';
                if (is_neg) name += '!';
                name += 'a';
                name += std::to_string(a);
            }
            if (name.empty()) name = "false";
            ModelSet m;
            for (int w = 0; w < world_count; ++w) {
                bool sat = false;
                if (pos >= 0 && ((w >> pos) & 1)) sat = true;
                for (int a = 0; a < n && !sat; ++a)
                    if (((neg >> a) & 1) && !((w >> a) & 1)) sat = true;
                if (sat) m = m.with(w);
            }
            names.push_back(std::move(name));
            models.push_back(m);
        }
    }
    return std::make_shared<Logic>("horn" + std::to_string(n),
                                   std::move(worlds), std::move(names), std::move(models));
}

LogicPtr make_builtin_logic(const std::string& name) {
    if (name == "lex_paper") return make_lex_paper();
    if (name == "lex_core") return make_lex_core();
    auto parse_arg = [&](const std::string& prefix) -> std::optional<int> {
        if (name.rfind(prefix, 0) != 0) return std::nullopt;
        std::string rest = name.substr(prefix.size());
        if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')')
            rest = rest.substr(1, rest.size() - 2);
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        return std::stoi(rest);
    };
    if (auto n = parse_arg("propositional")) return make_propositional(*n);
    if (auto n = parse_arg("horn")) return make_horn(*n);
    throw InputError("unknown builtin logic '" + name + "'");
}

}  // namespace revlab
