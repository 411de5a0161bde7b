#include "revlab/io.hpp"

#include <fstream>

namespace revlab {

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        // e.what() carries the byte position
        throw InputError("'" + path + "': " + e.what());
    }
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed)
            if (it.key() == a) ok = true;
        if (!ok) throw InputError(where + ": unknown key '" + it.key() + "'");
    }
}

const json& require_key(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw InputError(where + ": missing key '" + key + "'");
    return *it;
}

std::vector<std::string> string_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array of strings");
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) throw InputError(where + ": expected an array of strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

}  // namespace

LogicPtr parse_logic_json(const json& j) {
    if (!j.is_object()) throw InputError("logic file: expected a JSON object");
    reject_unknown_keys(j, {"name", "worlds", "sentences"}, "logic file");
    std::string name = require_key(j, "name", "logic file").get<std::string>();
    std::vector<std::string> worlds = string_array(require_key(j, "worlds", "logic file"), "worlds");

    std::unordered_map<std::string, int> world_index;
    for (int w = 0; w < static_cast<int>(worlds.size()); ++w) world_index.emplace(worlds[w], w);

    const json& sentences = require_key(j, "sentences", "logic file");
    if (!sentences.is_array()) throw InputError("logic file: 'sentences' must be an array");
    std::vector<std::string> sentence_names;
    std::vector<ModelSet> sentence_models;
    for (const auto& s : sentences) {
        if (!s.is_object()) throw InputError("logic file: each sentence must be an object");
        reject_unknown_keys(s, {"name", "models"}, "sentence");
        std::string sname = require_key(s, "name", "sentence").get<std::string>();
        ModelSet m;
        for (const auto& wname : string_array(require_key(s, "models", "sentence"), "models")) {
            auto it = world_index.find(wname);
            if (it == world_index.end())
                throw InputError("sentence '" + sname + "' lists unknown world '" + wname + "'");
            m = m.with(it->second);
        }
        sentence_names.push_back(std::move(sname));
        sentence_models.push_back(m);
    }
    return std::make_shared<Logic>(std::move(name), std::move(worlds),
                                   std::move(sentence_names), std::move(sentence_models));
}

LogicPtr load_logic_file(const std::string& path) { return parse_logic_json(load_json_file(path)); }

Relation parse_relation_json(const json& j, const LogicPtr& logic) {
    if (!j.is_object()) throw InputError("relation file: expected a JSON object");
    reject_unknown_keys(j, {"logic", "matrix"}, "relation file");
    std::string lname = require_key(j, "logic", "relation file").get<std::string>();
    if (lname != logic->name())
        throw InputError("relation file targets logic '" + lname + "', loaded logic is '" +
                         logic->name() + "'");
    const json& matrix = require_key(j, "matrix", "relation file");
    if (!matrix.is_array()) throw InputError("relation file: 'matrix' must be an array of arrays");
    std::vector<std::uint64_t> rows;
    for (const auto& row : matrix) {
        if (!row.is_array() || static_cast<int>(row.size()) != logic->world_count())
            throw InputError("relation file: matrix must be square in the logic's world count");
        std::uint64_t bits = 0;
        for (int c = 0; c < static_cast<int>(row.size()); ++c) {
            const auto& cell = row[c];
            if (!cell.is_number_integer() || (cell.get<int>() != 0 && cell.get<int>() != 1))
                throw InputError("relation file: matrix entries must be 0 or 1");
            if (cell.get<int>() == 1) bits |= std::uint64_t{1} << c;
        }
        rows.push_back(bits);
    }
    return Relation(logic, std::move(rows));
}

Relation load_relation_file(const std::string& path, const LogicPtr& logic) {
    return parse_relation_json(load_json_file(path), logic);
}

json relation_to_json(const Relation& rel) {
    json matrix = json::array();
    for (int i = 0; i < rel.size(); ++i) {
        json row = json::array();
        for (int jx = 0; jx < rel.size(); ++jx) row.push_back(rel.le(i, jx) ? 1 : 0);
        matrix.push_back(std::move(row));
    }
    return json{{"logic", rel.logic()->name()}, {"matrix", std::move(matrix)}};
}

OperatorPtr parse_operator_json(const json& j, const LogicPtr& logic) {
    if (!j.is_object()) throw InputError("operator file: expected a JSON object");
    std::string type = require_key(j, "type", "operator file").get<std::string>();
    if (type == "full-meet") {
        reject_unknown_keys(j, {"type"}, "operator file");
        return make_full_meet(logic);
    }
    if (type == "builtin") {
        reject_unknown_keys(j, {"type", "name"}, "operator file");
        std::string name = require_key(j, "name", "operator file").get<std::string>();
        if (name == "ex") return make_builtin_ex(logic);
        if (name == "full-meet") return make_full_meet(logic);
        throw InputError("unknown builtin operator '" + name + "'");
    }
    if (type == "table") {
        reject_unknown_keys(j, {"type", "default", "entries"}, "operator file");
        std::string dflt = require_key(j, "default", "operator file").get<std::string>();
        TableDefault td;
        if (dflt == "full-meet")
            td = TableDefault::full_meet;
        else if (dflt == "error")
            td = TableDefault::error;
        else
            throw InputError("operator file: default must be 'full-meet' or 'error'");
        const json& entries = require_key(j, "entries", "operator file");
        if (!entries.is_array()) throw InputError("operator file: 'entries' must be an array");
        std::vector<TableEntry> parsed;
        for (const auto& e : entries) {
            if (!e.is_object()) throw InputError("table entry: expected an object");
            reject_unknown_keys(e, {"base", "input", "result"}, "table entry");
            TableEntry t;
            t.base = logic->base_from_names(string_array(require_key(e, "base", "table entry"), "base"));
            t.input = logic->base_from_names(string_array(require_key(e, "input", "table entry"), "input"));
            t.result = logic->base_from_names(string_array(require_key(e, "result", "table entry"), "result"));
            parsed.push_back(std::move(t));
        }
        return make_table(logic, std::move(parsed), td);
    }
    throw InputError("operator file: unknown type '" + type + "'");
}

OperatorPtr load_operator_file(const std::string& path, const LogicPtr& logic) {
    return parse_operator_json(load_json_file(path), logic);
}

Assignment parse_assignment_json(const json& j, const LogicPtr& logic) {
    if (!j.is_object()) throw InputError("assignment file: expected a JSON object");
    reject_unknown_keys(j, {"logic", "relations"}, "assignment file");
    std::string lname = require_key(j, "logic", "assignment file").get<std::string>();
    if (lname != logic->name())
        throw InputError("assignment file targets logic '" + lname + "', loaded logic is '" +
                         logic->name() + "'");
    const json& rels = require_key(j, "relations", "assignment file");
    if (!rels.is_array()) throw InputError("assignment file: 'relations' must be an array");

    std::vector<std::optional<Relation>> by_class(logic->class_count());
    for (const auto& entry : rels) {
        if (!entry.is_object()) throw InputError("assignment entry: expected an object");
        reject_unknown_keys(entry, {"base", "matrix"}, "assignment entry");
        BeliefBase base =
            logic->base_from_names(string_array(require_key(entry, "base", "assignment entry"), "base"));
        int cls = logic->class_of_base(base);
        if (by_class[cls])
            throw InputError("assignment file covers one class twice");
        json rel_json{{"logic", lname}, {"matrix", require_key(entry, "matrix", "assignment entry")}};
        by_class[cls] = parse_relation_json(rel_json, logic);
    }
    std::vector<Relation> complete;
    for (int c = 0; c < logic->class_count(); ++c) {
        if (!by_class[c])
            throw InputError("assignment file misses the class of " +
                             json(base_to_json(logic->classes()[c].canonical_base, *logic)).dump());
        complete.push_back(std::move(*by_class[c]));
    }
    return Assignment(logic, std::move(complete), "file");
}

Assignment load_assignment_file(const std::string& path, const LogicPtr& logic) {
    return parse_assignment_json(load_json_file(path), logic);
}

json assignment_to_json(const Assignment& assignment) {
    const Logic& logic = *assignment.logic();
    json rels = json::array();
    for (int c = 0; c < logic.class_count(); ++c) {
        const Relation& rel = assignment.relation_for_class(c);
        json matrix = relation_to_json(rel)["matrix"];
        rels.push_back(json{{"base", base_to_json(logic.classes()[c].canonical_base, logic)},
                            {"matrix", std::move(matrix)}});
    }
    return json{{"logic", logic.name()}, {"relations", std::move(rels)}};
}

json base_to_json(const BeliefBase& base, const Logic& logic) {
    json out = json::array();
    for (int id : base.ids) out.push_back(logic.sentence_name(id));
    return out;
}

json model_set_to_json(ModelSet models, const Logic& logic) {
    json out = json::array();
    for (int w : models.members(logic.world_count())) out.push_back(logic.world_name(w));
    return out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::sampled_pass: return "sampled-pass";
    }
    return "pass";
}

std::string rep_status_name(RepStatus s) {
    switch (s) {
        case RepStatus::representable: return "representable";
        case RepStatus::not_representable: return "notRepresentable";
        case RepStatus::unknown: return "unknown";
    }
    return "unknown";
}

json witness_to_json(const AuditWitness& w, const Logic& logic) {
    json out = json::object();
    auto class_base = [&](int c) { return base_to_json(logic.classes()[c].canonical_base, logic); };
    if (w.k_class) out["k"] = class_base(*w.k_class);
    if (w.k1) out["k1"] = base_to_json(*w.k1, logic);
    if (w.k2) out["k2"] = base_to_json(*w.k2, logic);
    if (w.g1_class) out["gamma1"] = class_base(*w.g1_class);
    if (w.g2_class) out["gamma2"] = class_base(*w.g2_class);
    if (w.g1) out["gamma1Base"] = base_to_json(*w.g1, logic);
    if (w.g2) out["gamma2Base"] = base_to_json(*w.g2, logic);
    if (w.left) out["left"] = model_set_to_json(*w.left, logic);
    if (w.right) out["right"] = model_set_to_json(*w.right, logic);
    if (w.worlds)
        out["worlds"] = json::array({logic.world_name(w.worlds->first), logic.world_name(w.worlds->second)});
    return out;
}

json audit_report_to_json(const AuditReport& report, const Logic& logic) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json witnesses = json::array();
        for (const auto& w : c.witnesses) witnesses.push_back(witness_to_json(w, logic));
        checks.push_back(json{{"name", c.name}, {"verdict", verdict_name(c.verdict)},
                              {"witnesses", std::move(witnesses)}});
    }
    return json{{"subject", report.subject}, {"checks", std::move(checks)},
                {"exhaustive", report.exhaustive}};
}

json property_verdict_to_json(const PropertyVerdict& v, const Logic& logic) {
    json out{{"holds", v.holds}};
    if (v.witness) {
        json w = json::object();
        if (!v.witness->worlds.empty()) {
            json ws = json::array();
            for (int i : v.witness->worlds) ws.push_back(logic.world_name(i));
            w["worlds"] = std::move(ws);
        }
        if (!v.witness->classes.empty()) {
            json cs = json::array();
            for (int c : v.witness->classes)
                cs.push_back(base_to_json(logic.classes()[c].canonical_base, logic));
            w["classes"] = std::move(cs);
        }
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

json critical_loop_to_json(const CriticalLoop& loop, const Logic& logic) {
    auto class_base = [&](int c) { return base_to_json(logic.classes()[c].canonical_base, logic); };
    auto class_models = [&](int c) { return model_set_to_json(logic.classes()[c].models, logic); };
    json gammas = json::array(), primes = json::array();
    for (int i = 0; i < 3; ++i) {
        gammas.push_back(json{{"base", class_base(loop.gamma_classes[i])},
                              {"models", class_models(loop.gamma_classes[i])}});
        primes.push_back(json{{"base", class_base(loop.gamma_prime_classes[i])},
                              {"models", class_models(loop.gamma_prime_classes[i])}});
    }
    json cond3 = json::array();
    for (auto [g, w] : loop.condition3)
        cond3.push_back(json{{"gamma", class_base(g)}, {"witness", class_base(w)}});
    return json{{"gammas", std::move(gammas)},
                {"gammaPrimes", std::move(primes)},
                {"k", class_base(loop.k_class)},
                {"condition3", std::move(cond3)}};
}

json representability_to_json(const RepresentabilityVerdict& verdict, const Logic& logic) {
    json out{{"status", rep_status_name(verdict.status)}};
    if (verdict.cycle) {
        json worlds = json::array();
        for (int w : verdict.cycle->worlds) worlds.push_back(logic.world_name(w));
        json edges = json::array();
        for (const auto& e : verdict.cycle->edges) {
            edges.push_back(json{{"from", logic.world_name(e.from)},
                                 {"to", logic.world_name(e.to)},
                                 {"gamma", base_to_json(logic.classes()[e.gamma_class].canonical_base, logic)}});
        }
        out["cycle"] = json{{"k", base_to_json(logic.classes()[verdict.cycle->k_class].canonical_base, logic)},
                            {"worlds", std::move(worlds)},
                            {"edges", std::move(edges)}};
    }
    if (verdict.witness) out["witness"] = assignment_to_json(*verdict.witness);
    if (!verdict.lift_failures.empty()) {
        json fails = json::array();
        for (const auto& [k, f] : verdict.lift_failures) {
            json fj{{"k", base_to_json(logic.classes()[k].canonical_base, logic)},
                    {"kind", f.kind == LiftFailure::Kind::transitivity ? "transitivity" : "minPreservation"}};
            if (f.kind == LiftFailure::Kind::transitivity) {
                fj["worlds"] = json::array({logic.world_name(f.worlds[0]), logic.world_name(f.worlds[1]),
                                            logic.world_name(f.worlds[2])});
            } else {
                fj["class"] = base_to_json(logic.classes()[f.class_index].canonical_base, logic);
            }
            fails.push_back(std::move(fj));
        }
        out["liftFailures"] = std::move(fails);
    }
    return out;
}

json pipeline_report_to_json(const PipelineReport& report, const Logic& logic) {
    json out{{"loopFound", report.loop_found}, {"loopCount", report.loop_count}};
    if (report.loop) out["loop"] = critical_loop_to_json(*report.loop, logic);
    if (report.loop_audit) out["audit"] = audit_report_to_json(*report.loop_audit, logic);
    if (report.verdict) out["verdict"] = rep_status_name(*report.verdict);
    if (report.cycle) {
        json worlds = json::array();
        for (int w : report.cycle->worlds) worlds.push_back(logic.world_name(w));
        out["cycleWorlds"] = std::move(worlds);
    }
    if (!report.fixture_results.empty()) {
        json fx = json::array();
        for (const auto& [name, outcome] : report.fixture_results)
            fx.push_back(json{{"operator", name}, {"outcome", outcome}});
        out["fixtures"] = std::move(fx);
    }
    out["findings"] = report.findings;
    return out;
}

}  // namespace revlab
