#include "revlab/cli.hpp"

#include <cstring>
#include <ostream>
#include <sstream>

#include "revlab/io.hpp"

namespace revlab {

namespace {

std::string ascii_alias(const std::string& token) {
    static const std::pair<const char*, const char*> prefixes[] = {
        {"psi", "ψ"}, {"phi", "φ"}, {"omega", "ω"}};
    for (auto [ascii, greek] : prefixes) {
        if (token.rfind(ascii, 0) == 0) return std::string(greek) + token.substr(std::strlen(ascii));
    }
    return token;
}

BeliefBase parse_base_arg(const Logic& logic, const std::string& arg) {
    std::vector<int> ids;
    std::stringstream ss(arg);
    std::string token;
    while (std::getline(ss, token, ',')) {
        // trim
        auto b = token.find_first_not_of(" \t");
        auto e = token.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        token = token.substr(b, e - b + 1);
        auto idx = logic.sentence_index(token);
        if (!idx) idx = logic.sentence_index(ascii_alias(token));
        if (!idx) throw InputError("unknown sentence '" + token + "' in logic '" + logic.name() + "'");
        ids.push_back(*idx);
    }
    return logic.base_from_ids(std::move(ids));
}

LogicPtr resolve_logic(const std::string& source) {
    if (source.empty()) throw InputError("a --logic source is required");
    if (source.rfind("builtin:", 0) == 0) return make_builtin_logic(source.substr(8));
    return load_logic_file(source);
}

OperatorPtr resolve_operator(const std::string& source, const LogicPtr& logic) {
    if (source.empty() || source == "builtin:full-meet") return make_full_meet(logic);
    if (source == "builtin:ex") return make_builtin_ex(logic);
    if (source.rfind("builtin:", 0) == 0)
        throw InputError("unknown builtin operator '" + source.substr(8) + "'");
    return load_operator_file(source, logic);
}

void enforce_cap(const Logic& logic, int max_classes) {
    if (logic.class_count() > max_classes)
        throw InputError("logic '" + logic.name() + "' has " + std::to_string(logic.class_count()) +
                         " semantic classes, above the cap of " + std::to_string(max_classes));
}

json envelope(std::string subject, json checks, bool exhaustive, json data) {
    json out{{"subject", std::move(subject)},
             {"checks", std::move(checks)},
             {"exhaustive", exhaustive}};
    if (!data.is_null()) out["data"] = std::move(data);
    return out;
}

bool checks_all_pass(const json& checks) {
    for (const auto& c : checks)
        if (c.at("verdict") == "fail") return false;
    return true;
}

void emit(const json& report, const RunConfig& config, std::ostream& out) {
    if (config.json_output) {
        out << report.dump(2) << "\n";
        return;
    }
    out << report.at("subject").get<std::string>() << "\n";
    for (const auto& c : report.at("checks")) {
        out << "  " << c.at("name").get<std::string>() << ": " << c.at("verdict").get<std::string>();
        if (!c.at("witnesses").empty()) out << "  witness " << c.at("witnesses").dump();
        out << "\n";
    }
    if (!report.at("exhaustive").get<bool>()) out << "  (sampled, not exhaustive)\n";
    if (report.contains("data")) out << report.at("data").dump(2) << "\n";
}

std::string relation_text(const Relation& rel) {
    const Logic& logic = *rel.logic();
    std::ostringstream strict, equiv, incomparable;
    for (int i = 0; i < rel.size(); ++i) {
        for (int j = 0; j < rel.size(); ++j) {
            if (i == j) continue;
            if (rel.strict(i, j)) strict << "  " << logic.world_name(i) << " < " << logic.world_name(j) << "\n";
            if (i < j) {
                if (rel.le(i, j) && rel.le(j, i))
                    equiv << "  " << logic.world_name(i) << " ~ " << logic.world_name(j) << "\n";
                if (!rel.le(i, j) && !rel.le(j, i))
                    incomparable << "  " << logic.world_name(i) << " ? " << logic.world_name(j) << "\n";
            }
        }
    }
    std::string out;
    if (!strict.str().empty()) out += "strict:\n" + strict.str();
    if (!equiv.str().empty()) out += "equivalent:\n" + equiv.str();
    if (!incomparable.str().empty()) out += "incomparable:\n" + incomparable.str();
    return out;
}

int cmd_info(const RunConfig& config, std::ostream& out) {
    LogicPtr logic = resolve_logic(config.logic_source);
    PropertyVerdict disj = is_disjunctive(*logic);
    json data{{"name", logic->name()},
              {"worldCount", logic->world_count()},
              {"sentenceCount", logic->sentence_count()},
              {"classCount", logic->class_count()},
              {"closureSize", static_cast<int>(logic->expressible_closure().size())},
              {"disjunctive", property_verdict_to_json(disj, *logic)}};
    json report = envelope("info: " + logic->name(), json::array(), true, std::move(data));
    if (config.json_output) {
        out << report.dump(2) << "\n";
    } else {
        out << "logic " << logic->name() << ": " << logic->world_count() << " worlds, "
            << logic->sentence_count() << " sentences, " << logic->class_count()
            << " semantic classes\n"
            << "disjunctive: " << (disj.holds ? "yes" : "no") << "\n";
        if (!disj.holds) {
            const auto& cls = logic->classes();
            out << "  non-expressible union of "
                << json(base_to_json(cls[disj.witness->classes[0]].canonical_base, *logic)).dump()
                << " and "
                << json(base_to_json(cls[disj.witness->classes[1]].canonical_base, *logic)).dump() << "\n";
        }
    }
    return 0;
}

AuditOptions options_from(const RunConfig& config) {
    AuditOptions opts;
    opts.seed = config.seed;
    opts.syntax_sensitive = config.syntax_sensitive;
    opts.max_classes = config.max_classes;
    return opts;
}

int cmd_audit(const RunConfig& config, std::ostream& out) {
    LogicPtr logic = resolve_logic(config.logic_source);
    OperatorPtr op = resolve_operator(config.operator_source, logic);
    AuditOptions opts = options_from(config);

    AuditReport postulates = check_postulates(op, opts);
    json checks = audit_report_to_json(postulates, *logic)["checks"];
    bool exhaustive = postulates.exhaustive;
    std::string subject = postulates.subject;

    if (!config.assignment_source.empty()) {
        Assignment assignment = load_assignment_file(config.assignment_source, logic);
        json faithful = audit_report_to_json(check_faithful(assignment, opts), *logic);
        json compat = audit_report_to_json(check_compatible(op, assignment, opts), *logic);
        for (auto& c : faithful["checks"]) checks.push_back(c);
        for (auto& c : compat["checks"]) checks.push_back(c);
        subject += " + assignment checks";
    }

    json report = envelope(std::move(subject), checks, exhaustive, json());
    emit(report, config, out);
    return checks_all_pass(checks) ? 0 : 1;
}

int cmd_extract(const RunConfig& config, std::ostream& out) {
    LogicPtr logic = resolve_logic(config.logic_source);
    enforce_cap(*logic, config.max_classes);
    OperatorPtr op = resolve_operator(config.operator_source, logic);
    if (!config.base_given) throw InputError("extract requires --base (may be empty for the empty base)");
    BeliefBase k = parse_base_arg(*logic, config.base);
    Relation rel = extract_relation(op, logic->class_of_base(k));

    json data{{"k", base_to_json(k, *logic)}, {"relation", relation_to_json(rel)}};
    json report = envelope("extract: " + op->name() + " @ " + logic->name(),
                           json::array(), true, std::move(data));
    if (config.json_output)
        out << report.dump(2) << "\n";
    else
        out << report.at("subject").get<std::string>() << "\n" << relation_text(rel);
    return 0;
}

int cmd_lift(const RunConfig& config, std::ostream& out) {
    LogicPtr logic = resolve_logic(config.logic_source);
    enforce_cap(*logic, config.max_classes);
    OperatorPtr op = resolve_operator(config.operator_source, logic);
    if (!config.base_given) throw InputError("lift requires --base (may be empty for the empty base)");
    BeliefBase k = parse_base_arg(*logic, config.base);
    auto result = preorder_lift(op, k);

    json checks = json::array();
    json data{{"k", base_to_json(k, *logic)}};
    bool ok = std::holds_alternative<Relation>(result);
    if (ok) {
        data["relation"] = relation_to_json(std::get<Relation>(result));
        checks.push_back(json{{"name", "lift"}, {"verdict", "pass"}, {"witnesses", json::array()}});
    } else {
        const LiftFailure& f = std::get<LiftFailure>(result);
        json witness;
        if (f.kind == LiftFailure::Kind::transitivity) {
            witness = json{{"kind", "transitivity"},
                           {"worlds", json::array({logic->world_name(f.worlds[0]),
                                                   logic->world_name(f.worlds[1]),
                                                   logic->world_name(f.worlds[2])})}};
        } else {
            witness = json{{"kind", "minPreservation"},
                           {"class", base_to_json(logic->classes()[f.class_index].canonical_base, *logic)}};
        }
        data["failure"] = witness;
        checks.push_back(json{{"name", "lift"}, {"verdict", "fail"}, {"witnesses", json::array({witness})}});
    }
    json report = envelope("lift: " + op->name() + " @ " + logic->name(), checks, true, std::move(data));
    if (config.json_output)
        out << report.dump(2) << "\n";
    else if (ok)
        out << report.at("subject").get<std::string>() << "\n"
            << relation_text(std::get<Relation>(result));
    else
        out << report.at("subject").get<std::string>() << "\nlift failed: "
            << data["failure"].dump() << "\n";
    return ok ? 0 : 1;
}

int cmd_loops(const RunConfig& config, std::ostream& out) {
    LogicPtr logic = resolve_logic(config.logic_source);
    enforce_cap(*logic, config.max_classes);
    LoopSearchResult result = find_critical_loops(logic, config.loop_limit);
    json loops = json::array();
    for (const auto& loop : result.loops) loops.push_back(critical_loop_to_json(loop, *logic));
    json data{{"count", result.total_count}, {"loops", std::move(loops)}};
    json report = envelope("loops: " + logic->name(), json::array(), true, std::move(data));
    if (config.json_output)
        out << report.dump(2) << "\n";
    else {
        out << result.total_count << " loops\n";
        for (const auto& loop : result.loops)
            out << critical_loop_to_json(loop, *logic).dump() << "\n";
    }
    return 0;
}

int cmd_represent(const RunConfig& config, std::ostream& out) {
    LogicPtr logic = resolve_logic(config.logic_source);
    OperatorPtr op = resolve_operator(config.operator_source, logic);
    AuditOptions opts = options_from(config);

    json checks = json::array();
    try {
        RepresentabilityVerdict verdict = representability(op, opts);
        checks.push_back(json{{"name", "postulates"}, {"verdict", "pass"}, {"witnesses", json::array()}});
        json data = representability_to_json(verdict, *logic);
        json report = envelope("represent: " + op->name() + " @ " + logic->name(), checks, true,
                               std::move(data));
        if (config.json_output)
            out << report.dump(2) << "\n";
        else
            out << report.at("subject").get<std::string>() << ": "
                << rep_status_name(verdict.status) << "\n"
                << report.at("data").dump(2) << "\n";
        return 0;
    } catch (const PostulateFailureError& e) {
        json failed = audit_report_to_json(e.report, *logic);
        json report = envelope("represent: " + op->name() + " @ " + logic->name(),
                               failed["checks"], e.report.exhaustive,
                               json{{"status", "postulatesFailed"}});
        emit(report, config, out);
        return 1;
    }
}

// Published example data used by the demo for side-by-side comparison.
// Row bit j of entry i: world i at-most world j in the reference listing.
constexpr std::uint64_t kReferenceListing[6] = {63, 38, 44, 42, 62, 32};

json demo_for_lex(const LogicPtr& logic, const AuditOptions& opts) {
    const Logic& lg = *logic;
    json section;
    section["classCount"] = lg.class_count();
    section["disjunctive"] = property_verdict_to_json(is_disjunctive(lg), lg);

    OperatorPtr ex = make_builtin_ex(logic);
    AuditReport audit = check_postulates(ex, opts);
    section["exAudit"] = audit_report_to_json(audit, lg);

    BeliefBase k = lg.base_from_names({"ψ0"});
    Relation extracted = extract_relation(ex, lg.class_of_base(k));
    section["extracted"] = relation_to_json(extracted);
    json diffs = json::array();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            bool computed = extracted.le(i, j);
            bool reference = (kReferenceListing[i] >> j) & 1;
            if (computed != reference)
                diffs.push_back(json{{"pair", json::array({lg.world_name(i), lg.world_name(j)})},
                                     {"computed", computed},
                                     {"reference", reference}});
        }
    section["listingDifferences"] = std::move(diffs);

    Assignment extracted_assignment = extract_assignment(ex);
    section["exCompatibleWithExtraction"] =
        audit_report_to_json(check_compatible(ex, extracted_assignment, opts), lg);

    // Reference loop triple (phi1, phi2, phi3) with the published witness
    // bases (psi2, psi3, psi4), adjudicated condition by condition.
    auto cls_of = [&](std::initializer_list<const char*> names) {
        std::vector<std::string> v(names.begin(), names.end());
        return lg.class_of_base(lg.base_from_names(v));
    };
    int g[3] = {cls_of({"φ1"}), cls_of({"φ2"}), cls_of({"φ3"})};
    int ref_p[3] = {cls_of({"ψ2"}), cls_of({"ψ3"}), cls_of({"ψ4"})};
    const auto& closure = lg.expressible_closure();
    ModelSet mg[3] = {closure[g[0]], closure[g[1]], closure[g[2]]};
    int kc = lg.class_of_base(k);

    json triple;
    bool cond1 = !closure[kc].intersects(mg[0]) && !closure[kc].intersects(mg[1]) &&
                 !closure[kc].intersects(mg[2]);
    triple["condition1"] = cond1;
    json cond2 = json::array();
    bool cond2_all = true;
    for (int i = 0; i < 3; ++i) {
        ModelSet region = (mg[i] & mg[(i + 1) % 3]) - mg[(i + 2) % 3];
        bool ok = !closure[ref_p[i]].empty() && closure[ref_p[i]].subset_of(region);
        cond2_all = cond2_all && ok;
        cond2.push_back(json{{"index", i},
                             {"requiredRegion", model_set_to_json(region, lg)},
                             {"referenceWitness", model_set_to_json(closure[ref_p[i]], lg)},
                             {"holds", ok}});
    }
    triple["condition2"] = std::move(cond2);
    triple["condition2All"] = cond2_all;
    section["referenceTriple"] = std::move(triple);

    LoopSearchResult loops = find_critical_loops(logic, 10);
    section["loopCount"] = loops.total_count;
    if (!loops.loops.empty()) {
        section["firstLoop"] = critical_loop_to_json(loops.loops.front(), lg);
        LoopData data = make_loop_data(logic, loops.loops.front().gamma_classes,
                                       loops.loops.front().gamma_prime_classes,
                                       loops.loops.front().k_class);
        json bprime = json::array();
        for (int b : data.b_prime)
            bprime.push_back(base_to_json(lg.classes()[b].canonical_base, lg));
        section["bPrime"] = std::move(bprime);
    }

    section["pipeline"] = pipeline_report_to_json(counterexample_pipeline(logic, opts), lg);
    return section;
}

int cmd_demo(const RunConfig& config, std::ostream& out) {
    AuditOptions opts = options_from(config);
    json data;
    json reference_matrix = json::array();
    for (int i = 0; i < 6; ++i) {
        json row = json::array();
        for (int j = 0; j < 6; ++j) row.push_back(static_cast<int>((kReferenceListing[i] >> j) & 1));
        reference_matrix.push_back(std::move(row));
    }
    data["referenceListing"] = std::move(reference_matrix);

    LogicPtr lex_paper = make_lex_paper();
    LogicPtr lex_core = make_lex_core();
    data["lex_paper"] = demo_for_lex(lex_paper, opts);
    data["lex_core"] = demo_for_lex(lex_core, opts);

    json notes = json::array();
    auto add_note = [&](const std::string& s) { notes.push_back(s); };
    {
        const json& paper = data["lex_paper"];
        if (!paper["listingDifferences"].empty())
            add_note("computed canonical relation differs from the reference listing at " +
                     std::to_string(paper["listingDifferences"].size()) +
                     " entries (reference lists them as strict; computation makes them equivalent)");
        bool ex_passes = true;
        for (const auto& c : paper["exAudit"]["checks"])
            if (c["verdict"] == "fail") {
                ex_passes = false;
                add_note("builtin:ex on lex_paper fails " + c["name"].get<std::string>() +
                         " (the reference claims it satisfies the postulates); witness " +
                         c["witnesses"].dump());
            }
        if (ex_passes) add_note("builtin:ex on lex_paper passes the audit");
        if (!paper["referenceTriple"]["condition2All"].get<bool>())
            add_note("the reference loop witness bases violate condition (2) as printed");
        add_note("lex_paper loop count: " + std::to_string(paper["loopCount"].get<int>()) +
                 " (the reference claims the triple forms a loop)");
    }
    {
        const json& core = data["lex_core"];
        bool ex_passes = true;
        for (const auto& c : core["exAudit"]["checks"])
            if (c["verdict"] == "fail") ex_passes = false;
        add_note(std::string("builtin:ex on lex_core ") +
                 (ex_passes ? "passes the full audit" : "fails the audit"));
        add_note("lex_core loop count: " + std::to_string(core["loopCount"].get<int>()));
        if (core.contains("bPrime"))
            add_note("computed B' on lex_core: " + core["bPrime"].dump() +
                     " (the reference states it would be {phi4})");
    }
    data["notes"] = std::move(notes);

    json report = envelope("demo: lex_paper / lex_core reproduction", json::array(), true,
                           std::move(data));
    if (config.json_output) {
        out << report.dump(2) << "\n";
    } else {
        out << report.at("subject").get<std::string>() << "\n";
        for (const auto& n : report["data"]["notes"]) out << "  - " << n.get<std::string>() << "\n";
        out << "(use --json for the full side-by-side data)\n";
    }
    return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.command == "info") return cmd_info(config, out);
        if (config.command == "audit") return cmd_audit(config, out);
        if (config.command == "extract") return cmd_extract(config, out);
        if (config.command == "lift") return cmd_lift(config, out);
        if (config.command == "loops") return cmd_loops(config, out);
        if (config.command == "represent") return cmd_represent(config, out);
        if (config.command == "demo") return cmd_demo(config, out);
        err << "unknown command '" << config.command << "'\n";
        return 2;
    } catch (const MinExpressibilityError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ContractError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace revlab
