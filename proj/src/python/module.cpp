#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "revlab/cli.hpp"
#include "revlab/io.hpp"

namespace py = pybind11;
using namespace revlab;

namespace {

struct PyLogic {
    LogicPtr ptr;
};

struct PyOperator {
    OperatorPtr ptr;
};

py::object json_to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

BeliefBase base_of(const PyLogic& logic, const std::vector<std::string>& names) {
    return logic.ptr->base_from_names(names);
}

std::vector<std::string> world_list(const Logic& logic, ModelSet m) {
    std::vector<std::string> out;
    for (int w : m.members(logic.world_count())) out.push_back(logic.world_name(w));
    return out;
}

Relation relation_of(const PyLogic& logic, const std::vector<std::vector<int>>& matrix) {
    std::vector<std::uint64_t> rows;
    for (const auto& row : matrix) {
        if (static_cast<int>(row.size()) != logic.ptr->world_count())
            throw InputError("matrix must be square in the logic's world count");
        std::uint64_t bits = 0;
        for (std::size_t c = 0; c < row.size(); ++c)
            if (row[c]) bits |= std::uint64_t{1} << c;
        rows.push_back(bits);
    }
    return Relation(logic.ptr, std::move(rows));
}

std::vector<std::vector<int>> matrix_of(const Relation& rel) {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < rel.size(); ++i) {
        std::vector<int> row;
        for (int j = 0; j < rel.size(); ++j) row.push_back(rel.le(i, j) ? 1 : 0);
        out.push_back(std::move(row));
    }
    return out;
}

AuditOptions options(std::uint64_t seed, bool syntax_sensitive) {
    AuditOptions opts;
    opts.seed = seed;
    opts.syntax_sensitive = syntax_sensitive;
    return opts;
}

}  // namespace

PYBIND11_MODULE(revlab, m) {
    m.doc() = "audit laboratory for base-change operators over finite extensional logics";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ContractError>(m, "ContractError", PyExc_RuntimeError);
    py::register_exception<MinExpressibilityError>(m, "MinExpressibilityError", PyExc_ValueError);
    py::register_exception<PostulateFailureError>(m, "PostulateFailureError", PyExc_RuntimeError);

    py::class_<PyLogic>(m, "Logic")
        .def_property_readonly("name", [](const PyLogic& l) { return l.ptr->name(); })
        .def("worlds", [](const PyLogic& l) { return l.ptr->world_names(); })
        .def("sentences", [](const PyLogic& l) { return l.ptr->sentence_names(); })
        .def("models_of",
             [](const PyLogic& l, const std::vector<std::string>& base) {
                 return world_list(*l.ptr, l.ptr->models_of(base_of(l, base)));
             })
        .def("entails",
             [](const PyLogic& l, const std::vector<std::string>& k1, const std::vector<std::string>& k2) {
                 return l.ptr->entails(base_of(l, k1), base_of(l, k2));
             })
        .def("equivalent",
             [](const PyLogic& l, const std::vector<std::string>& k1, const std::vector<std::string>& k2) {
                 return l.ptr->equivalent(base_of(l, k1), base_of(l, k2));
             })
        .def("consistent",
             [](const PyLogic& l, const std::vector<std::string>& base) {
                 return l.ptr->is_consistent(base_of(l, base));
             })
        .def("class_count", [](const PyLogic& l) { return l.ptr->class_count(); })
        .def("classes", [](const PyLogic& l) {
            py::list out;
            for (const auto& c : l.ptr->classes()) {
                py::dict d;
                d["models"] = world_list(*l.ptr, c.models);
                d["base"] = l.ptr->base_names(c.canonical_base);
                out.append(d);
            }
            return out;
        });

    py::class_<PyOperator>(m, "Operator")
        .def_property_readonly("name", [](const PyOperator& o) { return o.ptr->name(); })
        .def("apply",
             [](const PyOperator& o, const std::vector<std::string>& k, const std::vector<std::string>& g) {
                 const auto& logic = *o.ptr->logic();
                 return logic.base_names(o.ptr->apply(logic.base_from_names(k), logic.base_from_names(g)));
             })
        .def("output_models",
             [](const PyOperator& o, const std::vector<std::string>& k, const std::vector<std::string>& g) {
                 const auto& logic = *o.ptr->logic();
                 int kc = logic.class_of_base(logic.base_from_names(k));
                 int gc = logic.class_of_base(logic.base_from_names(g));
                 return world_list(logic, o.ptr->output_models(kc, gc));
             });

    m.def("builtin_logic", [](const std::string& name) { return PyLogic{make_builtin_logic(name)}; });
    m.def("load_logic", [](const std::string& text) {
        return PyLogic{parse_logic_json(json::parse(text))};
    });

    m.def("full_meet", [](const PyLogic& l) { return PyOperator{make_full_meet(l.ptr)}; });
    m.def("builtin_ex", [](const PyLogic& l) { return PyOperator{make_builtin_ex(l.ptr)}; });
    m.def("load_operator", [](const PyLogic& l, const std::string& text) {
        return PyOperator{parse_operator_json(json::parse(text), l.ptr)};
    });

    m.def(
        "check_postulates",
        [](const PyOperator& op, std::uint64_t seed, bool syntax_sensitive) {
            return json_to_py(audit_report_to_json(check_postulates(op.ptr, options(seed, syntax_sensitive)),
                                                   *op.ptr->logic()));
        },
        py::arg("op"), py::arg("seed") = 0, py::arg("syntax_sensitive") = false);

    m.def("extract_relation", [](const PyOperator& op, const std::vector<std::string>& k) {
        const auto& logic = *op.ptr->logic();
        return matrix_of(extract_relation(op.ptr, logic.class_of_base(logic.base_from_names(k))));
    });

    m.def("detached_pairs", [](const PyOperator& op, const std::vector<std::string>& k) {
        const auto& logic = *op.ptr->logic();
        std::vector<std::pair<std::string, std::string>> out;
        for (auto [i, j] : detached_pairs(op.ptr, logic.base_from_names(k)))
            out.emplace_back(logic.world_name(i), logic.world_name(j));
        return out;
    });

    m.def("preorder_lift", [](const PyOperator& op, const std::vector<std::string>& k) {
        const auto& logic = *op.ptr->logic();
        auto result = preorder_lift(op.ptr, logic.base_from_names(k));
        py::dict out;
        if (std::holds_alternative<Relation>(result)) {
            out["ok"] = true;
            out["matrix"] = matrix_of(std::get<Relation>(result));
        } else {
            const auto& f = std::get<LiftFailure>(result);
            out["ok"] = false;
            out["kind"] = f.kind == LiftFailure::Kind::transitivity ? "transitivity" : "minPreservation";
        }
        return out;
    });

    m.def(
        "representability",
        [](const PyOperator& op, std::uint64_t seed) {
            return json_to_py(representability_to_json(representability(op.ptr, options(seed, false)),
                                                       *op.ptr->logic()));
        },
        py::arg("op"), py::arg("seed") = 0);

    m.def(
        "find_critical_loops",
        [](const PyLogic& l, int limit) {
            LoopSearchResult result = find_critical_loops(l.ptr, limit);
            py::dict out;
            out["count"] = result.total_count;
            py::list loops;
            for (const auto& loop : result.loops)
                loops.append(json_to_py(critical_loop_to_json(loop, *l.ptr)));
            out["loops"] = loops;
            return out;
        },
        py::arg("logic"), py::arg("limit") = 10);

    m.def("is_disjunctive", [](const PyLogic& l) {
        return json_to_py(property_verdict_to_json(is_disjunctive(*l.ptr), *l.ptr));
    });

    m.def("counterexample_pipeline", [](const PyLogic& l) {
        return json_to_py(pipeline_report_to_json(counterexample_pipeline(l.ptr), *l.ptr));
    });

    m.def("order_extend", [](const PyLogic& l, const std::vector<std::vector<int>>& matrix) {
        return matrix_of(order_extend(relation_of(l, matrix)));
    });

    m.def("min_set", [](const PyLogic& l, const std::vector<std::vector<int>>& matrix,
                        const std::vector<std::string>& subset) {
        ModelSet s;
        for (const auto& w : subset) {
            auto idx = l.ptr->world_index(w);
            if (!idx) throw InputError("unknown world '" + w + "'");
            s = s.with(*idx);
        }
        return world_list(*l.ptr, min_set(relation_of(l, matrix), s));
    });

    m.def("relation_properties", [](const PyLogic& l, const std::vector<std::vector<int>>& matrix) {
        Relation rel = relation_of(l, matrix);
        py::dict out;
        out["total"] = is_total(rel).holds;
        out["reflexive"] = is_reflexive(rel).holds;
        out["transitive"] = is_transitive(rel).holds;
        out["preorder"] = is_preorder(rel).holds;
        out["minRetractive"] = is_min_retractive(rel).holds;
        out["minComplete"] = is_min_complete(rel).holds;
        out["minExpressible"] = is_min_expressible(rel).holds;
        return out;
    });

    m.def(
        "run_demo",
        [](std::uint64_t seed) {
            RunConfig config;
            config.command = "demo";
            config.json_output = true;
            config.seed = seed;
            std::ostringstream out, err;
            int code = run(config, out, err);
            if (code != 0) throw ContractError("demo failed: " + err.str());
            return out.str();
        },
        py::arg("seed") = 0);
}
