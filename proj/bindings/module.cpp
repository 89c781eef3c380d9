// Python bindings for the core operations: parsing, model loading and
// validation, satisfaction and truth sets, frame-condition reports,
// normalization, the share pipeline, derivation checking, and bounded search.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "simpsec/checker.hpp"
#include "simpsec/fixtures.hpp"
#include "simpsec/json_io.hpp"
#include "simpsec/search.hpp"
#include "simpsec/share.hpp"

namespace py = pybind11;
using namespace simpsec;

namespace {

Formula as_formula(const std::string& text) { return parse_formula(text); }

py::dict violation_dict(const SNViolation& v) {
    py::dict d;
    d["vertex"] = v.vertex;
    d["event"] = v.event;
    d["facet"] = v.facet;
    d["blocked_agent"] = v.blocked_agent;
    return d;
}

py::dict witness_dict(const SNWitness& w) {
    py::dict d;
    d["vertex"] = w.vertex;
    d["event"] = w.event;
    d["facet"] = w.facet;
    d["agent"] = w.agent;
    d["witness"] = w.witness;
    return d;
}

SearchBounds bounds_from_args(int agents, int states,
                              const std::vector<std::string>& atoms,
                              int max_events, std::uint64_t cap) {
    SearchBounds b;
    b.agents = agents;
    b.states = states;
    b.atoms = atoms;
    b.max_events = max_events;
    b.cap = cap;
    return b;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "secrecy over chromatic simplicial models: checking, proofs, "
              "shares, and bounded search";

    py::register_exception<Error>(m, "ToolkitError");

    py::class_<Formula>(m, "Formula")
        .def_static("parse", &as_formula, py::arg("text"))
        .def("__str__", &print_formula)
        .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
        .def("__hash__", [](const Formula& f) { return f.hash(); })
        .def("agents", &Formula::agents)
        .def("atoms", &Formula::atoms)
        .def("desugar", [](const Formula& f) { return desugar(f); })
        .def("subformulas", [](const Formula& f) { return subformulas(f); });

    m.def("parse_formula", &as_formula, py::arg("text"));
    m.def("print_formula", &print_formula, py::arg("formula"));
    m.def("propositional_tautology", &propositional_tautology, py::arg("formula"),
          py::arg("max_vars") = 16);

    py::class_<SecrecyModel>(m, "Model")
        .def_static("load_file",
                    [](const std::string& path) { return load_model_file(path); })
        .def_static("load_json",
                    [](const std::string& text) { return load_model_string(text); })
        .def("to_json",
             [](const SecrecyModel& m) { return canonical_dump(model_to_json(m)); })
        .def("agents",
             [](const SecrecyModel& m) { return m.complex().real_agents(); })
        .def("facets",
             [](const SecrecyModel& m) {
                 std::vector<std::string> keys;
                 for (std::size_t f = 0; f < m.complex().facet_count(); ++f)
                     keys.push_back(m.complex().facet_key(static_cast<int>(f)));
                 return keys;
             })
        .def("atoms", [](const SecrecyModel& m) { return m.atom_names(); })
        .def("satisfies",
             [](const SecrecyModel& m, const std::string& facet,
                const std::string& formula) {
                 return satisfies(m, facet, parse_formula(formula));
             },
             py::arg("facet"), py::arg("formula"))
        .def("truth_set",
             [](const SecrecyModel& m, const std::string& formula) {
                 return truth_set_keys(m, parse_formula(formula));
             },
             py::arg("formula"))
        .def("valid_on",
             [](const SecrecyModel& m, const std::string& formula) {
                 return valid_on(m, parse_formula(formula));
             },
             py::arg("formula"))
        .def("sn_violations",
             [](const SecrecyModel& m) {
                 py::list out;
                 for (const auto& v : check_sn(m)) out.append(violation_dict(v));
                 return out;
             })
        .def("sn_witnesses",
             [](const SecrecyModel& m) {
                 py::list out;
                 for (const auto& w : sn_witnesses(m)) out.append(witness_dict(w));
                 return out;
             })
        .def("normalized",
             [](const SecrecyModel& m) { return m.normalize_owner_local(); });

    m.def("share_expand",
          [](const SecrecyModel& model, int modulus,
             const std::vector<std::string>& pool) {
              AuxModel aux = model.complex().has_aux_colour() ? AuxModel::wrap(model)
                                                              : to_aux(model);
              if (modulus == 0)
                  modulus = static_cast<int>(aux.model().complex().facet_count());
              ShareModel sh = build_share_model(aux, modulus);
              std::vector<Formula> formulas;
              for (const auto& text : pool) formulas.push_back(parse_formula(text));
              RepresentationReport rep = check_representation(aux, sh, formulas);
              py::dict out;
              out["share_model"] = canonical_dump(model_to_json(sh.model()));
              out["modulus"] = sh.modulus();
              out["facets"] = sh.model().complex().facet_count();
              out["checks"] = rep.checks;
              py::list bad;
              for (const auto& d : rep.disagreements) {
                  py::dict item;
                  item["share_facet"] = d.share_facet;
                  item["formula"] = d.formula;
                  bad.append(item);
              }
              out["disagreements"] = bad;
              return out;
          },
          py::arg("model"), py::arg("modulus") = 0,
          py::arg("pool") = std::vector<std::string>{});

    m.def("check_derivation_json", [](const std::string& text) {
        Derivation d = load_derivation_string(text);
        auto err = check_derivation(d);
        py::dict out;
        out["name"] = d.name;
        out["ok"] = !err.has_value();
        if (err) {
            out["index"] = err->index;
            out["reason"] = to_string(err->reason);
            out["detail"] = err->detail;
        }
        return out;
    });

    m.def("fixture_derivations", []() {
        py::list out;
        for (const Derivation& d : fixture_library())
            out.append(canonical_dump(derivation_to_json(d)));
        return out;
    });

    m.def("default_pool", &default_pool);

    m.def("random_model",
          [](std::uint64_t seed, int agents, int states,
             const std::vector<std::string>& atoms, int max_events) {
              return random_model(seed, bounds_from_args(agents, states, atoms,
                                                         max_events, 10'000'000));
          },
          py::arg("seed") = 0, py::arg("agents") = 2, py::arg("states") = 3,
          py::arg("atoms") = std::vector<std::string>{"p", "r"},
          py::arg("max_events") = 2);

    m.def("check_validity_bounded",
          [](const std::string& formula, int agents, int states,
             const std::vector<std::string>& atoms, int max_events,
             std::uint64_t cap) {
              SearchResult r = check_validity_bounded(
                  parse_formula(formula),
                  bounds_from_args(agents, states, atoms, max_events, cap));
              py::dict out;
              out["valid"] = r.valid;
              out["models_examined"] = r.models_examined;
              out["elapsed_seconds"] = r.elapsed_seconds;
              if (!r.valid) {
                  out["facet"] = r.facet;
                  out["countermodel"] = canonical_dump(model_to_json(*r.countermodel));
              }
              return out;
          },
          py::arg("formula"), py::arg("agents") = 2, py::arg("states") = 3,
          py::arg("atoms") = std::vector<std::string>{"p", "r"},
          py::arg("max_events") = 2, py::arg("cap") = 10'000'000);
}
