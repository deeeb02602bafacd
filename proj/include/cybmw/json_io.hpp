#pragma once

// JSON encoding/decoding for the public payload formats: parameter files,
// partitions and tableaux, delta tables, weight tables, check reports,
// labelled Brauer diagrams, and loop-weight (theta) files.

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "cybmw/brauer.hpp"
#include "cybmw/ground.hpp"
#include "cybmw/multipartition.hpp"
#include "cybmw/verify.hpp"
#include "cybmw/weights.hpp"

namespace cybmw {

using Json = nlohmann::json;

// --- Scalars ------------------------------------------------------------------

// Exact rational from a JSON value: integer, or string "a/b" / "-7".
Rat rational_from_json(const Json& v);

std::string partition_str(const Partition& p);

// --- Parameter files ----------------------------------------------------------

// Parsed form of a parameter file:
//   {"r": 2, "mode": "symbolic" | "specialized",
//    "rho": "canonical" | <expression / rational>,
//    "q": <expression / rational>, "u": [<expression / rational>, ...],
//    "delta": {"1": <expression / rational>, ...}}   (optional overrides)
// In symbolic mode every entry is an expression in q, u1..ur; in specialized
// mode every entry must be an exact rational.  Omitted fields default to the
// generic choice: q = "q", u = ["u1", ...], rho = "canonical".
struct ParamsSpec {
  int r = 0;
  bool symbolic = true;
  std::string rho = "canonical";
  std::string q;
  std::vector<std::string> u;
  std::map<long, std::string> delta;
};

ParamsSpec params_spec_from_json(const Json& j);
Json params_spec_to_json(const ParamsSpec& s);

Params<RatFunc> symbolic_params_from_spec(const ParamsSpec& s);
Params<Rat> specialized_params_from_spec(const ParamsSpec& s);

// --- Checks and reports -------------------------------------------------------

Json check_to_json(const Check& c);
Json checks_to_json(const std::vector<Check>& cs);
Json admissibility_report_to_json(const AdmissibilityReport& rep);
Json semisimple_report_to_json(const SemisimpleReport& rep);

VerifyConfig verify_config_from_json(const Json& j);
Json verify_report_to_json(const VerifyReport& rep);

// --- Partitions, multipartitions, tableaux ------------------------------------

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);
Json multipartition_to_json(const Multipartition& m);
Multipartition multipartition_from_json(const Json& j);
Json tableau_to_json(const UpDownTableau& t);
UpDownTableau tableau_from_json(const Json& j);

// {"total": N, "by_shape": {"[[2],[]]": k, ...}}; single-component shapes are
// keyed by the bare partition, e.g. "[2,1]".
Json tableaux_count_to_json(int n, int r);
Json tableaux_list_to_json(int n, int r);

// --- Delta and weight tables --------------------------------------------------

template <class K>
Json deltas_to_json(const Params<K>& p, long lo, long hi) {
  if (lo > hi) throw Error(Code::InvalidArgument, "empty delta index range");
  Json arr = Json::array();
  for (long a = lo; a <= hi; ++a) {
    Json e;
    e["a"] = a;
    e["source"] = delta_source_name(p.delta_source(a));
    e["value"] = k_str(p.delta(a));
    arr.push_back(std::move(e));
  }
  Json out;
  out["r"] = p.r();
  out["deltas"] = std::move(arr);
  return out;
}

template <class K>
Json weight_table_to_json(const WeightTable<K>& t, int r) {
  Json entries = Json::object();
  for (const auto& [shape, w] : t.entries) {
    std::string key = r == 1 ? partition_str(shape.comp[0]) : shape.str();
    entries[key] = k_str(w);
  }
  Json out;
  out["n"] = t.n;
  out["entries"] = std::move(entries);
  return out;
}

// --- Brauer diagrams and loop weights -----------------------------------------

Json diagram_to_json(const ZrBrauerDiagram& d);
ZrBrauerDiagram diagram_from_json(const Json& j);

// Theta file: {"r": 3, "theta": ["2", "-1/3"]} with theta_count(r) entries.
std::vector<Rat> thetas_from_json(const Json& j, int r);

}  // namespace cybmw
