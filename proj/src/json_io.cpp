#include "cybmw/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace cybmw {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(Code::Parse, msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string scalar_text(const Json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  bad(std::string(what) + " must be a string or integer");
}

}  // namespace

Rat rational_from_json(const Json& v) {
  std::string s = scalar_text(v, "rational value");
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.empty()) bad("empty rational value");
  try {
    Rat x(s);
    return x;
  } catch (const std::exception&) {
    bad("invalid rational \"" + s + "\"");
  }
}

std::string partition_str(const Partition& p) {
  std::string out = "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + "]";
}

// --- Parameter files ----------------------------------------------------------

ParamsSpec params_spec_from_json(const Json& j) {
  if (!j.is_object()) bad("parameter file must be a JSON object");
  ParamsSpec s;
  const Json& rv = field(j, "r");
  if (!rv.is_number_integer() || rv.get<long long>() < 1 || rv.get<long long>() > 64)
    bad("\"r\" must be an integer in 1..64");
  s.r = rv.get<int>();
  if (j.contains("mode")) {
    std::string m = field(j, "mode").get<std::string>();
    if (m == "symbolic")
      s.symbolic = true;
    else if (m == "specialized")
      s.symbolic = false;
    else
      bad("\"mode\" must be \"symbolic\" or \"specialized\"");
  }
  if (j.contains("rho")) s.rho = scalar_text(j.at("rho"), "\"rho\"");
  s.q = j.contains("q") ? scalar_text(j.at("q"), "\"q\"") : (s.symbolic ? "q" : "");
  if (s.q.empty()) bad("specialized mode requires an explicit \"q\"");
  if (j.contains("u")) {
    const Json& uv = j.at("u");
    if (!uv.is_array() || static_cast<int>(uv.size()) != s.r)
      bad("\"u\" must be an array of length r");
    for (const Json& e : uv) s.u.push_back(scalar_text(e, "\"u\" entry"));
  } else if (s.symbolic) {
    for (int i = 1; i <= s.r; ++i) s.u.push_back("u" + std::to_string(i));
  } else {
    bad("specialized mode requires an explicit \"u\" array");
  }
  if (j.contains("delta")) {
    const Json& dv = j.at("delta");
    if (!dv.is_object()) bad("\"delta\" must map indices to values");
    for (auto it = dv.begin(); it != dv.end(); ++it) {
      long a = 0;
      try {
        size_t used = 0;
        a = std::stol(it.key(), &used);
        if (used != it.key().size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        bad("delta override key \"" + it.key() + "\" is not an integer");
      }
      s.delta[a] = scalar_text(it.value(), "delta override");
    }
  }
  return s;
}

Json params_spec_to_json(const ParamsSpec& s) {
  Json out;
  out["r"] = s.r;
  out["mode"] = s.symbolic ? "symbolic" : "specialized";
  out["rho"] = s.rho;
  out["q"] = s.q;
  out["u"] = s.u;
  if (!s.delta.empty()) {
    Json d = Json::object();
    for (const auto& [a, expr] : s.delta) d[std::to_string(a)] = expr;
    out["delta"] = std::move(d);
  }
  return out;
}

Params<RatFunc> symbolic_params_from_spec(const ParamsSpec& s) {
  VarTablePtr vars = ground_vars(s.r);
  auto expr = [&](const std::string& text, const char* what) {
    try {
      return RatFunc::parse(vars, text);
    } catch (const Error&) {
      bad(std::string("invalid ") + what + " expression \"" + text + "\"");
    }
  };
  RatFunc q = expr(s.q, "q");
  std::vector<RatFunc> u;
  for (const std::string& e : s.u) u.push_back(expr(e, "u"));
  RatFunc rho = s.rho == "canonical" ? canonical_rho(s.r, q, u) : expr(s.rho, "rho");
  std::map<long, RatFunc> over;
  for (const auto& [a, text] : s.delta) over.emplace(a, expr(text, "delta"));
  return Params<RatFunc>(s.r, std::move(q), std::move(rho), std::move(u), std::move(over));
}

Params<Rat> specialized_params_from_spec(const ParamsSpec& s) {
  if (s.symbolic)
    throw Error(Code::InvalidArgument, "parameter file is symbolic, not specialized");
  Rat q = rational_from_json(Json(s.q));
  std::vector<Rat> u;
  for (const std::string& e : s.u) u.push_back(rational_from_json(Json(e)));
  Rat rho = s.rho == "canonical" ? canonical_rho(s.r, q, u) : rational_from_json(Json(s.rho));
  std::map<long, Rat> over;
  for (const auto& [a, text] : s.delta) over.emplace(a, rational_from_json(Json(text)));
  return Params<Rat>(s.r, std::move(q), std::move(rho), std::move(u), std::move(over));
}

// --- Checks and reports -------------------------------------------------------

Json check_to_json(const Check& c) {
  Json out;
  out["name"] = c.name;
  out["pass"] = c.pass;
  out["residual"] = c.residual;
  return out;
}

Json checks_to_json(const std::vector<Check>& cs) {
  Json arr = Json::array();
  for (const Check& c : cs) arr.push_back(check_to_json(c));
  return arr;
}

Json admissibility_report_to_json(const AdmissibilityReport& rep) {
  Json out;
  out["preconditions_ok"] = rep.preconditions_ok;
  if (!rep.precondition_message.empty()) out["precondition_message"] = rep.precondition_message;
  out["rho_canonical"] = rep.rho_canonical;
  out["weak"] = checks_to_json(rep.weak);
  out["relations"] = checks_to_json(rep.relations);
  out["ground"] = checks_to_json(rep.ground);
  out["weakly_admissible"] = rep.weakly_admissible;
  out["relations_pass"] = rep.relations_pass;
  out["u_admissible"] = rep.u_admissible;
  out["pass"] = rep.preconditions_ok && rep.weakly_admissible && rep.relations_pass &&
                rep.u_admissible;
  return out;
}

Json semisimple_report_to_json(const SemisimpleReport& rep) {
  Json out;
  out["ok"] = rep.ok;
  out["violations"] = rep.violations;
  return out;
}

VerifyConfig verify_config_from_json(const Json& j) {
  if (!j.is_object()) bad("verify config must be a JSON object");
  VerifyConfig cfg;
  auto get_int = [&](const char* key, int lo, int hi, int dflt) {
    if (!j.contains(key)) return dflt;
    const Json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < lo || v.get<long long>() > hi)
      bad(std::string("\"") + key + "\" must be an integer in " + std::to_string(lo) + ".." +
          std::to_string(hi));
    return v.get<int>();
  };
  cfg.r = get_int("r", 1, 64, cfg.r);
  cfg.n = get_int("n", 1, 64, cfg.n);
  cfg.trials = get_int("trials", 1, 100000, cfg.trials);
  if (j.contains("mode")) {
    std::string m = j.at("mode").get<std::string>();
    if (m == "symbolic")
      cfg.randomized = false;
    else if (m == "randomized")
      cfg.randomized = true;
    else
      bad("\"mode\" must be \"symbolic\" or \"randomized\"");
  }
  if (j.contains("seed")) {
    const Json& v = j.at("seed");
    if (!v.is_number_unsigned() && !v.is_number_integer()) bad("\"seed\" must be an integer");
    cfg.seed = v.get<uint64_t>();
  }
  return cfg;
}

Json verify_report_to_json(const VerifyReport& rep) {
  Json cfg;
  cfg["r"] = rep.config.r;
  cfg["n"] = rep.config.n;
  cfg["mode"] = rep.config.randomized ? "randomized" : "symbolic";
  if (rep.config.randomized) cfg["trials"] = rep.config.trials;
  cfg["seed"] = rep.config.seed;
  Json sections = Json::array();
  for (const VerifySection& s : rep.sections) {
    Json sec;
    sec["name"] = s.name;
    sec["pass"] = all_pass(s.checks);
    sec["checks"] = checks_to_json(s.checks);
    sections.push_back(std::move(sec));
  }
  Json out;
  out["config"] = std::move(cfg);
  out["sections"] = std::move(sections);
  out["pass"] = rep.pass;
  return out;
}

// --- Partitions, multipartitions, tableaux ------------------------------------

Json partition_to_json(const Partition& p) {
  Json arr = Json::array();
  for (int row : p) arr.push_back(row);
  return arr;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) bad("partition must be an array of row lengths");
  Partition p;
  for (const Json& e : j) {
    if (!e.is_number_integer()) bad("partition rows must be integers");
    p.push_back(e.get<int>());
  }
  if (!is_valid_partition(p)) bad("rows must be positive and weakly decreasing");
  return p;
}

Json multipartition_to_json(const Multipartition& m) {
  Json arr = Json::array();
  for (const Partition& p : m.comp) arr.push_back(partition_to_json(p));
  return arr;
}

Multipartition multipartition_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("multipartition must be a nonempty array of partitions");
  std::vector<Partition> comp;
  for (const Json& e : j) comp.push_back(partition_from_json(e));
  return Multipartition(std::move(comp));
}

Json tableau_to_json(const UpDownTableau& t) {
  Json arr = Json::array();
  for (const Multipartition& m : t.shapes) arr.push_back(multipartition_to_json(m));
  return arr;
}

UpDownTableau tableau_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("tableau must be a nonempty array of multipartitions");
  std::vector<Multipartition> shapes;
  for (const Json& e : j) shapes.push_back(multipartition_from_json(e));
  try {
    return UpDownTableau(std::move(shapes));
  } catch (const Error& e) {
    bad(std::string("invalid tableau: ") + e.what());
  }
}

Json tableaux_count_to_json(int n, int r) {
  Json by_shape = Json::object();
  long long total = 0;
  for (const auto& [shape, cnt] : count_tableaux_level(n, r)) {
    const long long c = cnt.convert_to<long long>();
    std::string key = r == 1 ? partition_str(shape.comp[0]) : shape.str();
    by_shape[key] = c;
    total += c;
  }
  Json out;
  out["total"] = total;
  out["by_shape"] = std::move(by_shape);
  return out;
}

Json tableaux_list_to_json(int n, int r) {
  Json arr = Json::array();
  for (const UpDownTableau& t : enumerate_tableaux(n, r)) arr.push_back(tableau_to_json(t));
  Json out;
  out["n"] = n;
  out["r"] = r;
  out["tableaux"] = std::move(arr);
  return out;
}

// --- Brauer diagrams and loop weights -----------------------------------------

namespace {

std::string endpoint_name(int e, int n) {
  return e < n ? "t" + std::to_string(e + 1) : "b" + std::to_string(e - n + 1);
}

int endpoint_index(const std::string& s, int n) {
  if (s.size() < 2 || (s[0] != 't' && s[0] != 'b')) bad("endpoint \"" + s + "\" must be t<i> or b<i>");
  int i = 0;
  try {
    size_t used = 0;
    i = std::stoi(s.substr(1), &used);
    if (used + 1 != s.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    bad("endpoint \"" + s + "\" must be t<i> or b<i>");
  }
  if (i < 1 || i > n) bad("endpoint \"" + s + "\" out of range for n");
  return s[0] == 't' ? i - 1 : n + i - 1;
}

}  // namespace

Json diagram_to_json(const ZrBrauerDiagram& d) {
  Json strands = Json::array();
  for (const auto& [from, to, label] : d.strands()) {
    Json s;
    s["ends"] = Json::array({endpoint_name(from, d.n()), endpoint_name(to, d.n())});
    s["label"] = label;
    strands.push_back(std::move(s));
  }
  Json out;
  out["n"] = d.n();
  out["r"] = d.r();
  out["strands"] = std::move(strands);
  return out;
}

ZrBrauerDiagram diagram_from_json(const Json& j) {
  const Json& nv = field(j, "n");
  const Json& rv = field(j, "r");
  if (!nv.is_number_integer() || !rv.is_number_integer()) bad("\"n\" and \"r\" must be integers");
  const int n = nv.get<int>();
  const int r = rv.get<int>();
  const Json& sv = field(j, "strands");
  if (!sv.is_array()) bad("\"strands\" must be an array");
  std::vector<std::pair<int, int>> pairs;
  std::vector<long> labels;
  for (const Json& s : sv) {
    const Json& ends = field(s, "ends");
    if (!ends.is_array() || ends.size() != 2 || !ends[0].is_string() || !ends[1].is_string())
      bad("\"ends\" must be a pair of endpoint names");
    pairs.emplace_back(endpoint_index(ends[0].get<std::string>(), n),
                       endpoint_index(ends[1].get<std::string>(), n));
    long label = 0;
    if (s.contains("label")) {
      if (!s.at("label").is_number_integer()) bad("\"label\" must be an integer");
      label = s.at("label").get<long>();
    }
    labels.push_back(label);
  }
  try {
    return ZrBrauerDiagram(n, r, pairs, labels);
  } catch (const Error& e) {
    bad(std::string("invalid diagram: ") + e.what());
  }
}

std::vector<Rat> thetas_from_json(const Json& j, int r) {
  const Json& rv = field(j, "r");
  if (!rv.is_number_integer() || rv.get<int>() != r)
    bad("theta file \"r\" does not match the requested r");
  const Json& tv = field(j, "theta");
  if (!tv.is_array() || static_cast<int>(tv.size()) != theta_count(r))
    bad("\"theta\" must list " + std::to_string(theta_count(r)) + " values for r = " +
        std::to_string(r));
  std::vector<Rat> out;
  for (const Json& e : tv) out.push_back(rational_from_json(e));
  if (out[0] == 0) bad("theta_0 must be nonzero");
  return out;
}

}  // namespace cybmw
