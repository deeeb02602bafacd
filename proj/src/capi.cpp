#include "cybmw_c.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <variant>

#include "cybmw/json_io.hpp"
#include "cybmw/parallel.hpp"
#include "cybmw/specialize.hpp"
#include "cybmw/verify.hpp"
#include "cybmw/w2.hpp"

namespace {

using namespace cybmw;

thread_local std::string tl_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
int32_t guarded(Fn&& fn) noexcept {
  try {
    fn();
    tl_error.clear();
    return CYBMW_OK;
  } catch (const Error& e) {
    tl_error = e.what();
    return static_cast<int32_t>(e.code());
  } catch (const std::bad_alloc&) {
    tl_error = "out of memory";
    return CYBMW_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    tl_error = e.what();
    return CYBMW_INTERNAL_ERROR;
  } catch (...) {
    tl_error = "unknown error";
    return CYBMW_INTERNAL_ERROR;
  }
}

void require(bool cond, Code code, const char* msg) {
  if (!cond) throw Error(code, msg);
}

Json parse_json(const char* text, const char* what) {
  require(text != nullptr, Code::InvalidArgument, "null JSON input");
  Json j = Json::parse(std::string(text), nullptr, false);
  if (j.is_discarded()) throw Error(Code::Parse, std::string("malformed JSON in ") + what);
  return j;
}

void emit(char** out, const Json& j) { *out = dup_string(j.dump()); }

}  // namespace

struct cybmw_params {
  std::variant<Params<RatFunc>, Params<Rat>> value;

  template <class Fn>
  auto visit(Fn&& fn) const {
    return std::visit(std::forward<Fn>(fn), value);
  }
  int r() const {
    return visit([](const auto& p) { return p.r(); });
  }
  bool symbolic() const { return value.index() == 0; }
};

extern "C" {

int32_t cybmw_abi_version(void) { return 1; }

const char* cybmw_status_name(int32_t status) {
  return code_name(static_cast<Code>(status));
}

const char* cybmw_last_error_message(void) { return tl_error.c_str(); }

void cybmw_free(char* s) { std::free(s); }

int32_t cybmw_params_create(const char* params_json, cybmw_params** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(out != nullptr, Code::InvalidArgument, "null output pointer");
    ParamsSpec spec = params_spec_from_json(parse_json(params_json, "parameter file"));
    auto* h = new cybmw_params{spec.symbolic
                                   ? decltype(cybmw_params::value)(symbolic_params_from_spec(spec))
                                   : decltype(cybmw_params::value)(specialized_params_from_spec(spec))};
    *out = h;
  });
}

void cybmw_params_destroy(cybmw_params* p) { delete p; }

int32_t cybmw_params_check(const cybmw_params* p, int64_t window, char** report_json) {
  if (report_json) *report_json = nullptr;
  return guarded([&] {
    require(p != nullptr && report_json != nullptr, Code::InvalidArgument, "null argument");
    require(window >= 0 && window <= 16, Code::InvalidArgument, "window must be in 0..16");
    p->visit([&](const auto& params) {
      emit(report_json, admissibility_report_to_json(bounded_admissibility_report(params, window)));
    });
  });
}

int32_t cybmw_params_deltas(const cybmw_params* p, int64_t lo, int64_t hi, char** table_json) {
  if (table_json) *table_json = nullptr;
  return guarded([&] {
    require(p != nullptr && table_json != nullptr, Code::InvalidArgument, "null argument");
    require(lo <= hi && hi - lo <= 256, Code::InvalidArgument,
            "index range must be nonempty with at most 257 entries");
    require(-64 <= lo && hi <= 256, Code::InvalidArgument, "indices must lie in -64..256");
    if (p->symbolic() && p->r() >= 3)
      require(lo >= -2, Code::NotExpandable,
              "symbolic deltas below index -2 are not expandable for r >= 3; specialize first");
    p->visit([&](const auto& params) { emit(table_json, deltas_to_json(params, lo, hi)); });
  });
}

int32_t cybmw_tableaux_count(int32_t n, int32_t r, char** json) {
  if (json) *json = nullptr;
  return guarded([&] {
    require(json != nullptr, Code::InvalidArgument, "null output pointer");
    require(n >= 0 && n <= 16, Code::InvalidArgument, "n must be in 0..16");
    require(r >= 1 && r <= 16, Code::InvalidArgument, "r must be in 1..16");
    emit(json, tableaux_count_to_json(n, r));
  });
}

int32_t cybmw_tableaux_list(int32_t n, int32_t r, char** json) {
  if (json) *json = nullptr;
  return guarded([&] {
    require(json != nullptr, Code::InvalidArgument, "null output pointer");
    require(n >= 0 && n <= 6, Code::InvalidArgument, "n must be in 0..6 for listing");
    require(r >= 1 && r <= 6, Code::InvalidArgument, "r must be in 1..6 for listing");
    emit(json, tableaux_list_to_json(n, r));
  });
}

int32_t cybmw_weights_table(const cybmw_params* p, int32_t n, char** json) {
  if (json) *json = nullptr;
  return guarded([&] {
    require(p != nullptr && json != nullptr, Code::InvalidArgument, "null argument");
    require(n >= 0, Code::InvalidArgument, "n must be nonnegative");
    require(n <= (p->symbolic() ? 4 : 8), Code::InvalidArgument,
            "n too large for a weight table (symbolic: 4, specialized: 8)");
    p->visit([&](const auto& params) {
      emit(json, weight_table_to_json(weight_table(params, n), params.r()));
    });
  });
}

int32_t cybmw_w2_verify(const cybmw_params* p, int64_t moment_lo, int64_t moment_hi,
                        char** report_json) {
  if (report_json) *report_json = nullptr;
  return guarded([&] {
    require(p != nullptr && report_json != nullptr, Code::InvalidArgument, "null argument");
    require(moment_lo <= moment_hi && -16 <= moment_lo && moment_hi <= 16, Code::InvalidArgument,
            "moment window must be nonempty inside -16..16");
    if (p->symbolic() && p->r() >= 3)
      require(moment_lo >= -2, Code::NotExpandable,
              "symbolic moments below index -2 are not expandable for r >= 3; specialize first");
    p->visit([&](const auto& params) {
      std::vector<Check> cs = w2_verify(params, moment_lo, moment_hi);
      Json out;
      out["r"] = params.r();
      out["pass"] = all_pass(cs);
      out["checks"] = checks_to_json(cs);
      emit(report_json, out);
    });
  });
}

int32_t cybmw_w2_verify_randomized(int32_t r, int32_t trials, uint64_t seed,
                                   char** report_json) {
  if (report_json) *report_json = nullptr;
  return guarded([&] {
    require(report_json != nullptr, Code::InvalidArgument, "null output pointer");
    require(r >= 1 && r <= 16, Code::InvalidArgument, "r must be in 1..16");
    require(trials >= 1 && trials <= 10000, Code::InvalidArgument,
            "trials must be in 1..10000");
    Rng rng(seed);
    std::vector<Check> cs;
    for (int t = 0; t < trials; ++t) {
      Params<Rat> p = specialized_params<Rat>(r, sample_parameters<Rat>(rng, r));
      for (Check c : w2_verify(p)) {
        c.name = "trial#" + std::to_string(t) + "/" + c.name;
        cs.push_back(std::move(c));
      }
    }
    Json out;
    out["r"] = r;
    out["mode"] = "randomized";
    out["trials"] = trials;
    out["seed"] = seed;
    out["pass"] = all_pass(cs);
    out["checks"] = checks_to_json(cs);
    emit(report_json, out);
  });
}

int32_t cybmw_brauer_count(int32_t n, int32_t r, char** json) {
  if (json) *json = nullptr;
  return guarded([&] {
    require(json != nullptr, Code::InvalidArgument, "null output pointer");
    require(n >= 0 && n <= 64, Code::InvalidArgument, "n must be in 0..64");
    require(r >= 1 && r <= 64, Code::InvalidArgument, "r must be in 1..64");
    Int count = 1;
    for (int i = 0; i < n; ++i) count *= r * (2 * i + 1);
    Json out;
    out["n"] = n;
    out["r"] = r;
    out["count"] = count.str();
    emit(json, out);
  });
}

int32_t cybmw_brauer_mul(const char* diagram_a_json, const char* diagram_b_json, char** json) {
  if (json) *json = nullptr;
  return guarded([&] {
    require(json != nullptr, Code::InvalidArgument, "null output pointer");
    ZrBrauerDiagram a = diagram_from_json(parse_json(diagram_a_json, "first diagram"));
    ZrBrauerDiagram b = diagram_from_json(parse_json(diagram_b_json, "second diagram"));
    auto [loops, prod] = compose_diagrams(a, b);
    Json loop_obj = Json::object();
    std::string scalar;
    for (size_t t = 0; t < loops.size(); ++t) {
      loop_obj["th" + std::to_string(t)] = loops[t];
      if (loops[t] > 0) {
        if (!scalar.empty()) scalar += "*";
        scalar += "th" + std::to_string(t);
        if (loops[t] > 1) scalar += "^" + std::to_string(loops[t]);
      }
    }
    Json out;
    out["loops"] = std::move(loop_obj);
    out["scalar"] = scalar.empty() ? "1" : scalar;
    out["product"] = diagram_to_json(prod);
    emit(json, out);
  });
}

int32_t cybmw_brauer_gram(int32_t n, int32_t r, const char* theta_json, uint64_t seed,
                          char** json) {
  if (json) *json = nullptr;
  return guarded([&] {
    require(json != nullptr, Code::InvalidArgument, "null output pointer");
    require(n >= 1 && n <= 4, Code::InvalidArgument, "n must be in 1..4");
    require(r >= 1 && r <= 8, Code::InvalidArgument, "r must be in 1..8");
    Int count = 1;
    for (int i = 0; i < n; ++i) count *= r * (2 * i + 1);
    require(count <= 512, Code::InvalidArgument,
            "diagram basis larger than 512; reduce n or r");
    std::vector<Rat> thetas;
    if (theta_json != nullptr && *theta_json != '\0') {
      thetas = thetas_from_json(parse_json(theta_json, "theta file"), r);
    } else {
      Rng rng(seed);
      for (int j = 0; j < theta_count(r); ++j) thetas.push_back(rng.rational());
    }
    Matrix<Rat> g = gram_matrix(n, r, thetas, thread_cap());
    Rat det = g.determinant();
    Json th = Json::array();
    for (const Rat& t : thetas) th.push_back(k_str(t));
    Json out;
    out["n"] = n;
    out["r"] = r;
    out["size"] = static_cast<long long>(g.rows());
    out["theta"] = std::move(th);
    out["determinant"] = k_str(det);
    out["nonzero"] = det != 0;
    emit(json, out);
  });
}

int32_t cybmw_verify_all(const char* config_json, char** report_json) {
  if (report_json) *report_json = nullptr;
  return guarded([&] {
    require(report_json != nullptr, Code::InvalidArgument, "null output pointer");
    Json cfg_json = (config_json == nullptr || *config_json == '\0')
                        ? Json::object()
                        : parse_json(config_json, "verify config");
    VerifyConfig cfg = verify_config_from_json(cfg_json);
    emit(report_json, verify_report_to_json(verify_all(cfg)));
  });
}

}  // extern "C"
