// Command-line front end.  All computation goes through the shared-library C
// interface; this translation unit only parses arguments, loads files, and
// renders the returned JSON as json / tsv / pretty text.
//
// Exit codes: 0 = success (all checks passed, if any); 1 = a verification
// check failed; 2 = usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cybmw_c.h"

namespace {

using Json = nlohmann::json;

struct UsageError {
  std::string message;
};

// Nonzero library status with its thread-local description.
struct ApiError {
  int32_t status;
  std::string message;
};

void check_status(int32_t status) {
  if (status != CYBMW_OK) throw ApiError{status, cybmw_last_error_message()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  cybmw_free(s);
  return out;
}

std::string load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot open \"" + path + "\""};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_or_die(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw UsageError{"malformed JSON in " + what};
  return j;
}

struct ParamsHandle {
  cybmw_params* p = nullptr;
  ParamsHandle() = default;
  ParamsHandle(const ParamsHandle&) = delete;
  ParamsHandle& operator=(const ParamsHandle&) = delete;
  ~ParamsHandle() { cybmw_params_destroy(p); }
};

// Parameter sources: an explicit file wins; otherwise generic symbolic
// parameters of rank r.  A file must agree with --r when both are given.
struct ParamsArgs {
  int r = 2;
  bool r_given = false;
  std::string spec_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--r", r, "number of cyclotomic parameters u1..ur")
        ->check(CLI::Range(1, 64));
    cmd->add_option("--spec", spec_path, "parameter file (JSON)");
  }

  std::string params_json(CLI::App* cmd) {
    r_given = cmd->count("--r") > 0;
    if (spec_path.empty()) {
      Json j;
      j["r"] = r;
      j["mode"] = "symbolic";
      return j.dump();
    }
    std::string text = load_file(spec_path);
    Json j = parse_or_die(text, spec_path);
    if (r_given && (!j.contains("r") || !j["r"].is_number_integer() || j["r"].get<int>() != r))
      throw UsageError{"--r disagrees with \"r\" in " + spec_path};
    if (j.contains("r") && j["r"].is_number_integer()) r = j["r"].get<int>();
    return text;
  }

  bool symbolic_spec() const {
    return spec_path.empty();  // callers re-check the file's mode if present
  }
};

// --- Rendering ----------------------------------------------------------------

void print_raw(const std::string& json_text) { std::cout << json_text << "\n"; }

std::string yesno(bool b) { return b ? "pass" : "FAIL"; }

void print_check_rows_tsv(const std::string& family, const Json& checks) {
  for (const Json& c : checks)
    std::cout << family << "\t" << c.at("name").get<std::string>() << "\t"
              << (c.at("pass").get<bool>() ? "pass" : "fail") << "\t"
              << c.at("residual").get<std::string>() << "\n";
}

int print_check_rows_pretty(const Json& checks, const std::string& indent) {
  int failures = 0;
  for (const Json& c : checks) {
    bool ok = c.at("pass").get<bool>();
    if (!ok) ++failures;
    std::cout << indent << (ok ? "pass  " : "FAIL  ") << c.at("name").get<std::string>();
    if (!ok) std::cout << "   residual = " << c.at("residual").get<std::string>();
    std::cout << "\n";
  }
  return failures;
}

// Admissibility report: {"weak":[...], "relations":[...], "ground":[...], ...}.
void render_params_report(const Json& rep, const std::string& format) {
  if (format == "tsv") {
    print_check_rows_tsv("weak", rep.at("weak"));
    print_check_rows_tsv("relations", rep.at("relations"));
    print_check_rows_tsv("ground", rep.at("ground"));
    std::cout << "summary\tpass\t" << (rep.at("pass").get<bool>() ? "pass" : "fail") << "\t\n";
    return;
  }
  std::cout << "preconditions: " << yesno(rep.at("preconditions_ok").get<bool>());
  if (rep.contains("precondition_message"))
    std::cout << "   " << rep.at("precondition_message").get<std::string>();
  std::cout << "\n";
  std::cout << "canonical twist: " << (rep.at("rho_canonical").get<bool>() ? "yes" : "no") << "\n";
  for (const char* fam : {"weak", "relations", "ground"}) {
    std::cout << fam << ":\n";
    print_check_rows_pretty(rep.at(fam), "  ");
  }
  std::cout << "weakly admissible: " << yesno(rep.at("weakly_admissible").get<bool>()) << "\n";
  std::cout << "relation family:   " << yesno(rep.at("relations_pass").get<bool>()) << "\n";
  std::cout << "u-admissible:      " << yesno(rep.at("u_admissible").get<bool>()) << "\n";
  std::cout << "overall: " << yesno(rep.at("pass").get<bool>()) << "\n";
}

// Flat check report: {"pass": ..., "checks": [...]}.
void render_flat_report(const Json& rep, const std::string& format) {
  if (format == "tsv") {
    print_check_rows_tsv("w2", rep.at("checks"));
    std::cout << "summary\tpass\t" << (rep.at("pass").get<bool>() ? "pass" : "fail") << "\t\n";
    return;
  }
  print_check_rows_pretty(rep.at("checks"), "");
  std::cout << "overall: " << yesno(rep.at("pass").get<bool>()) << "\n";
}

void render_verify_report(const Json& rep, const std::string& format) {
  if (format == "tsv") {
    for (const Json& sec : rep.at("sections"))
      print_check_rows_tsv(sec.at("name").get<std::string>(), sec.at("checks"));
    std::cout << "summary\tpass\t" << (rep.at("pass").get<bool>() ? "pass" : "fail") << "\t\n";
    return;
  }
  for (const Json& sec : rep.at("sections")) {
    const Json& checks = sec.at("checks");
    std::cout << "section " << sec.at("name").get<std::string>() << ": ";
    int failures = 0;
    for (const Json& c : checks)
      if (!c.at("pass").get<bool>()) ++failures;
    std::cout << (checks.size() - static_cast<size_t>(failures)) << "/" << checks.size()
              << " passed\n";
    if (failures) print_check_rows_pretty(checks, "  ");
  }
  std::cout << "overall: " << yesno(rep.at("pass").get<bool>()) << "\n";
}

void render_deltas(const Json& table, const std::string& format) {
  if (format == "tsv") {
    for (const Json& e : table.at("deltas"))
      std::cout << e.at("a").get<long long>() << "\t" << e.at("source").get<std::string>() << "\t"
                << e.at("value").get<std::string>() << "\n";
    return;
  }
  for (const Json& e : table.at("deltas"))
    std::cout << "delta(" << e.at("a").get<long long>()
              << ") = " << e.at("value").get<std::string>() << "   ["
              << e.at("source").get<std::string>() << "]\n";
}

// Rows of '#' for one partition; a multipartition renders its components
// separated by '|'.  The shape key is itself JSON ([2,1] or [[2],[1]]).
std::vector<std::string> diagram_lines(const Json& shape) {
  std::vector<std::vector<int>> comps;
  if (!shape.is_array()) return {};
  if (shape.empty() || shape[0].is_number_integer()) {
    comps.push_back(shape.get<std::vector<int>>());
  } else {
    for (const Json& c : shape) comps.push_back(c.get<std::vector<int>>());
  }
  size_t height = 1;
  for (const auto& c : comps) height = std::max(height, c.size());
  std::vector<std::string> lines(height);
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    size_t width = comps[ci].empty() ? 1 : static_cast<size_t>(comps[ci][0]);
    for (size_t row = 0; row < height; ++row) {
      std::string cells(row < comps[ci].size() ? static_cast<size_t>(comps[ci][row]) : 0, '#');
      cells.resize(width, ' ');
      lines[row] += (ci ? " | " : "") + cells;
    }
  }
  return lines;
}

void render_tableaux_count(const Json& out, const std::string& format) {
  if (format == "tsv") {
    for (const auto& [shape, count] : out.at("by_shape").items())
      std::cout << shape << "\t" << count.get<long long>() << "\n";
    std::cout << "TOTAL\t" << out.at("total").get<long long>() << "\n";
    return;
  }
  for (const auto& [shape, count] : out.at("by_shape").items()) {
    std::cout << shape << "  (paths: " << count.get<long long>() << ")\n";
    for (const std::string& line : diagram_lines(parse_or_die(shape, "shape key")))
      std::cout << "    " << line << "\n";
  }
  std::cout << "total: " << out.at("total").get<long long>() << "\n";
}

void render_tableaux_list(const Json& out, const std::string& format) {
  const Json& ts = out.at("tableaux");
  if (format == "tsv") {
    for (size_t i = 0; i < ts.size(); ++i) std::cout << i << "\t" << ts[i].dump() << "\n";
    return;
  }
  for (size_t i = 0; i < ts.size(); ++i) {
    std::cout << i << ": ";
    for (size_t k = 0; k < ts[i].size(); ++k) std::cout << (k ? " -> " : "") << ts[i][k].dump();
    std::cout << "\n";
  }
}

void render_weights(const Json& out, const std::string& format) {
  for (const auto& [shape, w] : out.at("entries").items()) {
    if (format == "tsv")
      std::cout << shape << "\t" << w.get<std::string>() << "\n";
    else
      std::cout << shape << ": " << w.get<std::string>() << "\n";
  }
}

void render_brauer_count(const Json& out, const std::string& format) {
  if (format == "tsv") {
    std::cout << out.at("n").get<int>() << "\t" << out.at("r").get<int>() << "\t"
              << out.at("count").get<std::string>() << "\n";
    return;
  }
  std::cout << "diagrams(n=" << out.at("n").get<int>() << ", r=" << out.at("r").get<int>()
            << ") = " << out.at("count").get<std::string>() << "\n";
}

std::string strand_text(const Json& s) {
  return s.at("ends")[0].get<std::string>() + ">" + s.at("ends")[1].get<std::string>() + "[" +
         std::to_string(s.at("label").get<int>()) + "]";
}

void render_brauer_mul(const Json& out, const std::string& format) {
  if (format == "tsv") {
    std::cout << "scalar\t" << out.at("scalar").get<std::string>() << "\n";
    for (const Json& s : out.at("product").at("strands"))
      std::cout << "strand\t" << s.at("ends")[0].get<std::string>() << "\t"
                << s.at("ends")[1].get<std::string>() << "\t" << s.at("label").get<int>() << "\n";
    return;
  }
  std::cout << out.at("scalar").get<std::string>() << " * {";
  const Json& strands = out.at("product").at("strands");
  for (size_t i = 0; i < strands.size(); ++i) std::cout << (i ? " " : "") << strand_text(strands[i]);
  std::cout << "}\n";
}

void render_brauer_gram(const Json& out, const std::string& format) {
  if (format == "tsv") {
    std::cout << "size\t" << out.at("size").get<long long>() << "\n";
    std::cout << "determinant\t" << out.at("determinant").get<std::string>() << "\n";
    std::cout << "nonzero\t" << (out.at("nonzero").get<bool>() ? "true" : "false") << "\n";
    return;
  }
  std::cout << "basis size: " << out.at("size").get<long long>() << "\n";
  std::cout << "loop parameters:";
  for (const Json& t : out.at("theta")) std::cout << " " << t.get<std::string>();
  std::cout << "\n";
  std::cout << "gram determinant = " << out.at("determinant").get<std::string>() << "\n";
  std::cout << "nondegenerate: " << (out.at("nonzero").get<bool>() ? "yes" : "no") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for cyclotomic BMW parameter systems"};
  app.require_subcommand(1);
  std::string format = "pretty";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "tsv", "pretty"}))
      ->capture_default_str();

  int exit_code = 0;
  auto run = [&](auto&& body) {
    try {
      body();
    } catch (const UsageError& e) {
      std::cerr << "error: " << e.message << "\n";
      exit_code = 2;
    } catch (const ApiError& e) {
      std::cerr << "error: " << e.message << " [" << cybmw_status_name(e.status) << "]\n";
      exit_code = 2;
    }
  };

  // --- params ---------------------------------------------------------------
  auto* params_cmd = app.add_subcommand("params", "admissible parameter systems");
  params_cmd->require_subcommand(1);
  params_cmd->fallthrough();
  {
    auto* check = params_cmd->add_subcommand("check", "run the admissibility report");
    check->fallthrough();
    auto args = std::make_shared<ParamsArgs>();
    args->attach(check);
    auto window = std::make_shared<long>(3);
    check->add_option("--window", *window, "weak-relation window radius")
        ->check(CLI::Range(0, 16))
        ->capture_default_str();
    check->callback([&, args, window, check] {
      run([&] {
        ParamsHandle h;
        check_status(cybmw_params_create(args->params_json(check).c_str(), &h.p));
        char* rep_text = nullptr;
        check_status(cybmw_params_check(h.p, *window, &rep_text));
        std::string text = take(rep_text);
        Json rep = parse_or_die(text, "report");
        if (format == "json")
          print_raw(text);
        else
          render_params_report(rep, format);
        if (!rep.at("pass").get<bool>()) exit_code = 1;
      });
    });
  }
  {
    auto* deltas = params_cmd->add_subcommand("deltas", "print the delta sequence");
    deltas->fallthrough();
    auto args = std::make_shared<ParamsArgs>();
    args->attach(deltas);
    auto lo = std::make_shared<long>(0);
    auto hi = std::make_shared<long>(-1);
    deltas->add_option("--lo", *lo, "first index (default 0)");
    deltas->add_option("--hi", *hi, "last index (default 2r)");
    deltas->callback([&, args, lo, hi, deltas] {
      run([&] {
        ParamsHandle h;
        check_status(cybmw_params_create(args->params_json(deltas).c_str(), &h.p));
        long high = deltas->count("--hi") ? *hi : 2L * args->r;
        char* text_c = nullptr;
        check_status(cybmw_params_deltas(h.p, *lo, high, &text_c));
        std::string text = take(text_c);
        if (format == "json")
          print_raw(text);
        else
          render_deltas(parse_or_die(text, "delta table"), format);
      });
    });
  }

  // --- tableaux -------------------------------------------------------------
  auto* tab_cmd = app.add_subcommand("tableaux", "up-down tableaux on multipartitions");
  tab_cmd->require_subcommand(1);
  tab_cmd->fallthrough();
  auto tab_r = std::make_shared<int>(2);
  auto tab_n = std::make_shared<int>(3);
  {
    auto* count = tab_cmd->add_subcommand("count", "count paths by final shape");
    count->fallthrough();
    count->add_option("--r", *tab_r, "components")->check(CLI::Range(1, 16));
    count->add_option("--n", *tab_n, "path length")->check(CLI::Range(0, 16));
    count->callback([&] {
      run([&] {
        char* text_c = nullptr;
        check_status(cybmw_tableaux_count(*tab_n, *tab_r, &text_c));
        std::string text = take(text_c);
        if (format == "json")
          print_raw(text);
        else
          render_tableaux_count(parse_or_die(text, "count output"), format);
      });
    });
  }
  {
    auto* list = tab_cmd->add_subcommand("list", "list every path");
    list->fallthrough();
    list->add_option("--r", *tab_r, "components")->check(CLI::Range(1, 6));
    list->add_option("--n", *tab_n, "path length")->check(CLI::Range(0, 6));
    list->callback([&] {
      run([&] {
        char* text_c = nullptr;
        check_status(cybmw_tableaux_list(*tab_n, *tab_r, &text_c));
        std::string text = take(text_c);
        if (format == "json")
          print_raw(text);
        else
          render_tableaux_list(parse_or_die(text, "list output"), format);
      });
    });
  }

  // --- weights --------------------------------------------------------------
  auto* weights_cmd = app.add_subcommand("weights", "trace weights on shapes");
  weights_cmd->require_subcommand(1);
  weights_cmd->fallthrough();
  {
    auto* table = weights_cmd->add_subcommand("table", "weight of every level-n shape");
    table->fallthrough();
    auto args = std::make_shared<ParamsArgs>();
    args->attach(table);
    auto n = std::make_shared<int>(2);
    table->add_option("--n", *n, "level")->check(CLI::Range(0, 8))->capture_default_str();
    table->callback([&, args, n, table] {
      run([&] {
        ParamsHandle h;
        check_status(cybmw_params_create(args->params_json(table).c_str(), &h.p));
        char* text_c = nullptr;
        check_status(cybmw_weights_table(h.p, *n, &text_c));
        std::string text = take(text_c);
        if (format == "json")
          print_raw(text);
        else
          render_weights(parse_or_die(text, "weight table"), format);
      });
    });
  }

  // --- w2 -------------------------------------------------------------------
  auto* w2_cmd = app.add_subcommand("w2", "two-strand module relation checks");
  w2_cmd->require_subcommand(1);
  w2_cmd->fallthrough();
  {
    auto* verify = w2_cmd->add_subcommand("verify", "check every defining relation");
    verify->fallthrough();
    auto args = std::make_shared<ParamsArgs>();
    args->attach(verify);
    auto randomized = std::make_shared<bool>(false);
    auto trials = std::make_shared<int>(20);
    auto seed = std::make_shared<uint64_t>(42);
    auto lo = std::make_shared<long>(0);
    auto hi = std::make_shared<long>(5);
    verify->add_flag("--randomized", *randomized, "test at seeded rational sample points");
    verify->add_option("--trials", *trials, "randomized trials")->check(CLI::Range(1, 10000));
    verify->add_option("--seed", *seed, "random seed");
    verify->add_option("--lo", *lo, "lowest moment exponent (default -5, or -1 symbolic r >= 3)");
    verify->add_option("--hi", *hi, "highest moment exponent (default 5)")->capture_default_str();
    verify->callback([&, args, randomized, trials, seed, lo, hi, verify] {
      run([&] {
        std::string text;
        if (*randomized) {
          if (!args->spec_path.empty())
            throw UsageError{"--randomized draws its own parameters; omit --spec"};
          char* text_c = nullptr;
          check_status(cybmw_w2_verify_randomized(args->r, *trials, *seed, &text_c));
          text = take(text_c);
        } else {
          ParamsHandle h;
          std::string pj = args->params_json(verify);
          check_status(cybmw_params_create(pj.c_str(), &h.p));
          bool symbolic = parse_or_die(pj, "parameter file").value("mode", "symbolic") ==
                          std::string("symbolic");
          long low = verify->count("--lo") ? *lo : (symbolic && args->r >= 3 ? -1 : -5);
          char* text_c = nullptr;
          check_status(cybmw_w2_verify(h.p, low, *hi, &text_c));
          text = take(text_c);
        }
        Json rep = parse_or_die(text, "report");
        if (format == "json")
          print_raw(text);
        else
          render_flat_report(rep, format);
        if (!rep.at("pass").get<bool>()) exit_code = 1;
      });
    });
  }

  // --- brauer ---------------------------------------------------------------
  auto* brauer_cmd = app.add_subcommand("brauer", "labelled Brauer diagram algebra");
  brauer_cmd->require_subcommand(1);
  brauer_cmd->fallthrough();
  auto br_n = std::make_shared<int>(2);
  auto br_r = std::make_shared<int>(2);
  {
    auto* count = brauer_cmd->add_subcommand("count", "dimension of the diagram algebra");
    count->fallthrough();
    count->add_option("--n", *br_n, "strands")->check(CLI::Range(0, 64));
    count->add_option("--r", *br_r, "label modulus")->check(CLI::Range(1, 64));
    count->callback([&] {
      run([&] {
        char* text_c = nullptr;
        check_status(cybmw_brauer_count(*br_n, *br_r, &text_c));
        std::string text = take(text_c);
        if (format == "json")
          print_raw(text);
        else
          render_brauer_count(parse_or_die(text, "count output"), format);
      });
    });
  }
  {
    auto* mul = brauer_cmd->add_subcommand("mul", "compose two diagrams");
    mul->fallthrough();
    auto a_path = std::make_shared<std::string>();
    auto b_path = std::make_shared<std::string>();
    mul->add_option("--a", *a_path, "first diagram (JSON file)")->required();
    mul->add_option("--b", *b_path, "second diagram (JSON file)")->required();
    mul->callback([&, a_path, b_path] {
      run([&] {
        char* text_c = nullptr;
        check_status(
            cybmw_brauer_mul(load_file(*a_path).c_str(), load_file(*b_path).c_str(), &text_c));
        std::string text = take(text_c);
        if (format == "json")
          print_raw(text);
        else
          render_brauer_mul(parse_or_die(text, "product"), format);
      });
    });
  }
  {
    auto* gram = brauer_cmd->add_subcommand("gram", "Gram determinant of the trace form");
    gram->fallthrough();
    auto theta_path = std::make_shared<std::string>();
    auto seed = std::make_shared<uint64_t>(42);
    gram->add_option("--n", *br_n, "strands")->check(CLI::Range(1, 4));
    gram->add_option("--r", *br_r, "label modulus")->check(CLI::Range(1, 8));
    gram->add_option("--theta", *theta_path, "loop parameter file (JSON)");
    gram->add_option("--seed", *seed, "seed for random loop parameters")->capture_default_str();
    gram->callback([&, theta_path, seed] {
      run([&] {
        std::string theta_text;
        if (!theta_path->empty()) theta_text = load_file(*theta_path);
        char* text_c = nullptr;
        check_status(cybmw_brauer_gram(*br_n, *br_r,
                                       theta_text.empty() ? nullptr : theta_text.c_str(), *seed,
                                       &text_c));
        std::string text = take(text_c);
        if (format == "json")
          print_raw(text);
        else
          render_brauer_gram(parse_or_die(text, "gram output"), format);
      });
    });
  }

  // --- verify ---------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "whole-library verification");
  verify_cmd->require_subcommand(1);
  verify_cmd->fallthrough();
  {
    auto* all = verify_cmd->add_subcommand("all", "run every check battery");
    all->fallthrough();
    auto r = std::make_shared<int>(2);
    auto n = std::make_shared<int>(3);
    auto randomized = std::make_shared<bool>(false);
    auto trials = std::make_shared<int>(20);
    auto seed = std::make_shared<uint64_t>(42);
    all->add_option("--r", *r, "number of cyclotomic parameters")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    all->add_option("--n", *n, "level / strand bound")->check(CLI::Range(1, 8))->capture_default_str();
    all->add_flag("--randomized", *randomized, "seeded rational samples instead of symbolic");
    all->add_option("--trials", *trials, "randomized trials")->check(CLI::Range(1, 1000));
    all->add_option("--seed", *seed, "random seed")->capture_default_str();
    all->callback([&, r, n, randomized, trials, seed] {
      run([&] {
        Json cfg;
        cfg["r"] = *r;
        cfg["n"] = *n;
        cfg["mode"] = *randomized ? "randomized" : "symbolic";
        cfg["trials"] = *trials;
        cfg["seed"] = *seed;
        char* text_c = nullptr;
        check_status(cybmw_verify_all(cfg.dump().c_str(), &text_c));
        std::string text = take(text_c);
        Json rep = parse_or_die(text, "report");
        if (format == "json")
          print_raw(text);
        else
          render_verify_report(rep, format);
        if (!rep.at("pass").get<bool>()) exit_code = 1;
      });
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return exit_code;
}
