// Exercises the shared-library C interface end to end: handle lifecycle,
// status/error reporting, and the JSON payload of every entry point.

#include <doctest.h>
#include <json.hpp>

#include <cstring>
#include <string>
#include <thread>

#include "cybmw_c.h"

TEST_SUITE_BEGIN("capi");

namespace {

using Json = nlohmann::json;

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  cybmw_free(s);
  return out;
}

// Runs fn with a fresh output slot, requires success, parses the payload.
template <class Fn>
Json call_json(Fn&& fn) {
  char* out = nullptr;
  int32_t status = fn(&out);
  REQUIRE(status == CYBMW_OK);
  return Json::parse(take(out));
}

struct Handle {
  cybmw_params* p = nullptr;
  ~Handle() { cybmw_params_destroy(p); }
};

cybmw_params* make_params(const std::string& json_text) {
  cybmw_params* p = nullptr;
  REQUIRE(cybmw_params_create(json_text.c_str(), &p) == CYBMW_OK);
  REQUIRE(p != nullptr);
  return p;
}

}  // namespace

TEST_CASE("abi version and status names") {
  CHECK(cybmw_abi_version() == 1);
  CHECK(std::strcmp(cybmw_status_name(CYBMW_OK), "ok") == 0);
  CHECK(std::strcmp(cybmw_status_name(CYBMW_PARSE_ERROR), "parse-error") == 0);
  CHECK(std::strcmp(cybmw_status_name(CYBMW_VERIFICATION_FAILED), "verification-failed") == 0);
}

TEST_CASE("error reporting is per call and per thread") {
  cybmw_params* p = nullptr;
  CHECK(cybmw_params_create("this is not json", &p) == CYBMW_PARSE_ERROR);
  CHECK(p == nullptr);
  CHECK(std::string(cybmw_last_error_message()).find("JSON") != std::string::npos);

  // A success clears the calling thread's message.
  char* out = nullptr;
  CHECK(cybmw_tableaux_count(1, 1, &out) == CYBMW_OK);
  take(out);
  CHECK(std::string(cybmw_last_error_message()).empty());

  // Another thread's failure does not disturb this thread's state.
  std::thread([] {
    cybmw_params* q = nullptr;
    CHECK(cybmw_params_create("{", &q) == CYBMW_PARSE_ERROR);
    CHECK(!std::string(cybmw_last_error_message()).empty());
  }).join();
  CHECK(std::string(cybmw_last_error_message()).empty());

  out = nullptr;
  CHECK(cybmw_tableaux_count(-1, 1, &out) == CYBMW_INVALID_ARGUMENT);
  CHECK(out == nullptr);
}

TEST_CASE("parameter lifecycle, check, and deltas") {
  Handle h;
  h.p = make_params(R"({"r":2,"mode":"symbolic"})");
  Json rep = call_json([&](char** o) { return cybmw_params_check(h.p, 3, o); });
  CHECK(rep.at("pass").get<bool>());
  CHECK(rep.at("rho_canonical").get<bool>());
  CHECK(rep.at("weak").is_array());

  Json table = call_json([&](char** o) { return cybmw_params_deltas(h.p, 0, 2, o); });
  CHECK(table.at("deltas").size() == 3);
  CHECK(table.at("deltas")[1].at("a").get<int>() == 1);

  char* out = nullptr;
  CHECK(cybmw_params_check(nullptr, 3, &out) == CYBMW_INVALID_ARGUMENT);
  cybmw_params_destroy(nullptr);  // must be a no-op
}

TEST_CASE("planted delta override fails the check with a named relation") {
  Handle h;
  h.p = make_params(R"({"r":2,"mode":"symbolic","delta":{"1":"q"}})");
  Json rep = call_json([&](char** o) { return cybmw_params_check(h.p, 3, o); });
  CHECK_FALSE(rep.at("pass").get<bool>());
  bool named = false;
  for (const Json& c : rep.at("relations"))
    if (c.at("name") == "trace-constraint(l=1)" && !c.at("pass").get<bool>() &&
        c.at("residual").get<std::string>() != "0")
      named = true;
  CHECK(named);
}

TEST_CASE("specialized parameters run the same surfaces") {
  Handle h;
  h.p = make_params(R"({"r":2,"mode":"specialized","q":"2","u":["3","5"]})");
  Json rep = call_json([&](char** o) { return cybmw_params_check(h.p, 2, o); });
  CHECK(rep.at("pass").get<bool>());

  Json w2 = call_json([&](char** o) { return cybmw_w2_verify(h.p, -5, 5, o); });
  CHECK(w2.at("pass").get<bool>());

  Json weights = call_json([&](char** o) { return cybmw_weights_table(h.p, 2, o); });
  CHECK(weights.at("n").get<int>() == 2);
  CHECK(weights.at("entries").size() == 6);  // shapes of level 2 at r = 2
}

TEST_CASE("tableaux payloads") {
  Json count = call_json([](char** o) { return cybmw_tableaux_count(3, 1, o); });
  CHECK(count.at("total").get<int>() == 7);
  CHECK(count.at("by_shape").at("[1]").get<int>() == 3);
  CHECK(count.at("by_shape").at("[2,1]").get<int>() == 2);
  CHECK(count.at("by_shape").at("[3]").get<int>() == 1);
  CHECK(count.at("by_shape").at("[1,1,1]").get<int>() == 1);

  Json list = call_json([](char** o) { return cybmw_tableaux_list(2, 2, o); });
  CHECK(list.at("tableaux").size() == 8);
  for (const Json& t : list.at("tableaux")) CHECK(t.size() == 3);
}

TEST_CASE("two-strand randomized verification") {
  Json rep = call_json([](char** o) { return cybmw_w2_verify_randomized(4, 2, 99, o); });
  CHECK(rep.at("pass").get<bool>());
  CHECK(rep.at("trials").get<int>() == 2);
  CHECK(rep.at("checks").size() > 0);
}

TEST_CASE("brauer payloads") {
  Json count = call_json([](char** o) { return cybmw_brauer_count(2, 3, o); });
  CHECK(count.at("count").get<std::string>() == "27");

  const char* e_top = R"({"n":2,"r":3,"strands":[{"ends":["t1","t2"],"label":1},
                                                 {"ends":["b1","b2"],"label":2}]})";
  Json prod = call_json([&](char** o) { return cybmw_brauer_mul(e_top, e_top, o); });
  CHECK(prod.at("scalar").get<std::string>() == "th1");
  CHECK(prod.at("loops").at("th1").get<int>() == 1);
  CHECK(prod.at("product").at("strands").size() == 2);

  Json gram = call_json(
      [](char** o) { return cybmw_brauer_gram(2, 2, R"({"r":2,"theta":["2","3"]})", 0, o); });
  CHECK(gram.at("size").get<int>() == 12);
  CHECK(gram.at("determinant").get<std::string>() != "0");

  // Seeded random loop parameters must be reproducible.
  Json g1 = call_json([](char** o) { return cybmw_brauer_gram(2, 2, nullptr, 7, o); });
  Json g2 = call_json([](char** o) { return cybmw_brauer_gram(2, 2, nullptr, 7, o); });
  CHECK(g1 == g2);

  char* out = nullptr;
  CHECK(cybmw_brauer_mul(R"({"n":1,"r":2,"strands":[{"ends":["t1","b1"],"label":0}]})",
                         R"({"n":2,"r":2,"strands":[{"ends":["t1","b1"],"label":0},
                                                    {"ends":["t2","b2"],"label":0}]})",
                         &out) == CYBMW_SIZE_MISMATCH);
  CHECK(cybmw_brauer_gram(2, 2, R"({"r":2,"theta":["0","3"]})", 0, &out) == CYBMW_PARSE_ERROR);
}

TEST_CASE("whole-library verification through the C interface") {
  Json rep =
      call_json([](char** o) { return cybmw_verify_all(R"({"r":1,"n":2,"mode":"symbolic"})", o); });
  CHECK(rep.at("pass").get<bool>());
  CHECK(rep.at("sections").size() >= 8);

  char* out = nullptr;
  CHECK(cybmw_verify_all(R"({"r":9,"mode":"symbolic"})", &out) == CYBMW_INVALID_ARGUMENT);
  CHECK(std::string(cybmw_last_error_message()).find("randomized") != std::string::npos);
}

TEST_SUITE_END();
