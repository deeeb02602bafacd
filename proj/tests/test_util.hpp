#pragma once

#include <functional>

#include "cybmw/error.hpp"

namespace cybmw_test {

// Runs f and reports which error code it threw (Ok when it completed).
inline cybmw::Code thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const cybmw::Error& e) {
    return e.code();
  } catch (...) {
    return cybmw::Code::Internal;
  }
  return cybmw::Code::Ok;
}

}  // namespace cybmw_test
