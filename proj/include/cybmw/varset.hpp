#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cybmw/error.hpp"

namespace cybmw {

// Immutable list of variable names defining a polynomial ring's coordinate
// order.  The monomial order used throughout is lexicographic on the exponent
// vector in table order, so the table order is semantically meaningful.
class VarTable {
 public:
  VarTable() = default;
  explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {}

  int size() const { return static_cast<int>(names_.size()); }

  const std::string& name(int i) const {
    if (i < 0 || i >= size()) throw Error(Code::IndexOutOfRange, "variable index out of range");
    return names_[static_cast<size_t>(i)];
  }

  // Returns -1 when the name is unknown.
  int index(const std::string& n) const {
    for (int i = 0; i < size(); ++i)
      if (names_[static_cast<size_t>(i)] == n) return i;
    return -1;
  }

  bool operator==(const VarTable& o) const { return names_ == o.names_; }
  bool operator!=(const VarTable& o) const { return !(*this == o); }

  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// Ring for ground-parameter computations: q, u1..ur, and the generating
// function variable t (always last).
inline VarTablePtr ground_vars(int r) {
  if (r < 0) throw Error(Code::InvalidArgument, "negative variable count");
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(r) + 2);
  names.emplace_back("q");
  for (int j = 1; j <= r; ++j) names.push_back("u" + std::to_string(j));
  names.emplace_back("t");
  return std::make_shared<VarTable>(std::move(names));
}

// Ring of loop parameters th0..th_{floor(r/2)} for the labelled Brauer algebra.
inline VarTablePtr theta_vars(int r) {
  if (r < 1) throw Error(Code::InvalidArgument, "loop-parameter ring needs r >= 1");
  std::vector<std::string> names;
  for (int j = 0; j <= r / 2; ++j) names.push_back("th" + std::to_string(j));
  return std::make_shared<VarTable>(std::move(names));
}

inline VarTablePtr empty_vars() {
  static const VarTablePtr t = std::make_shared<VarTable>(std::vector<std::string>{});
  return t;
}

}  // namespace cybmw
