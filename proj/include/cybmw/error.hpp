#pragma once

#include <stdexcept>
#include <string>

namespace cybmw {

// Error categories surfaced through the C API as status codes.
enum class Code : int {
  Ok = 0,
  InvalidArgument = 1,
  Parse = 2,
  DivisionByZero = 3,
  NotExpandable = 4,
  PoleAtPoint = 5,
  MissingAssignment = 6,
  IndexOutOfRange = 7,
  DegenerateParameters = 8,
  NodeNotIncident = 9,
  ShapeNotInLevel = 10,
  ShapeInconsistency = 11,
  InvalidMatching = 12,
  SizeMismatch = 13,
  ParameterMismatch = 14,
  VerificationFailed = 15,
  Internal = 99,
};

class Error : public std::runtime_error {
 public:
  Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

inline const char* code_name(Code c) {
  switch (c) {
    case Code::Ok: return "ok";
    case Code::InvalidArgument: return "invalid-argument";
    case Code::Parse: return "parse-error";
    case Code::DivisionByZero: return "division-by-zero";
    case Code::NotExpandable: return "not-expandable";
    case Code::PoleAtPoint: return "pole-at-point";
    case Code::MissingAssignment: return "missing-assignment";
    case Code::IndexOutOfRange: return "index-out-of-range";
    case Code::DegenerateParameters: return "degenerate-parameters";
    case Code::NodeNotIncident: return "node-not-incident";
    case Code::ShapeNotInLevel: return "shape-not-in-level";
    case Code::ShapeInconsistency: return "shape-inconsistency";
    case Code::InvalidMatching: return "invalid-matching";
    case Code::SizeMismatch: return "size-mismatch";
    case Code::ParameterMismatch: return "parameter-mismatch";
    case Code::VerificationFailed: return "verification-failed";
    case Code::Internal: return "internal-error";
  }
  return "unknown";
}

}  // namespace cybmw
