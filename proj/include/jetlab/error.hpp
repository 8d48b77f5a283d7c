#pragma once

#include <stdexcept>
#include <string>

namespace jetlab {

// Internal error kinds. The CLI maps these onto the stable six-code
// vocabulary (PARSE, LEVEL, DIM_MISMATCH, NOT_UNIPOTENT, VALIDITY,
// SPEC_MISMATCH) via err_code_name.
enum class Err {
  Parse,
  Level,
  DimMismatch,
  NotUnipotent,
  NotNilpotent,
  NotDiffeo,
  NotJet,
  Validity,
  SpecMismatch,
  Containment,
  InvalidSplitting,
  Internal,
};

const char *err_code_name(Err e);

class JetError : public std::runtime_error {
public:
  JetError(Err code, const std::string &msg)
      : std::runtime_error(msg), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string &msg) {
  throw JetError(code, msg);
}

} // namespace jetlab
