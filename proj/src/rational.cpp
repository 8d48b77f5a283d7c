#include "jetlab/rational.hpp"

#include "jetlab/error.hpp"

namespace jetlab {

Rat rat_from_string(const std::string &s) {
  if (s.empty())
    fail(Err::Parse, "empty rational literal");
  try {
    Rat q(s);
    q.canonicalize();
    if (q.get_den() == 0)
      fail(Err::Parse, "zero denominator in '" + s + "'");
    return q;
  } catch (const std::invalid_argument &) {
    fail(Err::Parse, "bad rational literal '" + s + "'");
  }
}

std::string rat_to_string(const Rat &q) { return q.get_str(); }

Rat rat_pow(const Rat &base, long e) {
  if (e == 0)
    return Rat(1);
  if (base == 0) {
    if (e < 0)
      fail(Err::Parse, "zero raised to a negative power");
    return Rat(0);
  }
  Rat b = base;
  long n = e;
  if (n < 0) {
    b = Rat(1) / b;
    n = -n;
  }
  Rat acc(1);
  while (n > 0) {
    if (n & 1)
      acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

const char *err_code_name(Err e) {
  switch (e) {
  case Err::Parse:
  case Err::NotDiffeo:
    return "PARSE";
  case Err::Level:
    return "LEVEL";
  case Err::DimMismatch:
    return "DIM_MISMATCH";
  case Err::NotUnipotent:
  case Err::NotNilpotent:
    return "NOT_UNIPOTENT";
  case Err::Validity:
    return "VALIDITY";
  case Err::SpecMismatch:
  case Err::NotJet:
  case Err::Containment:
  case Err::InvalidSplitting:
    return "SPEC_MISMATCH";
  case Err::Internal:
    return "INTERNAL";
  }
  return "INTERNAL";
}

} // namespace jetlab
