#pragma once

#include <gmpxx.h>

#include <string>

namespace jetlab {

using Rat = mpq_class;
using Int = mpz_class;

// Parses "p" or "p/q" with optional sign; canonicalizes.
Rat rat_from_string(const std::string &s);

std::string rat_to_string(const Rat &q);

// base^e with e possibly negative (base must be nonzero then).
Rat rat_pow(const Rat &base, long e);

inline bool rat_is_integer(const Rat &q) { return q.get_den() == 1; }

} // namespace jetlab
