#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace skewchar {

using Int = mpz_class;
using Rat = mpq_class;

// Accepts "p", "-p" or "p/q" (q != 0); result is canonical.
Rat parse_rat(std::string_view s);
Int parse_int(std::string_view s);

// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

Rat make_rat(long num, long den = 1);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace skewchar
