#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ncop {

using Q = mpq_class;

inline std::string to_string(const Q& q) { return q.get_str(); }

// Accepts "a" or "a/b"; the result is canonicalized.
Q parse_rational(std::string_view s);

inline bool is_zero(const Q& q) { return sgn(q) == 0; }

}  // namespace ncop
