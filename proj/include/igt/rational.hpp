#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace igt {

/// Exact arbitrary-precision rational, always kept in lowest terms.
using QQ = boost::multiprecision::mpq_rational;
using ZZ = boost::multiprecision::mpz_int;

inline bool is_zero(const QQ& q) { return q.sign() == 0; }

inline std::string qq_str(const QQ& q) { return q.str(); }

/// Parses "p" or "p/q" with signed numerator and unsigned denominator.
/// Returns false on malformed input (including zero denominator).
bool parse_qq(std::string_view text, QQ& out);

} // namespace igt
