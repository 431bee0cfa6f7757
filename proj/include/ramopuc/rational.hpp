#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ramopuc {

/// Exact arbitrary-precision integer and rational scalars. Every moment,
/// coefficient and determinant in the library is one of these.
using Integer = mpz_class;
using Rational = mpq_class;

/// "num/den" in lowest terms; integers are rendered without "/1".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "num/den" or "num". Throws InvalidArgument on malformed text or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// |q| == 1
bool is_unimodular(const Rational& q);

/// Least common multiple of all denominators (1 for an empty list).
Integer common_denominator(const std::vector<Rational>& values);

}  // namespace ramopuc
