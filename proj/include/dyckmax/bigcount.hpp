#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace dyckmax {

/// Exact nonnegative path count. Backed by GMP so sums of 4^N-sized values
/// never overflow or round.
using BigCount = mpz_class;

/// Exact rational, used for probabilities that must not be rounded.
using BigRatio = mpq_class;

std::string to_decimal(const BigCount& value);

/// Scientific notation with `digits` significant digits, e.g. "1.6796e+04".
std::string to_scientific(const BigCount& value, int digits = 17);

/// Natural log of a big integer; -inf for zero. Accurate to a few ulps at
/// any magnitude (mantissa/exponent split, no conversion overflow).
double log_of(const BigCount& value);

/// log(numerator / denominator) without forming the quotient.
double log_ratio(const BigCount& numerator, const BigCount& denominator);

/// Nearest double to numerator / denominator.
double ratio_to_double(const BigCount& numerator, const BigCount& denominator);

/// binom(n, k); zero when k < 0 or k > n.
BigCount binomial(std::int64_t n, std::int64_t k);

}  // namespace dyckmax
