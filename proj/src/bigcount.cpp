#include "dyckmax/bigcount.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace dyckmax {

std::string to_decimal(const BigCount& value) { return value.get_str(10); }

std::string to_scientific(const BigCount& value, int digits) {
  mpf_class f(value, static_cast<mp_bitcnt_t>(std::ceil(digits * 3.33) + 64));
  mp_exp_t exponent = 0;
  std::string mantissa = f.get_str(exponent, 10, static_cast<std::size_t>(digits));
  if (mantissa.empty()) return "0";
  std::string out;
  out += mantissa[0];
  if (mantissa.size() > 1) {
    out += '.';
    out.append(mantissa, 1, std::string::npos);
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "e%+03ld", static_cast<long>(exponent - 1));
  return out + buf;
}

double log_of(const BigCount& value) {
  if (sgn(value) == 0) return -std::numeric_limits<double>::infinity();
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

double log_ratio(const BigCount& numerator, const BigCount& denominator) {
  long e_num = 0;
  long e_den = 0;
  if (sgn(numerator) == 0) return -std::numeric_limits<double>::infinity();
  const double m_num = mpz_get_d_2exp(&e_num, numerator.get_mpz_t());
  const double m_den = mpz_get_d_2exp(&e_den, denominator.get_mpz_t());
  // Exponent difference first: keeps the result accurate when the ratio is ~1.
  return std::log(m_num / m_den) + static_cast<double>(e_num - e_den) * std::numbers::ln2;
}

double ratio_to_double(const BigCount& numerator, const BigCount& denominator) {
  BigRatio q(numerator, denominator);
  q.canonicalize();
  return q.get_d();
}

BigCount binomial(std::int64_t n, std::int64_t k) {
  BigCount out = 0;
  if (n < 0 || k < 0 || k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace dyckmax
