#include "dyckmax/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dyckmax/exact_counts.hpp"
#include "dyckmax/kernels.hpp"

namespace dyckmax {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw std::domain_error(std::string(name) + " must be a finite positive number");
}

struct Partial {
  double sum = 0.0;
  int terms = 0;
  double tail = kInf;
};

// Adds term(1), term(2), ... until scale * tail_after(S) < abs_tol.
template <class Term, class Tail>
Partial sum_certified(Term term, Tail tail_after, double scale, const SeriesSpec& spec) {
  if (!(spec.abs_tol > 0.0)) throw std::invalid_argument("SeriesSpec.abs_tol must be > 0");
  if (spec.max_terms < 1) throw std::invalid_argument("SeriesSpec.max_terms must be >= 1");
  Partial p;
  for (long s = 1; s <= spec.max_terms; ++s) {
    p.sum += term(s);
    p.terms = static_cast<int>(s);
    p.tail = scale * tail_after(s);
    if (s >= spec.min_terms && p.tail < spec.abs_tol) return p;
  }
  throw std::runtime_error("series truncation not certified within max_terms = " + std::to_string(spec.max_terms));
}

// sqrt(2 pi) x^{-3} pi^2 sum s^2 exp(-a s^2), a = pi^2/(2x^2), shared by f(t) and f(x).
LimitEval theta_series(double arg, double prefactor, double a, const SeriesSpec& spec) {
  const double scale = prefactor * kPi * kPi;
  auto term = [a](long s) {
    const auto sd = static_cast<double>(s);
    return sd * sd * std::exp(-a * sd * sd);
  };
  const Partial p = sum_certified(term, [a](long S) { return squared_gaussian_tail(a, S); }, scale, spec);
  LimitEval out;
  out.arg = arg;
  out.raw = scale * p.sum;
  out.value = std::max(0.0, out.raw);
  out.terms_used = p.terms;
  out.tail_bound = p.tail;
  return out;
}

}  // namespace

double squared_gaussian_tail(double a, long S) {
  const auto next = static_cast<double>(S + 1);
  const double ratio = ((next + 1.0) / next) * ((next + 1.0) / next) * std::exp(-a * (2.0 * next + 1.0));
  if (!(ratio < 1.0)) return kInf;
  return next * next * std::exp(-a * next * next) / (1.0 - ratio);
}

double gaussian_tail(double a, long S) {
  const auto next = static_cast<double>(S + 1);
  const double ratio = std::exp(-a * (2.0 * next + 1.0));
  if (!(ratio < 1.0)) return kInf;
  return std::exp(-a * next * next) / (1.0 - ratio);
}

LimitEval f_of_t(double t, const SeriesSpec& spec) {
  require_positive(t, "t");
  return theta_series(t, 4.0 * std::sqrt(kPi) * std::pow(t, 1.5), t * kPi * kPi, spec);
}

LimitEval f_of_x(double x, const SeriesSpec& spec) {
  require_positive(x, "x");
  return theta_series(x, std::sqrt(2.0 * kPi) / (x * x * x), kPi * kPi / (2.0 * x * x), spec);
}

LimitEval k_of_x(double x, const SeriesSpec& spec) {
  require_positive(x, "x");
  const double a = 2.0 * x * x;
  auto term = [x, a](long s) {
    const auto sd = static_cast<double>(s);
    return (4.0 * x * x * sd * sd - 1.0) * std::exp(-a * sd * sd);
  };
  // Past the sign change every term is positive and below 4x^2 s^2 e^{-a s^2}.
  auto tail = [x, a](long S) {
    const auto next = static_cast<double>(S + 1);
    if (4.0 * x * x * next * next <= 1.0) return kInf;
    return squared_gaussian_tail(a, S);
  };
  const Partial p = sum_certified(term, tail, 2.0 * 4.0 * x * x, spec);
  LimitEval out;
  out.arg = x;
  out.raw = 1.0 - 2.0 * p.sum;
  out.value = std::max(0.0, out.raw);
  out.terms_used = p.terms;
  out.tail_bound = p.tail;
  return out;
}

LimitEval limit_cdf(double x, const SeriesSpec& spec) {
  require_positive(x, "x");
  return x < 1.0 ? f_of_x(x, spec) : k_of_x(x, spec);
}

double jacobi_identity_residual(double x, const SeriesSpec& spec) {
  require_positive(x, "x");
  const double a_left = 2.0 * x * x;
  const double a_right = kPi * kPi / (2.0 * x * x);
  auto gauss = [](double a) { return [a](long n) { const auto nd = static_cast<double>(n); return std::exp(-a * nd * nd); }; };
  auto tail = [](double a) { return [a](long S) { return gaussian_tail(a, S); }; };
  const Partial left = sum_certified(gauss(a_left), tail(a_left), 2.0 * x, spec);
  const double c = std::sqrt(kPi / 2.0);
  const Partial right = sum_certified(gauss(a_right), tail(a_right), 2.0 * c, spec);
  return std::abs(x * (1.0 + 2.0 * left.sum) - c * (1.0 + 2.0 * right.sum));
}

std::int64_t scaled_height_cap(std::int64_t N, double x) {
  if (N < 1) throw std::domain_error("N must be >= 1");
  require_positive(x, "x");
  const double v = x * std::sqrt(2.0 * static_cast<double>(N));
  const double nearest = std::round(v);
  if (std::abs(v - nearest) <= 1e-9 * std::max(1.0, v)) return std::max<std::int64_t>(1, static_cast<std::int64_t>(nearest));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(v)));
}

std::vector<PrelimitPoint> prelimit_cdf(std::int64_t N, std::span<const double> xs, const SeriesSpec& spec) {
  if (N < 1) throw std::domain_error("N must be >= 1");
  for (double x : xs) require_positive(x, "x");
  const BigCount total = catalan(N);
  std::vector<PrelimitPoint> out(xs.size());
  const auto count = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    PrelimitPoint& p = out[static_cast<std::size_t>(i)];
    p.N = N;
    p.x = xs[static_cast<std::size_t>(i)];
    p.n = scaled_height_cap(N, p.x);
    p.probability = ratio_to_double(kernels::bounded_excursions_serial(N, p.n), total);
  }
  for (auto& p : out) {
    p.limit = limit_cdf(p.x, spec).value;
    p.gap = std::abs(p.probability - p.limit);
  }
  return out;
}

}  // namespace dyckmax
