#include "umap/formulas.hpp"

#include <sstream>

#include <boost/multiprecision/mpfr.hpp>

#include "umap/error.hpp"

namespace umap {

namespace mp = boost::multiprecision;

BigCount factorial(int n) {
  BigCount r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigCount catalan(int m) { return factorial(2 * m) / (factorial(m) * factorial(m + 1)); }

BigCount double_factorial(int n) {
  BigCount r = 1;
  for (int i = n; i > 1; i -= 2) r *= i;
  return r;
}

BigCount binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

namespace {

BigCount pow_int(int base, int exp) { return mp::pow(BigCount(base), static_cast<unsigned>(exp)); }

BigCount to_count(const Rational& r) {
  if (mp::denominator(r) != 1) throw Error(ErrorKind::invalid_argument, "non-integral count");
  return mp::numerator(r);
}

}  // namespace

BigCount xi(int h, int m) {
  if (h < 0 || m < 0 || m + 1 - 3 * h < 0) return 0;
  return factorial(2 * m) / (pow_int(12, h) * factorial(h) * factorial(m) * factorial(m + 1 - 3 * h));
}

Rational c_const(int h) {
  if (h <= 0) return 0;
  Rational sum = 0;
  for (int l = 0; l < h; ++l) sum += Rational(binomial(2 * l, l), pow_int(16, l));
  return Rational(3 * pow_int(2, 3 * h - 2) * factorial(h), factorial(2 * h)) * sum;
}

Rational c_const_recurrence(int h) {
  Rational c = 0;
  for (int k = 1; k <= h; ++k) {
    c = Rational(4, 2 * k - 1) * c + Rational(BigCount(3), pow_int(2, k - 1) * factorial(k - 1) * (2 * k - 1));
  }
  return c;
}

BigCount eta(HalfInteger h, int m) {
  if (h.twice <= 0) throw Error(ErrorKind::invalid_argument, "no non-orientable map has type " + to_string(h));
  const int fh = h.floor();
  if (h.is_integer()) {
    if (m < 0 || m + 1 - 3 * fh < 0) return 0;
    return to_count(c_const(fh) * Rational(factorial(2 * m), pow_int(6, fh) * factorial(m) * factorial(m + 1 - 3 * fh)));
  }
  if (m < 1 || m - 1 - 3 * fh < 0) return 0;
  return to_count(Rational(pow_int(4, m + fh - 1) * factorial(m - 1),
                           pow_int(6, fh) * double_factorial(h.twice - 1) * factorial(m - 1 - 3 * fh)));
}

Rational k_const(HalfInteger h) {
  if (h.twice <= 0) throw Error(ErrorKind::invalid_argument, "no non-orientable map has type " + to_string(h));
  const int fh = h.floor();
  if (h.is_integer()) return c_const(fh) / Rational(pow_int(6, fh));
  return Rational(pow_int(4, fh), 4 * pow_int(6, fh) * double_factorial(h.twice - 1));
}

int ell(HalfInteger h, int m) { return (2 * m + 8 - 3 * h.twice - (h.is_integer() ? 0 : 1)) / 2; }

namespace {

BigCount eta_or_zero(HalfInteger h, int m) { return h.twice <= 0 ? BigCount(0) : eta(h, m); }

BigCount xi_or_zero(HalfInteger h, int m) { return h.is_integer() && h.twice >= 0 ? xi(h.floor(), m) : BigCount(0); }

}  // namespace

BigCount marked_count(HalfInteger h, int m) {
  if (h.twice < 2) throw Error(ErrorKind::invalid_argument, "marked counts need h >= 1");
  const HalfInteger below = h.minus_one();
  const BigCount choose = binomial(ell(h, m), 3);
  return 4 * choose * eta_or_zero(below, m) + 3 * choose * xi_or_zero(below, m);
}

bool recursion_check(HalfInteger h, int m) { return (h.twice - 1) * eta(h, m) == marked_count(h, m); }

bool remy_recursion_check(HalfInteger h, int m) {
  const int fh = h.floor();
  auto prev = m >= 1 ? eta(h, m - 1) : BigCount(0);
  if (h.is_integer()) return (m + 1 - 3 * fh) * eta(h, m) == 2 * (2 * m - 1) * prev;
  return (m - 1 - 3 * fh) * eta(h, m) == 4 * (m - 1) * prev;
}

namespace {

using Decimal = mp::mpfr_float;

Decimal prefactor(HalfInteger h) {
  if (h.twice <= 0) throw Error(ErrorKind::invalid_argument, "no non-orientable map has type " + to_string(h));
  const int fh = h.floor();
  if (h.is_integer()) {
    Rational c = c_const(fh);
    Decimal num(mp::numerator(c));
    Decimal den(mp::denominator(c) * pow_int(6, fh));
    return num / (den * mp::sqrt(boost::math::constants::pi<Decimal>()));
  }
  return Decimal(pow_int(4, fh)) / Decimal(2 * pow_int(6, fh) * double_factorial(h.twice - 1));
}

std::string format(const Decimal& x, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << x;
  return out.str();
}

struct PrecisionScope {
  unsigned saved;
  explicit PrecisionScope(int digits) : saved(Decimal::default_precision()) {
    if (digits < 1) throw Error(ErrorKind::invalid_argument, "precision must be positive");
    Decimal::default_precision(static_cast<unsigned>(digits) + 10);
  }
  ~PrecisionScope() { Decimal::default_precision(saved); }
};

}  // namespace

std::string asymptotic_prefactor(HalfInteger h, int digits) {
  PrecisionScope scope(digits);
  return format(prefactor(h), digits);
}

std::string asymptotic_kappa(HalfInteger h, int n, int digits) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "n must be positive");
  PrecisionScope scope(digits);
  // n^{3h − 3/2} = sqrt(n)^{3·2h − 3}
  Decimal growth = mp::pow(mp::sqrt(Decimal(n)), Decimal(3 * h.twice - 3));
  return format(prefactor(h) * growth * Decimal(pow_int(4, n)), digits);
}

}  // namespace umap
