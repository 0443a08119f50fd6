#include <doctest.h>

#include <string>

#include "umap/error.hpp"
#include "umap/formulas.hpp"

using namespace umap;

namespace {

BigCount pow_big(int base, int exp) {
  BigCount r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

TEST_CASE("elementary counts") {
  CHECK(catalan(2) == 2);
  CHECK(catalan(3) == 5);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(1) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(-1, 2) == 0);
}

TEST_CASE("xi") {
  for (int m = 0; m <= 6; ++m) CHECK(xi(0, m) == catalan(m));
  CHECK(xi(1, 2) == 1);
  CHECK(xi(1, 3) == 10);
  CHECK(xi(1, 1) == 0);
  CHECK(xi(3, 4) == 0);
}

TEST_CASE("c_h") {
  CHECK(c_const(1) == 3);
  CHECK(c_const(2) == Rational(9, 2));
  CHECK(c_const_recurrence(2) == Rational(9, 2));
  CHECK(c_const(0) == 0);
  for (int h = 1; h <= 10; ++h) CHECK(c_const(h) == c_const_recurrence(h));
}

TEST_CASE("eta") {
  for (int m = 1; m <= 4; ++m) CHECK(eta({1}, m) == pow_big(4, m - 1));
  CHECK(eta({2}, 2) == 6);
  CHECK(eta({2}, 3) == 60);
  CHECK(eta({3}, 4) == 128);
  CHECK(eta({4}, 5) == 3780);
  CHECK(eta({2}, 1) == 0);
  CHECK(eta({3}, 3) == 0);
  try {
    eta({0}, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_argument);
  }
}

TEST_CASE("K_h") {
  CHECK(k_const({1}) == Rational(1, 4));
  CHECK(k_const({2}) == Rational(1, 2));
  for (int t = 1; t <= 6; ++t) {
    const HalfInteger h{t};
    for (int m = 3 * h.floor() + 1; m <= 12; ++m) {
      Rational ratio = h.is_integer() ? Rational(factorial(2 * m), factorial(m) * factorial(m + 1 - 3 * h.floor()))
                                      : Rational(pow_big(4, m) * factorial(m - 1), factorial(m - 1 - 3 * h.floor()));
      CHECK(Rational(eta(h, m)) == k_const(h) * ratio);
    }
  }
}

TEST_CASE("gluing recursion") {
  CHECK(ell({2}, 2) == 3);
  CHECK(ell({3}, 4) == 3);
  CHECK(recursion_check({2}, 2));
  CHECK(recursion_check({3}, 4));
  for (int t = 2; t <= 8; ++t) {
    for (int m = 0; m <= 30; ++m) CHECK(recursion_check({t}, m));
  }
}

TEST_CASE("marked counts") {
  CHECK(marked_count({2}, 2) == 6);
  CHECK(marked_count({2}, 3) == 60);
  CHECK(marked_count({3}, 4) == 256);
  for (int t = 2; t <= 8; ++t) {
    for (int m = 0; m <= 20; ++m) CHECK(marked_count({t}, m) == BigCount(t - 1) * eta({t}, m));
  }
}

TEST_CASE("leaf recursion") {
  CHECK(remy_recursion_check({2}, 3));
  CHECK(remy_recursion_check({1}, 2));
  CHECK(BigCount(1) * eta({2}, 3) == 2 * 5 * eta({2}, 2));
  for (int t = 1; t <= 8; ++t) {
    for (int m = 1; m <= 30; ++m) CHECK(remy_recursion_check({t}, m));
  }
}

TEST_CASE("asymptotic estimate") {
  CHECK(asymptotic_kappa({1}, 3) == "32");
  SUBCASE("type 1/2 is 4^n / 2") {
    for (int n = 1; n <= 10; ++n) CHECK(asymptotic_kappa({1}, n) == (pow_big(4, n) / 2).str());
  }
  SUBCASE("type 1 prefactor is 3/(6 sqrt(pi))") {
    // 1 / (2 sqrt(pi)) to 20 digits
    CHECK(asymptotic_prefactor({2}, 20) == "0.28209479177387814347");
  }
  SUBCASE("increasing in n") {
    for (int t : {1, 2, 3, 4}) {
      double previous = 0;
      for (int n = 1; n <= 100; ++n) {
        double v = std::stod(asymptotic_kappa({t}, n, 30));
        CHECK(v > previous);
        previous = v;
      }
    }
  }
}
