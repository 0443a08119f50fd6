#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "umap/half_type.hpp"

namespace umap {

using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigCount factorial(int n);
BigCount catalan(int m);
/// n·(n−2)·…, with 0!! = 1!! = 1. Negative arguments give 1 as well.
BigCount double_factorial(int n);
/// Zero when k < 0 or k > n, including negative n.
BigCount binomial(int n, int k);

/// Orientable precubic unicellular maps of genus h with 2m+1 edges.
BigCount xi(int h, int m);

/// c_h from the closed sum, and from the first-order recurrence.
Rational c_const(int h);
Rational c_const_recurrence(int h);

/// Non-orientable precubic unicellular maps of type h. Zero outside the
/// support; throws Error(invalid_argument) for h = 0.
BigCount eta(HalfInteger h, int m);

/// K_h with η_h(m) = K_h·(2m)!/(m!(m+1−3h)!) for integer h and
/// η_h(m) = K_h·4^m(m−1)!/(m−1−3⌊h⌋)! otherwise.
Rational k_const(HalfInteger h);

/// ℓ = m + 4 − 3h − ½[h ∉ ℕ], the number of non-root leaves of a precubic
/// map of type h − 1 with the same edge count.
int ell(HalfInteger h, int m);

/// Number of maps of type h with one marked intertwined node, counted by
/// gluing three leaves of smaller maps.
BigCount marked_count(HalfInteger h, int m);

bool recursion_check(HalfInteger h, int m);
bool remy_recursion_check(HalfInteger h, int m);

/// Leading-order estimate of the number of non-orientable rooted unicellular
/// maps of type h with n edges, as a decimal with `digits` significant digits.
std::string asymptotic_kappa(HalfInteger h, int n, int digits = 50);
/// The n-independent factor of asymptotic_kappa.
std::string asymptotic_prefactor(HalfInteger h, int digits = 50);

}  // namespace umap
