#pragma once

// Forward-mode dual numbers.
//
// A Dual<T> carries a value and up to kMaxDirections perturbation slots. The
// inner type T may itself be a Dual, which gives nested (higher-order)
// differentiation: Dual<Dual<double>> yields exact second partials.
//
// Slots past `width` are always zero, so binary operations only touch
// max(a.width, b.width) slots and constants (width 0) cost almost nothing.

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <type_traits>

namespace stokes {

inline constexpr int kMaxDirections = 6;

template <class T>
struct Dual;

template <class T>
struct is_dual : std::false_type {};
template <class T>
struct is_dual<Dual<T>> : std::true_type {};
template <class T>
inline constexpr bool is_dual_v = is_dual<T>::value;

/// Nesting depth of a carrier: double is 0, Dual<double> is 1, and so on.
template <class S>
struct carrier_depth : std::integral_constant<int, 0> {};
template <class T>
struct carrier_depth<Dual<T>>
    : std::integral_constant<int, 1 + carrier_depth<T>::value> {};
template <class S>
inline constexpr int carrier_depth_v = carrier_depth<S>::value;

template <class S>
concept Carrier = std::same_as<S, double> || is_dual_v<S>;

template <class T>
struct Dual {
  T v{};
  std::array<T, kMaxDirections> d{};
  int width = 0;

  Dual() = default;
  Dual(double c) : v(c) {}  // NOLINT: implicit promotion is the point
  Dual(T value, int w) : v(std::move(value)), width(w) {}

  /// Independent variable seeded along direction `slot` of a `w`-wide tangent.
  static Dual variable(T value, int slot, int w) {
    Dual r(std::move(value), w);
    r.d[static_cast<std::size_t>(slot)] = T(1.0);
    return r;
  }

  Dual& operator+=(const Dual& b) { return *this = *this + b; }
  Dual& operator-=(const Dual& b) { return *this = *this - b; }
  Dual& operator*=(const Dual& b) { return *this = *this * b; }
  Dual& operator/=(const Dual& b) { return *this = *this / b; }

  friend Dual operator+(const Dual& a, const Dual& b) {
    Dual r(a.v + b.v, std::max(a.width, b.width));
    for (int t = 0; t < r.width; ++t) r.d[t] = a.d[t] + b.d[t];
    return r;
  }
  friend Dual operator-(const Dual& a, const Dual& b) {
    Dual r(a.v - b.v, std::max(a.width, b.width));
    for (int t = 0; t < r.width; ++t) r.d[t] = a.d[t] - b.d[t];
    return r;
  }
  friend Dual operator-(const Dual& a) {
    Dual r(-a.v, a.width);
    for (int t = 0; t < r.width; ++t) r.d[t] = -a.d[t];
    return r;
  }
  friend Dual operator*(const Dual& a, const Dual& b) {
    Dual r(a.v * b.v, std::max(a.width, b.width));
    for (int t = 0; t < r.width; ++t) r.d[t] = a.v * b.d[t] + a.d[t] * b.v;
    return r;
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    Dual r(a.v / b.v, std::max(a.width, b.width));
    for (int t = 0; t < r.width; ++t)
      r.d[t] = (a.d[t] * b.v - a.v * b.d[t]) / (b.v * b.v);
    return r;
  }

  // Chain rule for a unary primitive with value fv and derivative dfv.
  static Dual lift(const Dual& a, T fv, const T& dfv) {
    Dual r(std::move(fv), a.width);
    for (int t = 0; t < r.width; ++t) r.d[t] = dfv * a.d[t];
    return r;
  }

  friend Dual sin(const Dual& a) {
    using std::cos;
    using std::sin;
    return lift(a, sin(a.v), cos(a.v));
  }
  friend Dual cos(const Dual& a) {
    using std::cos;
    using std::sin;
    return lift(a, cos(a.v), -sin(a.v));
  }
  friend Dual exp(const Dual& a) {
    using std::exp;
    T e = exp(a.v);
    return lift(a, e, e);
  }
  friend Dual log(const Dual& a) {
    using std::log;
    return lift(a, log(a.v), T(1.0) / a.v);
  }
  friend Dual sqrt(const Dual& a) {
    using std::sqrt;
    T s = sqrt(a.v);
    return lift(a, s, T(0.5) / s);
  }
};

using Dual1 = Dual<double>;
using Dual2 = Dual<Dual1>;

/// Real part of any carrier, peeling every nesting level.
template <Carrier S>
double valueOf(const S& s) {
  if constexpr (std::same_as<S, double>) {
    return s;
  } else {
    return valueOf(s.v);
  }
}

/// Nonnegative integer power by binary exponentiation; shared by every
/// carrier so the value part matches plain double arithmetic exactly.
template <Carrier S>
S ipow(const S& base, unsigned exponent) {
  S result(1.0);
  S b = base;
  bool first = true;
  while (exponent != 0) {
    if (exponent & 1U) {
      result = first ? b : result * b;
      first = false;
    }
    exponent >>= 1U;
    if (exponent != 0) b = b * b;
  }
  return result;
}

}  // namespace stokes
