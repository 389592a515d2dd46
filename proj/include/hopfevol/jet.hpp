#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <Eigen/Core>

#include "hopfevol/errors.hpp"

namespace hopfevol {

using Complex = std::complex<double>;

/// Tag naming the formal deformation parameter a Jet is truncated in.
enum class Param : std::uint8_t { None, Z, H, InvKappa };

inline const char* param_name(Param p) {
  switch (p) {
    case Param::None: return "none";
    case Param::Z: return "z";
    case Param::H: return "h";
    case Param::InvKappa: return "inv_kappa";
  }
  return "?";
}

inline Param param_from_name(const std::string& s) {
  if (s == "none") return Param::None;
  if (s == "z") return Param::Z;
  if (s == "h") return Param::H;
  if (s == "inv_kappa") return Param::InvKappa;
  throw UnknownId("param tag '" + s + "'");
}

inline Param merge_params(Param a, Param b) {
  if (a == Param::None) return b;
  if (b == Param::None) return a;
  if (a != b)
    throw ParamMismatch(std::string(param_name(a)) + " vs " + param_name(b));
  return a;
}

/// First-order truncated scalar a0 + a1*eps with eps^2 == 0.
///
/// The formal parameter eps is identified by the tag; combining two Jets
/// with different non-"none" tags throws ParamMismatch.  A tag of "none"
/// means the value is an ordinary complex number (a1 must stay zero).
/// Conjugation treats eps as real and conjugates both orders.
struct Jet {
  Complex a0{0.0, 0.0};
  Complex a1{0.0, 0.0};
  Param tag{Param::None};

  Jet() = default;
  Jet(double re) : a0(re) {}  // NOLINT: implicit, lets Scalar(0) work in Eigen
  Jet(Complex v) : a0(v) {}   // NOLINT
  Jet(Complex v0, Complex v1, Param p) : a0(v0), a1(v1), tag(p) {
    if (tag == Param::None && a1 != 0.0)
      throw ParamMismatch("order-1 coefficient requires a named parameter");
  }

  /// Value at a concrete parameter, a0 + a1*eps.
  Complex at(Complex eps) const { return a0 + a1 * eps; }

  bool is_zero() const { return a0 == 0.0 && a1 == 0.0; }

  Jet& operator+=(const Jet& o) {
    tag = merge_params(tag, o.tag);
    a0 += o.a0;
    a1 += o.a1;
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    tag = merge_params(tag, o.tag);
    a0 -= o.a0;
    a1 -= o.a1;
    return *this;
  }
  Jet& operator*=(const Jet& o) {
    tag = merge_params(tag, o.tag);
    a1 = a0 * o.a1 + a1 * o.a0;  // truncation: no eps^2 term
    a0 = a0 * o.a0;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator-(const Jet& a) { return Jet(-a.a0, -a.a1, a.tag); }
  friend Jet operator+(const Jet& a) { return a; }

  /// Division: (a0+a1 eps)/(b0+b1 eps), requires b0 != 0.
  friend Jet operator/(const Jet& a, const Jet& b) {
    Param t = merge_params(a.tag, b.tag);
    Complex q0 = a.a0 / b.a0;
    return Jet(q0, (a.a1 - q0 * b.a1) / b.a0, t);
  }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }

  friend bool operator==(const Jet& a, const Jet& b) {
    return a.a0 == b.a0 && a.a1 == b.a1;
  }
  friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }
};

/// Conjugation; the formal parameter is treated as real.
inline Jet conj(const Jet& j) {
  return Jet(std::conj(j.a0), std::conj(j.a1), j.tag);
}

inline double max_abs(const Jet& j) {
  return std::max(std::abs(j.a0), std::abs(j.a1));
}

/// Strict ordering usable as a map key (tag, then lexicographic components).
inline bool jet_less(const Jet& a, const Jet& b) {
  if (a.tag != b.tag) return a.tag < b.tag;
  if (a.a0.real() != b.a0.real()) return a.a0.real() < b.a0.real();
  if (a.a0.imag() != b.a0.imag()) return a.a0.imag() < b.a0.imag();
  if (a.a1.real() != b.a1.real()) return a.a1.real() < b.a1.real();
  return a.a1.imag() < b.a1.imag();
}

std::ostream& operator<<(std::ostream& os, const Jet& j);

}  // namespace hopfevol

namespace Eigen {

template <>
struct NumTraits<hopfevol::Jet> : GenericNumTraits<hopfevol::Jet> {
  typedef hopfevol::Jet Real;
  typedef hopfevol::Jet NonInteger;
  typedef hopfevol::Jet Nested;
  typedef double Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 6,
    MulCost = 20
  };
  static inline double epsilon() { return NumTraits<double>::epsilon(); }
  static inline double dummy_precision() { return 1e-12; }
  static inline int digits10() { return NumTraits<double>::digits10(); }
};

}  // namespace Eigen
