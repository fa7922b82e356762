#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace coxeter {

using Rational = mpq_class;

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

/// An exact element of the real field Q(sqrt2, sqrt3, sqrt5).
///
/// Stored as eight rational coordinates over the basis
/// {1, r2, r3, r5, r6, r10, r15, r30} where rK denotes the positive square
/// root of K. Every value -cos(pi/m) for m in {2,...,6} and the constant -1
/// live here, which is all the bilinear form of a supported Coxeter graph
/// ever needs. Values are immutable once built; the arithmetic operators
/// return fresh values.
class FieldElem {
 public:
  static constexpr int kDim = 8;
  /// Radicand of each basis element, in coordinate order.
  static constexpr std::array<int, kDim> kRadicand = {1, 2, 3, 5, 6, 10, 15, 30};

  FieldElem() = default;
  FieldElem(long value);  // NOLINT(google-explicit-constructor)
  explicit FieldElem(const Rational& value);

  /// sqrt(k) for k one of the radicands above.
  static FieldElem sqrt_of(int k);
  static FieldElem basis(int index);

  const Rational& coord(int index) const { return c_[index]; }
  bool is_zero() const;
  bool is_rational() const;
  bool is_one() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& other);
  FieldElem& operator-=(const FieldElem& other);
  FieldElem& operator*=(const FieldElem& other);
  /// Throws DivisionByZero on a zero argument.
  FieldElem inverse() const;
  FieldElem& operator/=(const FieldElem& other) { return *this *= other.inverse(); }
  /// Multiply by a rational scalar in place.
  FieldElem& scale(const Rational& factor);

  /// Adds a * b to this value without building a temporary for the product.
  void add_product(const FieldElem& a, const FieldElem& b);
  void sub_product(const FieldElem& a, const FieldElem& b);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    return a * b.inverse();
  }
  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  /// Exact sign of the real number. Zero is decided symbolically; otherwise
  /// rational enclosures of the radicals are refined until they separate
  /// the value from zero.
  Sign sign() const;

  /// Conjugate under the field automorphism negating sqrt(p), p in {2,3,5}.
  FieldElem conjugate(int prime) const;

  /// Floating approximation. Display and ordering only; never used to
  /// decide anything.
  double approx() const;

  /// "a + b*r2 + ... + h*r30" with reduced rational coefficients and zero
  /// terms omitted; "0" for zero.
  std::string to_string() const;
  /// Inverse of to_string(); also accepts unit coefficients written bare
  /// ("r5", "-r2") and an explicit "*". Throws Error on malformed input.
  static FieldElem parse(std::string_view text);

  std::size_t hash() const;
  /// Total order on coordinates (not the real order). For container keys.
  friend bool lex_less(const FieldElem& a, const FieldElem& b);

 private:
  std::array<Rational, kDim> c_{};
};

/// cos(pi/m) exactly, for m in {2,...,6}; UnsupportedLabel otherwise.
FieldElem cos_pi_over(int m);

std::string to_string(const Rational& q);

}  // namespace coxeter

template <>
struct std::hash<coxeter::FieldElem> {
  std::size_t operator()(const coxeter::FieldElem& x) const noexcept { return x.hash(); }
};
