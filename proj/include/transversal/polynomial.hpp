#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace transversal {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial in t with exact integer coefficients, stored in
/// ascending powers. Always normalized: no trailing zeros, and the zero
/// polynomial is the empty sequence.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  /// c * t^k
  static IntPolynomial monomial(const BigInt& c, std::size_t k);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of t^k; zero past the degree.
  BigInt coeff(std::size_t k) const;

  /// Horner evaluation.
  BigInt eval(const BigInt& x) const;

  IntPolynomial& operator+=(const IntPolynomial& q);
  IntPolynomial& operator-=(const IntPolynomial& q);

  /// `[8, 12, 6, 1]`
  std::string to_list_string() const;
  /// `8 + 12t + 6t^2 + t^3`
  std::string to_human_string() const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  std::vector<BigInt> coeffs_;
  void normalize();
};

IntPolynomial operator+(IntPolynomial p, const IntPolynomial& q);
IntPolynomial operator-(IntPolynomial p, const IntPolynomial& q);
IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial scalar_mul(const BigInt& c, const IntPolynomial& p);
IntPolynomial shift_mul_by_t(const IntPolynomial& p, std::size_t k);

/// t - 1, the contraction multiplier.
IntPolynomial t_minus_one();

/// Sparse bivariate polynomial in t and s; zero coefficients are never stored.
class BiPolynomial {
 public:
  using Key = std::pair<std::size_t, std::size_t>;  // (t power, s power)

  BiPolynomial() = default;

  void add_term(std::size_t t_power, std::size_t s_power, const BigInt& c);
  BigInt coeff(std::size_t t_power, std::size_t s_power) const;
  const std::map<Key, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Substitute s = s0 and collect in t.
  IntPolynomial specialize_s(const BigInt& s0 = 1) const;

  /// `3s + 2ts^2`, terms ordered by (t power, s power).
  std::string to_human_string() const;

  bool operator==(const BiPolynomial&) const = default;

 private:
  std::map<Key, BigInt> terms_;
};

inline IntPolynomial specialize_s(const BiPolynomial& z, const BigInt& s0 = 1) {
  return z.specialize_s(s0);
}

}  // namespace transversal
