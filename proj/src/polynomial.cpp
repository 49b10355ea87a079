#include "transversal/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace transversal {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> coeffs(k + 1);
  coeffs[k] = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& q) {
  if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] += q.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& q) {
  if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] -= q.coeffs_[k];
  normalize();
  return *this;
}

std::string IntPolynomial::to_list_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) os << ", ";
    os << coeffs_[k];
  }
  os << ']';
  return os.str();
}

namespace {

std::string power_suffix(std::string_view var, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return std::string(var);
  return std::string(var) + "^" + std::to_string(k);
}

// Appends `c * monomial` with sign handling; `monomial` empty for constants.
void append_term(std::ostringstream& os, bool first, const BigInt& c, const std::string& monomial) {
  const bool negative = c < 0;
  const BigInt magnitude = negative ? BigInt(-c) : c;
  if (first) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  if (monomial.empty() || magnitude != 1) os << magnitude;
  os << monomial;
}

}  // namespace

std::string IntPolynomial::to_human_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    append_term(os, first, coeffs_[k], power_suffix("t", k));
    first = false;
  }
  return os.str();
}

IntPolynomial operator+(IntPolynomial p, const IntPolynomial& q) { return p += q; }
IntPolynomial operator-(IntPolynomial p, const IntPolynomial& q) { return p -= q; }

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<BigInt> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

IntPolynomial scalar_mul(const BigInt& c, const IntPolynomial& p) {
  std::vector<BigInt> coeffs = p.coeffs();
  for (auto& x : coeffs) x *= c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial shift_mul_by_t(const IntPolynomial& p, std::size_t k) {
  if (p.is_zero()) return {};
  std::vector<BigInt> coeffs(k);
  coeffs.insert(coeffs.end(), p.coeffs().begin(), p.coeffs().end());
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial t_minus_one() { return IntPolynomial{-1, 1}; }

void BiPolynomial::add_term(std::size_t t_power, std::size_t s_power, const BigInt& c) {
  if (c == 0) return;
  const Key key{t_power, s_power};
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt BiPolynomial::coeff(std::size_t t_power, std::size_t s_power) const {
  auto it = terms_.find({t_power, s_power});
  return it == terms_.end() ? BigInt(0) : it->second;
}

IntPolynomial BiPolynomial::specialize_s(const BigInt& s0) const {
  std::vector<BigInt> coeffs;
  for (const auto& [key, c] : terms_) {
    const auto [tp, sp] = key;
    if (coeffs.size() <= tp) coeffs.resize(tp + 1);
    coeffs[tp] += c * boost::multiprecision::pow(s0, static_cast<unsigned>(sp));
  }
  return IntPolynomial(std::move(coeffs));
}

std::string BiPolynomial::to_human_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    append_term(os, first, c, power_suffix("t", key.first) + power_suffix("s", key.second));
    first = false;
  }
  return os.str();
}

}  // namespace transversal
