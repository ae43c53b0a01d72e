#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace klcells {

using Coeff = std::int64_t;

/// Polynomial in q with integer coefficients; coefficients()[k] is the
/// coefficient of q^k and the highest stored coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Coeff> coefficients);

  static IntPolynomial constant(Coeff c) { return IntPolynomial({c}); }
  static IntPolynomial monomial(Coeff c, int degree);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Coeff coefficient(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0; }
  const std::vector<Coeff>& coefficients() const { return c_; }
  Coeff at_zero() const { return coefficient(0); }
  Coeff evaluate(Coeff q) const;

  /// Multiplication by q^k, k >= 0.
  IntPolynomial shifted(int k) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(Coeff s, const IntPolynomial& a);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "1 + q + 2q^2", "0" for zero.
  std::string str() const;
  /// "c0,c1,...,cd" ("" for zero); the cache-file encoding.
  std::string csv() const;
  static IntPolynomial from_csv(std::string_view text);

 private:
  void trim();
  std::vector<Coeff> c_;
};

/// Laurent polynomial in v with v^2 = q.  Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(Coeff c) { return monomial(c, 0); }
  static LaurentPoly monomial(Coeff c, int exponent);
  static LaurentPoly v() { return monomial(1, 1); }
  static LaurentPoly q() { return monomial(1, 2); }
  /// P(q) rewritten in v.
  static LaurentPoly from_q(const IntPolynomial& p);

  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(int e) const;
  const std::map<int, Coeff>& terms() const { return terms_; }
  /// Lowest / highest exponent; undefined on zero.
  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }

  /// Multiplication by v^k.
  LaurentPoly shifted(int k) const;
  /// v -> v^-1.
  LaurentPoly bar() const;
  /// Value at v = 1.
  Coeff at_one() const;
  /// Inverse of from_q; throws if odd or negative exponents occur.
  IntPolynomial to_q() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// "v^-1 + v", "0" for zero.
  std::string str() const;

 private:
  void add_term(int e, Coeff c);
  std::map<int, Coeff> terms_;
};

}  // namespace klcells
