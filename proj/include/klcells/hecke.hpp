#pragma once

#include <map>
#include <string>

#include "klcells/permutation.hpp"
#include "klcells/polynomial.hpp"

namespace klcells {

/// Element of the Hecke algebra of S_n in the T-basis, coefficients in
/// Z[v, v^-1] with q = v^2.  The relations are (T_i - q)(T_i + 1) = 0 plus
/// the braid relations.
class HeckeElement {
 public:
  explicit HeckeElement(int n = 0) : n_(n) {}
  /// T_w
  static HeckeElement basis(const Permutation& w);

  int degree() const { return n_; }
  const std::map<Permutation, LaurentPoly>& coordinates() const { return coords_; }
  LaurentPoly coefficient(const Permutation& w) const;
  bool is_zero() const { return coords_.empty(); }

  void add(const Permutation& w, const LaurentPoly& c);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& c, const HeckeElement& x);
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  /// "(v^-1) T_123 + (v^-1) T_213" style, "0" for zero.
  std::string str() const;

 private:
  int n_;
  std::map<Permutation, LaurentPoly> coords_;
};

/// T_i * x
HeckeElement generator_times(int i, const HeckeElement& x);
/// x * T_i
HeckeElement times_generator(const HeckeElement& x, int i);
/// T_i^-1 * x, using T_i^-1 = q^-1 T_i + (q^-1 - 1).
HeckeElement inverse_generator_times(int i, const HeckeElement& x);

HeckeElement t_multiply(const HeckeElement& a, const HeckeElement& b);

/// Ring involution v -> v^-1, T_w -> (T_{w^-1})^-1.
HeckeElement bar(const HeckeElement& x);

/// C'_w = v^{-l(w)} sum_{y <= w} P_{y,w}(v^2) T_y.
HeckeElement c_prime(const Permutation& w);

/// Coordinates of x in the C'-basis, by peeling off the longest T-term.
std::map<Permutation, LaurentPoly> c_prime_coordinates(const HeckeElement& x);

/// C'_{s_i} * C'_w rewritten in the C'-basis.
std::map<Permutation, LaurentPoly> c_prime_product_expansion(int i, const Permutation& w);

/// Coordinates of s_i a(w) in the basis a(x) = C_x at q = 1:
///   -a(w)                                             if s_i w < w,
///   a(w) + a(s_i w) + sum_{z < w, s_i z < z} mu(z,w) a(z)   if s_i w > w.
std::map<Permutation, Coeff> kl_action_q1(int i, const Permutation& w);

}  // namespace klcells
