#include "klcells/hecke.hpp"

#include <algorithm>

#include "klcells/errors.hpp"
#include "klcells/kl.hpp"

namespace klcells {

HeckeElement HeckeElement::basis(const Permutation& w) {
  HeckeElement x(w.degree());
  x.add(w, LaurentPoly::constant(1));
  return x;
}

LaurentPoly HeckeElement::coefficient(const Permutation& w) const {
  auto it = coords_.find(w);
  return it == coords_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add(const Permutation& w, const LaurentPoly& c) {
  if (w.degree() != n_) throw InputError("Hecke element degree mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (o.n_ != n_) throw InputError("Hecke element degree mismatch");
  for (const auto& [w, c] : o.coords_) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  if (o.n_ != n_) throw InputError("Hecke element degree mismatch");
  for (const auto& [w, c] : o.coords_) add(w, -c);
  return *this;
}

HeckeElement operator*(const LaurentPoly& c, const HeckeElement& x) {
  HeckeElement out(x.n_);
  for (const auto& [w, a] : x.coords_) out.add(w, c * a);
  return out;
}

std::string HeckeElement::str() const {
  if (coords_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : coords_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ") T_" + w.str();
  }
  return s;
}

namespace {

// T_s T_w = T_{sw} if sw > w, else q T_{sw} + (q - 1) T_w; `side` says
// on which side s multiplies.
HeckeElement multiply_generator(const HeckeElement& x, int i, Side side) {
  if (i < 1 || i >= x.degree()) throw InputError("generator index out of range");
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly q_minus_one = q - LaurentPoly::constant(1);
  HeckeElement out(x.degree());
  for (const auto& [w, c] : x.coordinates()) {
    const Permutation sw = multiply_simple(w, i, side);
    if (sw.length() > w.length()) {
      out.add(sw, c);
    } else {
      out.add(sw, q * c);
      out.add(w, q_minus_one * c);
    }
  }
  return out;
}

}  // namespace

HeckeElement generator_times(int i, const HeckeElement& x) { return multiply_generator(x, i, Side::Left); }

HeckeElement times_generator(const HeckeElement& x, int i) { return multiply_generator(x, i, Side::Right); }

HeckeElement inverse_generator_times(int i, const HeckeElement& x) {
  const LaurentPoly q_inv = LaurentPoly::monomial(1, -2);
  return q_inv * generator_times(i, x) + (q_inv - LaurentPoly::constant(1)) * x;
}

HeckeElement t_multiply(const HeckeElement& a, const HeckeElement& b) {
  if (a.degree() != b.degree()) throw InputError("degree mismatch in t_multiply");
  HeckeElement out(a.degree());
  for (const auto& [x, c] : a.coordinates()) {
    // T_x b = T_{i1} (T_{i2} ( ... (T_{ir} b)))
    HeckeElement acc = b;
    const auto word = reduced_word(x);
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = generator_times(it->index, acc);
    out += c * acc;
  }
  return out;
}

HeckeElement bar(const HeckeElement& x) {
  HeckeElement out(x.degree());
  for (const auto& [w, c] : x.coordinates()) {
    // bar(T_w) = T_{i1}^-1 ... T_{ir}^-1 for a reduced word s_{i1} ... s_{ir} of w.
    HeckeElement acc = HeckeElement::basis(Permutation::identity(x.degree()));
    const auto word = reduced_word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = inverse_generator_times(it->index, acc);
    out += c.bar() * acc;
  }
  return out;
}

HeckeElement c_prime(const Permutation& w) {
  const int n = w.degree();
  auto& engine = kl_engine(n);
  const auto& g = engine.group();
  const auto wi = g.index_of(w);
  HeckeElement out(n);
  for (SymmetricGroup::Index y = 0; y < g.order(); ++y) {
    if (!g.bruhat_leq(y, wi)) continue;
    out.add(g.element(y), LaurentPoly::from_q(engine.polynomial(y, wi)).shifted(-w.length()));
  }
  return out;
}

std::map<Permutation, LaurentPoly> c_prime_coordinates(const HeckeElement& x) {
  std::map<Permutation, LaurentPoly> out;
  HeckeElement rest = x;
  while (!rest.is_zero()) {
    const auto top = std::max_element(rest.coordinates().begin(), rest.coordinates().end(),
                                      [](const auto& a, const auto& b) {
                                        const int la = a.first.length(), lb = b.first.length();
                                        return la != lb ? la < lb : a.first < b.first;
                                      });
    const Permutation w = top->first;
    // C'_w has T_w-coefficient v^{-l(w)}.
    const LaurentPoly c = top->second.shifted(w.length());
    out[w] = c;
    rest -= c * c_prime(w);
  }
  return out;
}

std::map<Permutation, LaurentPoly> c_prime_product_expansion(int i, const Permutation& w) {
  const HeckeElement s = c_prime(Permutation::simple(w.degree(), i));
  return c_prime_coordinates(t_multiply(s, c_prime(w)));
}

std::map<Permutation, Coeff> kl_action_q1(int i, const Permutation& w) {
  const int n = w.degree();
  if (i < 1 || i >= n) throw InputError("generator index out of range");
  std::map<Permutation, Coeff> out;
  const Permutation sw = multiply_simple(w, i, Side::Left);
  if (sw.length() < w.length()) {
    out[w] = -1;
    return out;
  }
  out[w] += 1;
  out[sw] += 1;
  auto& engine = kl_engine(n);
  const auto& g = engine.group();
  for (const auto& [z, m] : engine.mu_below(g.index_of(w))) {
    if (g.length(g.left_multiply(i, z)) < g.length(z)) out[g.element(z)] += m;
  }
  return out;
}

}  // namespace klcells
