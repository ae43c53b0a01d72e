#include "klcells/polynomial.hpp"

#include <charconv>

#include "klcells/errors.hpp"

namespace klcells {

namespace {

// Appends "c<var>^e" to s with a leading sign separator when s is nonempty.
void append_term(std::string& s, Coeff c, int e, const char* var) {
  if (c == 0) return;
  const Coeff mag = c < 0 ? -c : c;
  if (s.empty()) {
    if (c < 0) s += '-';
  } else {
    s += c < 0 ? " - " : " + ";
  }
  if (e == 0) {
    s += std::to_string(mag);
    return;
  }
  if (mag != 1) s += std::to_string(mag);
  s += var;
  if (e != 1) s += '^' + std::to_string(e);
}

}  // namespace

// ---------------------------------------------------------------- IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Coeff> coefficients) : c_(std::move(coefficients)) { trim(); }

IntPolynomial IntPolynomial::monomial(Coeff c, int degree) {
  if (degree < 0) throw InputError("negative degree in monomial");
  std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Coeff IntPolynomial::evaluate(Coeff q) const {
  Coeff acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (k < 0) throw InputError("negative shift of IntPolynomial");
  if (is_zero()) return {};
  std::vector<Coeff> v(static_cast<std::size_t>(k), 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Coeff> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(Coeff s, const IntPolynomial& a) {
  std::vector<Coeff> v = a.c_;
  for (auto& x : v) x *= s;
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::str() const {
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) append_term(s, c_[k], static_cast<int>(k), "q");
  return s.empty() ? "0" : s;
}

std::string IntPolynomial::csv() const {
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(c_[k]);
  }
  return s;
}

IntPolynomial IntPolynomial::from_csv(std::string_view text) {
  std::vector<Coeff> v;
  if (text.empty()) return {};
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    Coeff x = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), x);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
      throw InputError("bad coefficient list '" + std::string(text) + "'");
    v.push_back(x);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return IntPolynomial(std::move(v));
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::monomial(Coeff c, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::from_q(const IntPolynomial& p) {
  LaurentPoly out;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) out.add_term(2 * static_cast<int>(k), p.coefficients()[k]);
  return out;
}

void LaurentPoly::add_term(int e, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Coeff LaurentPoly::coefficient(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (auto [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (auto [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

Coeff LaurentPoly::at_one() const {
  Coeff s = 0;
  for (auto [e, c] : terms_) s += c;
  return s;
}

IntPolynomial LaurentPoly::to_q() const {
  if (is_zero()) return {};
  if (min_degree() < 0) throw InputError("negative power of v in to_q");
  std::vector<Coeff> v(static_cast<std::size_t>(max_degree() / 2) + 1, 0);
  for (auto [e, c] : terms_) {
    if (e % 2 != 0) throw InputError("odd power of v in to_q");
    v[static_cast<std::size_t>(e / 2)] = c;
  }
  return IntPolynomial(std::move(v));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (auto [ea, ca] : a.terms_)
    for (auto [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

std::string LaurentPoly::str() const {
  std::string s;
  for (auto [e, c] : terms_) append_term(s, c, e, "v");
  return s.empty() ? "0" : s;
}

}  // namespace klcells
