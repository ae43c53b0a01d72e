#include "klcells/permutation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <string>

#include <json.hpp>

#include "klcells/errors.hpp"

namespace klcells {

int DescentSet::size() const { return std::popcount(mask_); }

std::vector<int> DescentSet::members() const {
  std::vector<int> out;
  for (int i = 1; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string DescentSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) s += ',';
    s += "s" + std::to_string(i);
    first = false;
  }
  return s + "}";
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = degree();
  if (n > kHardMaxDegree)
    throw BoundError("permutation degree " + std::to_string(n) + " exceeds hard limit " +
                     std::to_string(kHardMaxDegree));
  std::vector<bool> seen(n + 1, false);
  for (int x : word_) {
    if (x < 1 || x > n || seen[x])
      throw InputError("not a permutation of 1.." + std::to_string(n));
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw InputError("negative degree");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  if (n < 0) throw InputError("negative degree");
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::simple(int n, int i) {
  return multiply_simple(identity(n), i, Side::Right);
}

Permutation Permutation::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InputError("empty permutation");
  std::vector<int> word;
  if (text.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed permutation array: ") + e.what());
    }
    if (!j.is_array()) throw InputError("permutation must be a JSON array");
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw InputError("permutation entries must be integers");
      word.push_back(x.get<int>());
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw InputError("bad digit '" + std::string(1, c) + "' in permutation");
      word.push_back(c - '0');
    }
  }
  return Permutation(std::move(word));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 0; i < degree(); ++i) inv[word_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < degree(); ++i)
    for (int j = i + 1; j < degree(); ++j)
      if (word_[i] > word_[j]) ++inv;
  return inv;
}

DescentSet Permutation::right_descents() const {
  DescentSet d;
  for (int i = 1; i < degree(); ++i)
    if (word_[i - 1] > word_[i]) d.insert(i);
  return d;
}

DescentSet Permutation::left_descents() const {
  // s_i w < w iff the letter i+1 sits to the left of the letter i.
  std::vector<int> pos(degree() + 1);
  for (int i = 0; i < degree(); ++i) pos[word_[i]] = i;
  DescentSet d;
  for (int i = 1; i < degree(); ++i)
    if (pos[i + 1] < pos[i]) d.insert(i);
  return d;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (word_[i] != i + 1) return false;
  return true;
}

std::string Permutation::str() const {
  std::string s;
  if (degree() <= 9) {
    for (int x : word_) s += static_cast<char>('0' + x);
    return s;
  }
  s = "[";
  for (int i = 0; i < degree(); ++i) {
    if (i) s += ',';
    s += std::to_string(word_[i]);
  }
  return s + "]";
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree()) throw InputError("degree mismatch in compose");
  std::vector<int> w(u.degree());
  for (int i = 1; i <= u.degree(); ++i) w[i - 1] = u(v(i));
  return Permutation(std::move(w));
}

int length(const Permutation& w) { return w.length(); }
DescentSet left_descents(const Permutation& w) { return w.left_descents(); }
DescentSet right_descents(const Permutation& w) { return w.right_descents(); }

Permutation multiply_simple(const Permutation& w, int i, Side side) {
  const int n = w.degree();
  if (i < 1 || i >= n) throw InputError("simple reflection s" + std::to_string(i) + " out of range for S" + std::to_string(n));
  std::vector<int> word(w.word().begin(), w.word().end());
  if (side == Side::Right) {
    std::swap(word[i - 1], word[i]);
  } else {
    for (int& x : word) {
      if (x == i) x = i + 1;
      else if (x == i + 1) x = i;
    }
  }
  return Permutation(std::move(word));
}

Permutation multiply_simple(const Permutation& w, SimpleReflection s, Side side) {
  return multiply_simple(w, s.index, side);
}

bool bruhat_leq(const Permutation& y, const Permutation& w) {
  if (y.degree() != w.degree()) throw InputError("degree mismatch in bruhat_leq");
  const int n = y.degree();
  std::vector<int> ys, ws;
  ys.reserve(n);
  ws.reserve(n);
  for (int k = 0; k < n; ++k) {
    ys.insert(std::upper_bound(ys.begin(), ys.end(), y.word()[k]), y.word()[k]);
    ws.insert(std::upper_bound(ws.begin(), ws.end(), w.word()[k]), w.word()[k]);
    for (int t = 0; t <= k; ++t)
      if (ys[t] > ws[t]) return false;
  }
  return true;
}

std::vector<SimpleReflection> reduced_word(const Permutation& w) {
  std::vector<SimpleReflection> rev;
  Permutation cur = w;
  for (;;) {
    const DescentSet d = cur.right_descents();
    if (d.empty()) break;
    const int i = d.members().front();
    rev.push_back({i});
    cur = multiply_simple(cur, i, Side::Right);
  }
  return {rev.rbegin(), rev.rend()};
}

Permutation from_reduced_word(int n, std::span<const SimpleReflection> word) {
  Permutation w = Permutation::identity(n);
  for (auto s : word) w = multiply_simple(w, s.index, Side::Right);
  return w;
}

Permutation min_coset_rep(const Permutation& w, int i, int j) {
  if (std::abs(i - j) != 1) throw InputError("min_coset_rep needs |i - j| = 1");
  const int n = w.degree();
  if (std::min(i, j) < 1 || std::max(i, j) >= n) throw InputError("reflection index out of range");
  Permutation cur = w;
  for (;;) {
    const DescentSet d = cur.right_descents();
    if (d.contains(i)) cur = multiply_simple(cur, i, Side::Right);
    else if (d.contains(j)) cur = multiply_simple(cur, j, Side::Right);
    else return cur;
  }
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::vector<Permutation> enumerate(int n, int max_degree) {
  if (n < 1) throw InputError("enumerate needs n >= 1");
  if (n > std::min(max_degree, kHardMaxDegree))
    throw BoundError("degree " + std::to_string(n) + " exceeds limit " + std::to_string(std::min(max_degree, kHardMaxDegree)));
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::uint64_t lex_rank(const Permutation& w) {
  const int n = w.degree();
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (w.word()[j] < w.word()[i]) ++smaller;
    r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
  }
  return r;
}

Permutation lex_unrank(int n, std::uint64_t rank) {
  if (rank >= factorial(n)) throw InputError("rank out of range");
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[i] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> word;
  word.reserve(n);
  for (int i = 0; i < n; ++i) {
    word.push_back(pool[digits[i]]);
    pool.erase(pool.begin() + digits[i]);
  }
  return Permutation(std::move(word));
}

}  // namespace klcells
