#pragma once

// Brute-force reference implementations used only by the tests.  They work
// on plain std::vector<int> words and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Word = std::vector<int>;
using Laurent = std::map<int, std::int64_t>;  // exponent of v -> coefficient

inline Word identity(int n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

inline std::vector<Word> all_perms(int n) {
  std::vector<Word> out;
  Word w = identity(n);
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline int inversions(const Word& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
  return c;
}

// w * s_i: swap positions i, i+1.
inline Word times_s(Word w, int i) {
  std::swap(w[i - 1], w[i]);
  return w;
}

// s_i * w: swap the letters i, i+1.
inline Word s_times(int i, Word w) {
  for (int& x : w)
    if (x == i)
      x = i + 1;
    else if (x == i + 1)
      x = i;
  return w;
}

// Bubble sort: each swap of positions k, k+1 is a right factor s_k, so
// w = s_{k_r} ... s_{k_1} where k_1 is the first swap performed.
inline std::vector<int> reduced_word(Word w) {
  std::vector<int> swaps;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k] > w[k + 1]) {
        std::swap(w[k], w[k + 1]);
        swaps.push_back(static_cast<int>(k) + 1);
        changed = true;
      }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

inline Word product(int n, const std::vector<int>& gens) {
  Word w = identity(n);
  for (int g : gens) w = times_s(w, g);
  return w;
}

// All products of subwords of a reduced word of w.
inline std::set<Word> bruhat_below(const Word& w) {
  const auto red = reduced_word(w);
  const int n = static_cast<int>(w.size());
  std::set<Word> out;
  for (std::uint32_t mask = 0; mask < (1u << red.size()); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < red.size(); ++k)
      if (mask >> k & 1u) sub.push_back(red[k]);
    out.insert(product(n, sub));
  }
  return out;
}

inline bool bruhat_leq(const Word& y, const Word& w) { return bruhat_below(w).contains(y); }

inline std::size_t involutions(int n) {
  std::size_t c = 0;
  for (const Word& w : all_perms(n)) {
    bool inv = true;
    for (int i = 0; i < n && inv; ++i) inv = w[w[i] - 1] == i + 1;
    c += inv;
  }
  return c;
}

// ------------------------------------------------------------------ Hecke

inline void add(Laurent& a, const Laurent& b, std::int64_t scale = 1, int shift = 0) {
  for (const auto& [e, c] : b) {
    auto& slot = a[e + shift];
    slot += scale * c;
    if (slot == 0) a.erase(e + shift);
  }
}

inline Laurent bar(const Laurent& a) {
  Laurent out;
  for (const auto& [e, c] : a) out[-e] = c;
  return out;
}

using Element = std::map<Word, Laurent>;

// T_i^{-1} x with T_i^{-1} = v^-2 T_i + (v^-2 - 1), using
// T_i T_x = T_{s_i x} if s_i x > x, else q T_{s_i x} + (q - 1) T_x.
inline Element inverse_generator_times(int i, const Element& x) {
  Element out;
  for (const auto& [w, c] : x) {
    const Word sw = s_times(i, w);
    Element ti;  // T_i T_w
    if (inversions(sw) > inversions(w)) {
      ti[sw] = {{0, 1}};
    } else {
      ti[sw] = {{2, 1}};
      ti[w] = {{2, 1}, {0, -1}};
    }
    for (const auto& [u, d] : ti) {
      Laurent prod;
      for (const auto& [e1, c1] : c)
        for (const auto& [e2, c2] : d) add(prod, Laurent{{e1 + e2, c1 * c2}});
      add(out[u], prod, 1, -2);
    }
    add(out[w], c, 1, -2);
    add(out[w], c, -1, 0);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
  return out;
}

// bar(T_w) = T_{i1}^{-1} ... T_{ir}^{-1} for a reduced word s_{i1} ... s_{ir}.
inline Element bar_T(const Word& w) {
  const auto red = reduced_word(w);
  Element x;
  x[identity(static_cast<int>(w.size()))] = {{0, 1}};
  for (auto it = red.rbegin(); it != red.rend(); ++it) x = inverse_generator_times(*it, x);
  return x;
}

// Kazhdan-Lusztig polynomials of S_n as the unique solution of
//   p_x - bar(p_x) = sum_{x < y <= w} bar(p_y) R_{x,y},   p_x in v^-1 Z[v^-1],
// where bar(H_y) = sum_x R_{x,y} H_x in the basis H_x = v^{-l(x)} T_x, and
// then P_{x,w}(q) = v^{l(w)-l(x)} p_x.  Result: table[{x, w}] = coefficients
// of P in q.  Throws if the equation has no solution of the required form.
inline std::map<std::pair<Word, Word>, std::vector<std::int64_t>> kl_table(int n) {
  const auto elems = all_perms(n);
  std::map<Word, int> len;
  for (const auto& w : elems) len[w] = inversions(w);
  std::map<std::pair<Word, Word>, Laurent> R;  // (x, y) -> R_{x,y}
  for (const auto& y : elems)
    for (const auto& [x, c] : bar_T(y)) {
      Laurent r;
      add(r, c, 1, len[y] + len[x]);
      R[{x, y}] = r;
    }
  std::vector<Word> by_length = elems;
  std::stable_sort(by_length.begin(), by_length.end(), [&](const Word& a, const Word& b) { return len[a] > len[b]; });

  std::map<std::pair<Word, Word>, std::vector<std::int64_t>> table;
  for (const auto& w : elems) {
    std::map<Word, Laurent> p;
    p[w] = {{0, 1}};
    for (const auto& x : by_length) {
      if (x == w || len[x] >= len[w]) continue;
      Laurent rhs;
      for (const auto& [y, py] : p) {
        auto it = R.find({x, y});
        if (it == R.end()) continue;
        const Laurent b = bar(py);
        for (const auto& [e1, c1] : b)
          for (const auto& [e2, c2] : it->second) add(rhs, Laurent{{e1 + e2, c1 * c2}});
      }
      Laurent px, pos;
      for (const auto& [e, c] : rhs) {
        if (e < 0)
          px[e] = c;
        else
          pos[e] = c;
      }
      Laurent check = pos;
      add(check, bar(px), 1);
      if (!check.empty()) throw std::logic_error("no bar-invariant solution");
      if (!px.empty()) p[x] = px;
    }
    for (const auto& [x, px] : p) {
      std::vector<std::int64_t> q;
      for (const auto& [e, c] : px) {
        const int qe = e + len[w] - len[x];
        if (qe < 0 || qe % 2) throw std::logic_error("odd or negative q power");
        if (q.size() <= static_cast<std::size_t>(qe / 2)) q.resize(qe / 2 + 1, 0);
        q[qe / 2] = c;
      }
      table[{x, w}] = q;
    }
  }
  return table;
}

}  // namespace oracle
