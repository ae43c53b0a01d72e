#include "klcells/knuth.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "klcells/errors.hpp"

namespace klcells {

std::vector<Permutation> knuth_neighbors(const Permutation& w) {
  std::set<Permutation> out;
  const auto word = w.word();
  const int n = w.degree();
  for (int i = 0; i + 2 < n; ++i) {
    const int a = word[i], b = word[i + 1], c = word[i + 2];
    std::vector<int> v(word.begin(), word.end());
    // y_{i+1} < y_i < y_{i+2}  <->  y_{i+2} < y_i < y_{i+1}: swap the last two.
    if ((b < a && a < c) || (c < a && a < b)) {
      std::swap(v[i + 1], v[i + 2]);
      out.emplace(v);
      std::swap(v[i + 1], v[i + 2]);
    }
    // y_{i+1} < y_{i+2} < y_i  <->  y_i < y_{i+2} < y_{i+1}: swap the first two.
    if ((b < c && c < a) || (a < c && c < b)) {
      std::swap(v[i], v[i + 1]);
      out.emplace(v);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Permutation> knuth_class(const Permutation& w) {
  std::set<Permutation> seen{w};
  std::vector<Permutation> stack{w};
  while (!stack.empty()) {
    const Permutation cur = stack.back();
    stack.pop_back();
    for (auto& nb : knuth_neighbors(cur))
      if (seen.insert(nb).second) stack.push_back(nb);
  }
  return {seen.begin(), seen.end()};
}

namespace {

void check_pair(const Permutation& w, int i, int j) {
  if (std::abs(i - j) != 1) throw InputError("D_ij needs |i - j| = 1");
  if (std::min(i, j) < 1 || std::max(i, j) >= w.degree()) throw InputError("reflection index out of range");
}

}  // namespace

bool in_D(const Permutation& w, int i, int j) {
  check_pair(w, i, j);
  const DescentSet r = w.right_descents();
  return r.contains(i) && !r.contains(j);
}

Permutation k_move(const Permutation& w, int i, int j) {
  if (!in_D(w, i, j)) throw InputError(w.str() + " is not in D_" + std::to_string(i) + std::to_string(j));
  const Permutation y0 = min_coset_rep(w, i, j);
  const Permutation y0_si = multiply_simple(y0, i, Side::Right);
  if (w == y0_si) return multiply_simple(y0_si, j, Side::Right);
  const Permutation y0_sj = multiply_simple(y0, j, Side::Right);
  if (w == multiply_simple(y0_sj, i, Side::Right)) return y0_sj;
  throw std::logic_error("element of D_ij is neither y0 s_i nor y0 s_j s_i");
}

}  // namespace klcells
