#include "klcells/symmetric_group.hpp"

#include <algorithm>
#include <array>

#include "klcells/errors.hpp"

namespace klcells {

SymmetricGroup::SymmetricGroup(int n, int max_degree) : n_(n), elements_(enumerate(n, max_degree)) {
  const std::size_t N = elements_.size();
  left_.resize((n > 1 ? n - 1 : 0) * N);
  right_.resize(left_.size());
  inverse_.resize(N);
  length_.resize(N);
  ldesc_.resize(N);
  rdesc_.resize(N);
  for (std::size_t x = 0; x < N; ++x) {
    const Permutation& w = elements_[x];
    inverse_[x] = index_of(w.inverse());
    length_[x] = w.length();
    ldesc_[x] = w.left_descents().mask();
    rdesc_[x] = w.right_descents().mask();
    for (int i = 1; i < n; ++i) {
      left_[(i - 1) * N + x] = index_of(multiply_simple(w, i, Side::Left));
      right_[(i - 1) * N + x] = index_of(multiply_simple(w, i, Side::Right));
    }
  }
}

SymmetricGroup::Index SymmetricGroup::index_of(const Permutation& w) const {
  if (w.degree() != n_) throw InputError("permutation degree does not match group");
  return static_cast<Index>(lex_rank(w));
}

bool SymmetricGroup::bruhat_leq(Index y, Index w) const {
  if (y == w) return true;
  if (length_[y] >= length_[w]) return false;
  const auto yw = elements_[y].word();
  const auto ww = elements_[w].word();
  // Sorted-prefix dominance via counting: for every prefix k and threshold t,
  // #{i <= k : y_i >= t} <= #{i <= k : w_i >= t}.
  std::array<int, kHardMaxDegree + 2> cy{}, cw{};
  for (int k = 0; k < n_; ++k) {
    for (int t = 1; t <= yw[k]; ++t) ++cy[t];
    for (int t = 1; t <= ww[k]; ++t) ++cw[t];
    for (int t = 2; t <= n_; ++t)
      if (cy[t] > cw[t]) return false;
  }
  return true;
}

}  // namespace klcells
