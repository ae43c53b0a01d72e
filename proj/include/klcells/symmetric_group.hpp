#pragma once

#include <cstdint>
#include <vector>

#include "klcells/permutation.hpp"

namespace klcells {

/// Precomputed multiplication, length and descent tables for S_n.
///
/// Elements are indexed by their lexicographic rank, so index 0 is the
/// identity and index n!-1 is w0.
class SymmetricGroup {
 public:
  using Index = std::uint32_t;

  explicit SymmetricGroup(int n, int max_degree = kDefaultMaxDegree);

  int degree() const { return n_; }
  std::size_t order() const { return elements_.size(); }

  const Permutation& element(Index x) const { return elements_[x]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  Index index_of(const Permutation& w) const;

  Index identity() const { return 0; }
  Index longest() const { return static_cast<Index>(order() - 1); }

  /// s_i * x
  Index left_multiply(int i, Index x) const { return left_[(i - 1) * order() + x]; }
  /// x * s_i
  Index right_multiply(Index x, int i) const { return right_[(i - 1) * order() + x]; }
  Index inverse(Index x) const { return inverse_[x]; }
  int length(Index x) const { return length_[x]; }
  DescentSet left_descents(Index x) const { return DescentSet(ldesc_[x]); }
  DescentSet right_descents(Index x) const { return DescentSet(rdesc_[x]); }
  bool bruhat_leq(Index y, Index w) const;

 private:
  int n_;
  std::vector<Permutation> elements_;
  std::vector<Index> left_, right_, inverse_;
  std::vector<int> length_;
  std::vector<std::uint32_t> ldesc_, rdesc_;
};

}  // namespace klcells
