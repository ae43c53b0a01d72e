#pragma once

#include <cstdint>
#include <vector>

#include "klcells/permutation.hpp"
#include "klcells/report.hpp"

namespace klcells {

/// Directed graph on S_n (vertices in lexicographic order).  An edge x -> x'
/// means L(x) is not contained in L(x') and mu(x|x') != 0, so y <=_L w iff
/// some path runs from y to w.
struct CellGraph {
  int n = 0;
  std::vector<Permutation> vertices;
  std::vector<std::vector<std::uint32_t>> out;

  std::size_t edge_count() const;
};

/// Builds the graph; the work over target vertices is spread across
/// `threads` workers (0 = hardware concurrency).
CellGraph left_cell_graph(int n, int max_degree = kDefaultMaxDegree, unsigned threads = 0);

/// Strongly connected components, each sorted, listed by least vertex.
std::vector<std::vector<std::uint32_t>> strongly_connected_components(const std::vector<std::vector<std::uint32_t>>& out);

/// Vertices reachable from `source` (including it), sorted.
std::vector<std::uint32_t> reachable_from(const std::vector<std::vector<std::uint32_t>>& out, std::uint32_t source);

enum class CellSide { Left, Right };

struct CellPartition {
  CellSide side = CellSide::Left;
  /// Each cell sorted; cells sorted by least element.
  std::vector<std::vector<Permutation>> cells;
  /// leq[a][b]: cell a <= cell b in the induced order.
  std::vector<std::vector<bool>> leq;

  /// Index of the cell containing w.
  std::size_t cell_of(const Permutation& w) const;
};

CellPartition cells(int n, CellSide side, int max_degree = kDefaultMaxDegree);

/// {y : y <=_L w}, sorted.
std::vector<Permutation> left_closure(const Permutation& w, int max_degree = kDefaultMaxDegree);

/// R(y) contains R(w) along every edge and every reachable pair; left cells
/// share right descent sets.
Report verify_prop_descents(int n, int max_degree = kDefaultMaxDegree);

/// For y != w in D_ij with mu(y|w) != 0, mu(K_ij y | K_ij w) != 0; K_ij
/// preserves left-cell equivalence; K_ij(w) ~_R w.
Report verify_knuth_mu(int n, int max_degree = kDefaultMaxDegree);

}  // namespace klcells
