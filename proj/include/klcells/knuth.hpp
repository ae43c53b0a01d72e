#pragma once

#include <vector>

#include "klcells/permutation.hpp"

namespace klcells {

/// Permutations one elementary Knuth relation away from w, sorted.
std::vector<Permutation> knuth_neighbors(const Permutation& w);

/// Closure of {w} under Knuth relations, sorted.
std::vector<Permutation> knuth_class(const Permutation& w);

/// w in D_ij, i.e. w s_i < w and w s_j > w, with j = i +- 1.
bool in_D(const Permutation& w, int i, int j);

/// The Knuth move K_ij : D_ij -> D_ji.
///
/// With y0 the minimal representative of w<s_i, s_j>, maps y0 s_i to
/// y0 s_i s_j and y0 s_j s_i to y0 s_j.
Permutation k_move(const Permutation& w, int i, int j);

}  // namespace klcells
