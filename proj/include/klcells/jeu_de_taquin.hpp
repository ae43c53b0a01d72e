#pragma once

#include <vector>

#include "klcells/permutation.hpp"
#include "klcells/tableau.hpp"

namespace klcells {

/// Corners of the inner shape, i.e. cells a forward slide may start from.
std::vector<Cell> inner_corners(const Tableau& t);

/// One forward jeu de taquin slide into the inner corner `hole`.
Tableau jdt_slide(const Tableau& t, Cell hole);

/// Slides until the shape is straight, always picking the bottommost inner
/// corner (for a fixed row there is only one).
Tableau rectify(const Tableau& t);

/// w_1 ... w_n placed on the skew staircase (n, ..., 1) / (n-1, ..., 1, 0),
/// w_1 in the bottom-left cell.
Tableau permutation_tableau(const Permutation& w);

/// Rows from bottom to top, each left to right.
std::vector<int> reading_word(const Tableau& t);

/// Schutzenberger evacuation of a straight standard tableau.
Tableau evacuation(const Tableau& t);

}  // namespace klcells
