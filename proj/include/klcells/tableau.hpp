#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "klcells/permutation.hpp"

namespace klcells {

/// A cell (row, column), 1-based, rows growing downward.
struct Cell {
  int row = 1;
  int col = 1;
  auto operator<=>(const Cell&) const = default;
};

/// Young diagram given by weakly decreasing positive row lengths.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  /// Length of row r (1-based); 0 past the last row.
  int row_length(int r) const { return r >= 1 && r <= num_rows() ? rows_[r - 1] : 0; }
  int size() const;
  bool empty() const { return rows_.empty(); }
  bool contains(Cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row); }
  /// Column lengths l_1, l_2, ...
  std::vector<int> column_lengths() const;
  Shape conjugate() const;
  /// Cells whose removal leaves a Young diagram.
  std::vector<Cell> corners() const;
  std::string str() const;

  friend auto operator<=>(const Shape&, const Shape&) = default;
  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<int> rows_;
};

/// outer / inner with inner contained in outer.
struct SkewShape {
  Shape outer;
  Shape inner;
  int size() const { return outer.size() - inner.size(); }
  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

/// Filling of a (possibly skew) Young diagram by positive integers that
/// weakly increase along rows and down columns.
///
/// Construction validates the monotonicity condition and records whether
/// the filling is column strict, row strict and standard.
class Tableau {
 public:
  /// The empty tableau.
  Tableau() = default;

  /// `rows` holds the entries of the skew part of each row, left to right;
  /// `inner` holds the inner row lengths (empty for a straight shape).
  static Tableau from_rows(std::vector<std::vector<int>> rows, std::vector<int> inner = {});

  Shape shape() const;
  Shape inner_shape() const;
  SkewShape skew_shape() const { return {shape(), inner_shape()}; }
  bool is_skew() const;
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  /// Entry at c, or nullopt for cells outside the skew part.
  std::optional<int> entry(Cell c) const;
  /// Skew-part entries of each row.
  std::vector<std::vector<int>> rows() const;
  std::vector<int> entries() const;
  /// Cells of the skew part, row by row.
  std::vector<Cell> cells() const;

  bool column_strict() const { return column_strict_; }
  bool row_strict() const { return row_strict_; }
  /// Entries exactly {1, ..., size()}.
  bool standard() const { return standard_; }

  /// One row per line, entries separated by single spaces; inner cells as '.'.
  std::string str() const;
  /// "[[1,2,4],[3,5]]" (skew part only).
  std::string compact() const;

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.grid_ == b.grid_; }
  friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.grid_ <=> b.grid_; }

  /// Raw grid: full outer rows, 0 marking inner cells.  Entry points below
  /// build tableaux from a grid; the grid is validated and canonicalized.
  static Tableau from_grid(std::vector<std::vector<int>> grid);
  const std::vector<std::vector<int>>& grid() const { return grid_; }

 private:
  std::vector<std::vector<int>> grid_;
  int size_ = 0;
  bool column_strict_ = true;
  bool row_strict_ = true;
  bool standard_ = true;
};

struct Insertion {
  Tableau tableau;
  Cell added;
};

/// T <- k by row bumping.  T must be a straight column-strict tableau.
Insertion row_insert(const Tableau& t, int k);
/// k -> T by column bumping.  T must be a straight row-strict tableau.
Insertion column_insert(int k, const Tableau& t);

/// Insertion and recording tableaux of an arbitrary word (repeats allowed).
std::pair<Tableau, Tableau> rs_word(std::span<const int> word);

Tableau p_symbol(const Permutation& w);
/// Recording tableau; checked against p_symbol(w.inverse()).
Tableau q_symbol(const Permutation& w);
std::pair<Tableau, Tableau> rs_pair(const Permutation& w);

/// Inverse Robinson-Schensted: the unique w with (P(w), Q(w)) = (p, q).
Permutation rs_inverse(const Tableau& p, const Tableau& q);

Tableau transpose(const Tableau& t);

/// Column i filled top to bottom with l_1+...+l_{i-1}+1, ..., l_1+...+l_i.
Tableau superstandard(const Shape& shape);

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Shape> partitions(int n);
std::vector<Tableau> standard_tableaux(const Shape& shape);
/// Column-strict tableaux of the given shape with entries in 1..max_entry.
std::vector<Tableau> column_strict_tableaux(const Shape& shape, int max_entry);

}  // namespace klcells
