#include "klcells/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "klcells/errors.hpp"

namespace klcells {

using Grid = std::vector<std::vector<int>>;

// ---------------------------------------------------------------- Shape

Shape::Shape(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw InputError("shape rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1]) throw InputError("shape rows must weakly decrease");
  }
}

int Shape::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

std::vector<int> Shape::column_lengths() const {
  std::vector<int> cols(rows_.empty() ? 0 : rows_.front(), 0);
  for (int len : rows_)
    for (int c = 0; c < len; ++c) ++cols[c];
  return cols;
}

Shape Shape::conjugate() const { return Shape(column_lengths()); }

std::vector<Cell> Shape::corners() const {
  std::vector<Cell> out;
  for (int r = 1; r <= num_rows(); ++r)
    if (row_length(r + 1) < row_length(r)) out.push_back({r, row_length(r)});
  return out;
}

std::string Shape::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(rows_[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------- Tableau

Tableau Tableau::from_grid(Grid grid) {
  while (!grid.empty() &&
         std::all_of(grid.back().begin(), grid.back().end(), [](int x) { return x == 0; }))
    grid.pop_back();

  Tableau t;
  std::vector<int> inner(grid.size(), 0);
  for (std::size_t r = 0; r < grid.size(); ++r) {
    const auto& row = grid[r];
    if (row.empty()) throw InputError("tableau has an empty interior row");
    if (r > 0 && row.size() > grid[r - 1].size()) throw InputError("tableau row lengths must weakly decrease");
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    inner[r] = static_cast<int>(c);
    if (r > 0 && inner[r] > inner[r - 1]) throw InputError("inner shape must be a Young diagram");
    for (; c < row.size(); ++c)
      if (row[c] <= 0) throw InputError("tableau entries must be positive integers");
  }

  std::vector<int> values;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    for (std::size_t c = static_cast<std::size_t>(inner[r]); c < grid[r].size(); ++c) {
      const int x = grid[r][c];
      values.push_back(x);
      if (c + 1 < grid[r].size()) {
        const int right = grid[r][c + 1];
        if (right < x) throw InputError("tableau rows must weakly increase");
        if (right == x) t.row_strict_ = false;
      }
      if (r + 1 < grid.size() && c < grid[r + 1].size()) {
        const int below = grid[r + 1][c];
        if (below < x) throw InputError("tableau columns must weakly increase");
        if (below == x) t.column_strict_ = false;
      }
    }
  }
  std::sort(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != static_cast<int>(i) + 1) t.standard_ = false;
  t.size_ = static_cast<int>(values.size());
  t.grid_ = std::move(grid);
  return t;
}

Tableau Tableau::from_rows(std::vector<std::vector<int>> rows, std::vector<int> inner) {
  const std::size_t nrows = std::max(rows.size(), inner.size());
  Grid grid(nrows);
  for (std::size_t r = 0; r < nrows; ++r) {
    const int pad = r < inner.size() ? inner[r] : 0;
    if (pad < 0) throw InputError("inner row lengths must be non-negative");
    grid[r].assign(static_cast<std::size_t>(pad), 0);
    if (r < rows.size()) {
      for (int x : rows[r])
        if (x <= 0) throw InputError("tableau entries must be positive integers");
      grid[r].insert(grid[r].end(), rows[r].begin(), rows[r].end());
    }
  }
  return from_grid(std::move(grid));
}

Shape Tableau::shape() const {
  std::vector<int> rows;
  for (const auto& row : grid_) rows.push_back(static_cast<int>(row.size()));
  return Shape(std::move(rows));
}

Shape Tableau::inner_shape() const {
  std::vector<int> rows;
  for (const auto& row : grid_)
    rows.push_back(static_cast<int>(std::find_if(row.begin(), row.end(), [](int x) { return x != 0; }) - row.begin()));
  return Shape(std::move(rows));
}

bool Tableau::is_skew() const {
  return !grid_.empty() && grid_.front().front() == 0;
}

std::optional<int> Tableau::entry(Cell c) const {
  if (c.row < 1 || c.row > static_cast<int>(grid_.size())) return std::nullopt;
  const auto& row = grid_[c.row - 1];
  if (c.col < 1 || c.col > static_cast<int>(row.size()) || row[c.col - 1] == 0) return std::nullopt;
  return row[c.col - 1];
}

std::vector<std::vector<int>> Tableau::rows() const {
  Grid out;
  for (const auto& row : grid_) {
    auto& o = out.emplace_back();
    for (int x : row)
      if (x != 0) o.push_back(x);
  }
  return out;
}

std::vector<int> Tableau::entries() const {
  std::vector<int> out;
  for (const auto& row : grid_)
    for (int x : row)
      if (x != 0) out.push_back(x);
  return out;
}

std::vector<Cell> Tableau::cells() const {
  std::vector<Cell> out;
  for (std::size_t r = 0; r < grid_.size(); ++r)
    for (std::size_t c = 0; c < grid_[r].size(); ++c)
      if (grid_[r][c] != 0) out.push_back({static_cast<int>(r) + 1, static_cast<int>(c) + 1});
  return out;
}

std::string Tableau::str() const {
  std::string s;
  for (const auto& row : grid_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) s += ' ';
      s += row[c] == 0 ? std::string(".") : std::to_string(row[c]);
    }
    s += '\n';
  }
  return s;
}

std::string Tableau::compact() const {
  std::string s = "[";
  const auto rs = rows();
  for (std::size_t r = 0; r < rs.size(); ++r) {
    if (r) s += ',';
    s += '[';
    for (std::size_t c = 0; c < rs[r].size(); ++c) {
      if (c) s += ',';
      s += std::to_string(rs[r][c]);
    }
    s += ']';
  }
  return s + "]";
}

// ---------------------------------------------------------------- insertion

namespace {

// Row bumping on a raw straight grid; returns the added cell.
Cell bump_row(Grid& g, int k) {
  for (std::size_t r = 0;; ++r) {
    if (r == g.size()) {
      g.push_back({k});
      return {static_cast<int>(r) + 1, 1};
    }
    auto& row = g[r];
    auto it = std::upper_bound(row.begin(), row.end(), k);
    if (it == row.end()) {
      row.push_back(k);
      return {static_cast<int>(r) + 1, static_cast<int>(row.size())};
    }
    std::swap(*it, k);
  }
}

Cell bump_column(Grid& g, int k) {
  for (std::size_t c = 0;; ++c) {
    std::size_t r = 0;
    while (r < g.size() && c < g[r].size() && g[r][c] <= k) ++r;
    if (r == g.size() || c >= g[r].size()) {
      if (r == g.size()) g.emplace_back();
      g[r].push_back(k);
      return {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
    }
    std::swap(g[r][c], k);
  }
}

}  // namespace

Insertion row_insert(const Tableau& t, int k) {
  if (k <= 0) throw InputError("inserted value must be positive");
  if (t.is_skew()) throw InputError("row insertion needs a straight tableau");
  if (!t.column_strict()) throw InputError("row insertion needs a column-strict tableau");
  Grid g = t.grid();
  const Cell added = bump_row(g, k);
  return {Tableau::from_grid(std::move(g)), added};
}

Insertion column_insert(int k, const Tableau& t) {
  if (k <= 0) throw InputError("inserted value must be positive");
  if (t.is_skew()) throw InputError("column insertion needs a straight tableau");
  if (!t.row_strict()) throw InputError("column insertion needs a row-strict tableau");
  Grid g = t.grid();
  const Cell added = bump_column(g, k);
  return {Tableau::from_grid(std::move(g)), added};
}

std::pair<Tableau, Tableau> rs_word(std::span<const int> word) {
  Grid p, q;
  int step = 0;
  for (int x : word) {
    if (x <= 0) throw InputError("word letters must be positive");
    const Cell c = bump_row(p, x);
    ++step;
    if (c.row > static_cast<int>(q.size())) q.emplace_back();
    q[c.row - 1].push_back(step);
  }
  return {Tableau::from_grid(std::move(p)), Tableau::from_grid(std::move(q))};
}

std::pair<Tableau, Tableau> rs_pair(const Permutation& w) { return rs_word(w.word()); }

Tableau p_symbol(const Permutation& w) { return rs_pair(w).first; }

Tableau q_symbol(const Permutation& w) {
  Tableau recording = rs_pair(w).second;
  if (recording != p_symbol(w.inverse()))
    throw std::logic_error("recording tableau differs from P(w^-1) for w = " + w.str());
  return recording;
}

Permutation rs_inverse(const Tableau& p, const Tableau& q) {
  if (p.is_skew() || q.is_skew()) throw InputError("rs_inverse needs straight tableaux");
  if (!p.standard() || !q.standard()) throw InputError("rs_inverse needs standard tableaux");
  if (p.shape() != q.shape()) throw InputError("P and Q must have the same shape");
  const int n = p.size();
  std::vector<Cell> where(n + 1);
  for (Cell c : q.cells()) where[*q.entry(c)] = c;

  Grid g = p.grid();
  std::vector<int> word(n);
  for (int t = n; t >= 1; --t) {
    const Cell c = where[t];
    auto& row = g[c.row - 1];
    int x = row.back();
    row.pop_back();
    if (row.empty()) g.pop_back();
    for (int r = c.row - 2; r >= 0; --r) {
      auto& above = g[r];
      // rightmost entry smaller than x
      auto it = std::lower_bound(above.begin(), above.end(), x);
      --it;
      std::swap(*it, x);
    }
    word[t - 1] = x;
  }
  return Permutation(std::move(word));
}

Tableau transpose(const Tableau& t) {
  const Grid& g = t.grid();
  Grid out;
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t c = 0; c < g[r].size(); ++c) {
      if (out.size() <= c) out.resize(c + 1);
      out[c].push_back(g[r][c]);
    }
  return Tableau::from_grid(std::move(out));
}

Tableau superstandard(const Shape& shape) {
  Grid g;
  for (int len : shape.rows()) g.emplace_back(static_cast<std::size_t>(len), 0);
  int next = 1;
  const auto cols = shape.column_lengths();
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < cols[c]; ++r) g[r][c] = next++;
  return Tableau::from_grid(std::move(g));
}

// ---------------------------------------------------------------- enumeration

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Shape>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

void fill_rec(const std::vector<Cell>& cells, std::size_t idx, Grid& g, int max_entry, bool standard,
              std::vector<bool>& used, std::vector<Tableau>& out) {
  if (idx == cells.size()) {
    out.push_back(Tableau::from_grid(g));
    return;
  }
  const auto [r, c] = cells[idx];
  int lo = 1;
  if (c > 1) lo = std::max(lo, g[r - 1][c - 2] + (standard ? 1 : 0));
  if (r > 1) lo = std::max(lo, g[r - 2][c - 1] + 1);
  for (int x = lo; x <= max_entry; ++x) {
    if (standard && used[x]) continue;
    g[r - 1][c - 1] = x;
    if (standard) used[x] = true;
    fill_rec(cells, idx + 1, g, max_entry, standard, used, out);
    if (standard) used[x] = false;
  }
  g[r - 1][c - 1] = 0;
}

std::vector<Tableau> fillings(const Shape& shape, int max_entry, bool standard) {
  std::vector<Cell> cells;
  Grid g;
  for (int r = 1; r <= shape.num_rows(); ++r) {
    g.emplace_back(static_cast<std::size_t>(shape.row_length(r)), 0);
    for (int c = 1; c <= shape.row_length(r); ++c) cells.push_back({r, c});
  }
  std::vector<bool> used(static_cast<std::size_t>(max_entry) + 1, false);
  std::vector<Tableau> out;
  fill_rec(cells, 0, g, max_entry, standard, used, out);
  return out;
}

}  // namespace

std::vector<Shape> partitions(int n) {
  if (n < 0) throw InputError("partitions of a negative number");
  std::vector<Shape> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Tableau> standard_tableaux(const Shape& shape) {
  return fillings(shape, shape.size(), true);
}

std::vector<Tableau> column_strict_tableaux(const Shape& shape, int max_entry) {
  if (max_entry < 0) throw InputError("negative entry bound");
  return fillings(shape, max_entry, false);
}

}  // namespace klcells
