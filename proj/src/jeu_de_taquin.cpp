#include "klcells/jeu_de_taquin.hpp"

#include "klcells/errors.hpp"

namespace klcells {

using Grid = std::vector<std::vector<int>>;

namespace {

int row_len(const Grid& g, int r) { return r < static_cast<int>(g.size()) ? static_cast<int>(g[r].size()) : 0; }

// Slides the hole at (r, c) (0-based) toward the outer boundary and deletes
// the cell it finally occupies.  Ties move the lower entry so that columns
// stay strict.  Returns the vacated cell.
Cell slide_out(Grid& g, int r, int c) {
  for (;;) {
    const bool has_right = c + 1 < row_len(g, r);
    const bool has_below = c < row_len(g, r + 1);
    if (!has_right && !has_below) break;
    if (has_right && (!has_below || g[r][c + 1] < g[r + 1][c])) {
      g[r][c] = g[r][c + 1];
      ++c;
    } else {
      g[r][c] = g[r + 1][c];
      ++r;
    }
  }
  g[r].pop_back();
  while (!g.empty() && g.back().empty()) g.pop_back();
  return {r + 1, c + 1};
}

}  // namespace

std::vector<Cell> inner_corners(const Tableau& t) { return t.inner_shape().corners(); }

Tableau jdt_slide(const Tableau& t, Cell hole) {
  const Shape inner = t.inner_shape();
  bool ok = false;
  for (Cell c : inner.corners()) ok = ok || c == hole;
  if (!ok) throw InputError("slide hole must be an inner corner");
  Grid g = t.grid();
  slide_out(g, hole.row - 1, hole.col - 1);
  return Tableau::from_grid(std::move(g));
}

Tableau rectify(const Tableau& t) {
  Tableau cur = t;
  for (;;) {
    const auto corners = inner_corners(cur);
    if (corners.empty()) return cur;
    cur = jdt_slide(cur, corners.back());
  }
}

Tableau permutation_tableau(const Permutation& w) {
  const int n = w.degree();
  Grid g(n);
  for (int r = 1; r <= n; ++r) {
    g[r - 1].assign(static_cast<std::size_t>(n - r), 0);
    g[r - 1].push_back(w(n + 1 - r));
  }
  return Tableau::from_grid(std::move(g));
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> out;
  const auto rows = t.rows();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return out;
}

Tableau evacuation(const Tableau& t) {
  if (t.is_skew() || !t.standard()) throw InputError("evacuation needs a straight standard tableau");
  const int n = t.size();
  Grid g = t.grid();
  Grid out;
  for (const auto& row : g) out.emplace_back(row.size(), 0);
  for (int k = 1; k <= n; ++k) {
    const Cell vacated = slide_out(g, 0, 0);
    out[vacated.row - 1][vacated.col - 1] = n + 1 - k;
  }
  return Tableau::from_grid(std::move(out));
}

}  // namespace klcells
