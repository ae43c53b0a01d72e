#include "klcells/crystal.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <set>

#include "klcells/cells.hpp"
#include "klcells/errors.hpp"

namespace klcells {

namespace {

void check_index(int i, int rank) {
  if (i < 1 || i >= rank)
    throw InputError("operator index " + std::to_string(i) + " outside 1.." + std::to_string(rank - 1));
}

// Letter-level operators on a suffix of the word; `from` is the split point.
// The rest of the word is left untouched, so the result can be written back
// in place.
bool apply_f(int i, std::vector<int>& w, std::size_t from);
bool apply_e(int i, std::vector<int>& w, std::size_t from);

int phi_suffix(int i, std::vector<int> w, std::size_t from) {
  int k = 0;
  while (apply_f(i, w, from)) ++k;
  return k;
}

int eps_letter(int i, int x) { return x == i + 1 ? 1 : 0; }

bool apply_f(int i, std::vector<int>& w, std::size_t from) {
  if (from + 1 == w.size()) {
    if (w[from] != i) return false;
    w[from] = i + 1;
    return true;
  }
  if (eps_letter(i, w[from]) < phi_suffix(i, w, from + 1)) return apply_f(i, w, from + 1);
  if (w[from] != i) return false;
  w[from] = i + 1;
  return true;
}

bool apply_e(int i, std::vector<int>& w, std::size_t from) {
  if (from + 1 == w.size()) {
    if (w[from] != i + 1) return false;
    w[from] = i;
    return true;
  }
  if (eps_letter(i, w[from]) <= phi_suffix(i, w, from + 1)) return apply_e(i, w, from + 1);
  if (w[from] != i + 1) return false;
  w[from] = i;
  return true;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<CrystalWord> all_words(int n, int r) {
  if (n < 1 || r < 1) throw InputError("word length and rank must be positive");
  double count = 1;
  for (int k = 0; k < n; ++k) count *= r;
  if (n > kHardMaxDegree || count > 1e7)
    throw BoundError(std::to_string(r) + "^" + std::to_string(n) + " words is too many");
  std::vector<CrystalWord> out;
  std::vector<int> w(n, 1);
  for (;;) {
    out.push_back({r, w});
    int k = n - 1;
    while (k >= 0 && w[k] == r) w[k--] = 1;
    if (k < 0) break;
    ++w[k];
  }
  return out;
}

Tableau from_reading_word(const Shape& shape, const std::vector<int>& word) {
  std::vector<std::vector<int>> rows(shape.num_rows());
  auto it = word.begin();
  for (int r = shape.num_rows(); r >= 1; --r) {
    rows[r - 1].assign(it, it + shape.row_length(r));
    it += shape.row_length(r);
  }
  return Tableau::from_rows(std::move(rows));
}

std::optional<Tableau> tableau_op(bool raise, int i, const Tableau& t, int r) {
  const CrystalWord b = tableau_reading_embedding(t, r);
  const CrystalResult out = raise ? e_op(i, b) : f_op(i, b);
  if (!out) return std::nullopt;
  Tableau image = from_reading_word(t.shape(), out->letters);
  if (!image.column_strict())
    throw InputError("operator left B(" + t.shape().str() + ") at " + t.compact());
  return image;
}

}  // namespace

CrystalWord CrystalWord::make(int rank, std::vector<int> letters) {
  if (rank < 1) throw InputError("rank must be positive");
  if (letters.empty()) throw InputError("empty crystal word");
  for (int x : letters)
    if (x < 1 || x > rank) throw InputError("letter " + std::to_string(x) + " outside 1.." + std::to_string(rank));
  return {rank, std::move(letters)};
}

std::string CrystalWord::str() const {
  std::string s;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) s += "(x)";
    s += std::to_string(letters[k]);
  }
  return s;
}

CrystalResult f_op(int i, const CrystalWord& b) {
  check_index(i, b.rank);
  CrystalWord out = b;
  if (!apply_f(i, out.letters, 0)) return std::nullopt;
  return out;
}

CrystalResult e_op(int i, const CrystalWord& b) {
  check_index(i, b.rank);
  CrystalWord out = b;
  if (!apply_e(i, out.letters, 0)) return std::nullopt;
  return out;
}

int eps(int i, const CrystalWord& b) {
  int k = 0;
  for (CrystalResult x = e_op(i, b); x; x = e_op(i, *x)) ++k;
  return k;
}

int phi(int i, const CrystalWord& b) {
  int k = 0;
  for (CrystalResult x = f_op(i, b); x; x = f_op(i, *x)) ++k;
  return k;
}

SignaturePositions signature_rule(int i, const CrystalWord& b) {
  check_index(i, b.rank);
  // Unmatched i+1 are kept on a stack; an i cancels the nearest one.
  std::vector<int> open;
  std::vector<int> free_i;
  for (int k = 0; k < b.size(); ++k) {
    if (b.letters[k] == i + 1) {
      open.push_back(k + 1);
    } else if (b.letters[k] == i) {
      if (open.empty())
        free_i.push_back(k + 1);
      else
        open.pop_back();
    }
  }
  SignaturePositions s;
  s.phi = static_cast<int>(free_i.size());
  s.eps = static_cast<int>(open.size());
  if (!free_i.empty()) s.f = free_i.back();
  if (!open.empty()) s.e = open.front();
  return s;
}

std::vector<CrystalWord> component(const CrystalWord& b) {
  std::set<CrystalWord> seen{b};
  std::deque<CrystalWord> queue{b};
  while (!queue.empty()) {
    const CrystalWord x = queue.front();
    queue.pop_front();
    for (int i = 1; i < x.rank; ++i)
      for (const CrystalResult& y : {f_op(i, x), e_op(i, x)})
        if (y && seen.insert(*y).second) queue.push_back(*y);
  }
  return {seen.begin(), seen.end()};
}

Tableau p_symbol_of_word(const CrystalWord& b) { return rs_word(b.letters).first; }
Tableau q_symbol_of_word(const CrystalWord& b) { return rs_word(b.letters).second; }

std::vector<CrystalComponent> decompose(int n, int r) {
  const std::vector<CrystalWord> words = all_words(n, r);
  std::set<CrystalWord> assigned;
  std::vector<CrystalComponent> out;
  for (const CrystalWord& b : words) {
    if (assigned.contains(b)) continue;
    CrystalComponent c;
    c.words = component(b);
    assigned.insert(c.words.begin(), c.words.end());
    c.q = q_symbol_of_word(c.words.front());
    c.shape = c.q.shape();
    c.highest_weight = c.words.front();
    for (const CrystalWord& x : c.words) {
      if (q_symbol_of_word(x) != c.q) c.q_constant = false;
      bool top = true;
      for (int i = 1; i < r && top; ++i) top = !e_op(i, x);
      if (top) c.highest_weight = x;
    }
    out.push_back(std::move(c));
  }
  // Words are visited in lex order, so components already come sorted by label.
  return out;
}

CrystalWord tableau_reading_embedding(const Tableau& t, int r) {
  if (!t.column_strict() || t.is_skew()) throw InputError("expected a straight column-strict tableau");
  auto rows = t.rows();
  std::vector<int> word;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) word.insert(word.end(), it->begin(), it->end());
  return CrystalWord::make(r, std::move(word));
}

std::optional<Tableau> tableau_f(int i, const Tableau& t, int r) { return tableau_op(false, i, t, r); }
std::optional<Tableau> tableau_e(int i, const Tableau& t, int r) { return tableau_op(true, i, t, r); }

Report verify_djm(int n, int r) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep{.suite = "crystal-djm", .n = n};
  const auto comps = decompose(n, r);
  for (const CrystalComponent& c : comps) {
    const std::string label = c.words.front().str();
    ++rep.cases;
    if (!c.q_constant) rep.fail("recording tableau varies on the component of " + label);
    int tops = 0;
    for (const CrystalWord& x : c.words) {
      bool top = true;
      for (int i = 1; i < r && top; ++i) top = eps(i, x) == 0;
      tops += top;
    }
    ++rep.cases;
    if (tops != 1) rep.fail("component of " + label + " has " + std::to_string(tops) + " highest weight words");

    std::set<Tableau> image;
    for (const CrystalWord& x : c.words) {
      const Tableau p = p_symbol_of_word(x);
      ++rep.cases;
      if (p.shape() != c.shape) rep.fail("P(" + x.str() + ") = " + p.compact() + " has the wrong shape");
      image.insert(p);
      for (int i = 1; i < r; ++i) {
        for (bool raise : {false, true}) {
          ++rep.cases;
          const CrystalResult y = raise ? e_op(i, x) : f_op(i, x);
          std::optional<Tableau> expect;
          try {
            expect = tableau_op(raise, i, p, r);
          } catch (const InputError& err) {
            rep.fail(err.what());
            continue;
          }
          const std::optional<Tableau> got = y ? std::optional(p_symbol_of_word(*y)) : std::nullopt;
          if (got != expect)
            rep.fail(std::string(raise ? "e" : "f") + std::to_string(i) + " does not commute with P at " + x.str());
        }
      }
    }
    ++rep.cases;
    const std::size_t target = column_strict_tableaux(c.shape, r).size();
    if (image.size() != c.words.size() || image.size() != target)
      rep.fail("P is not a bijection from the component of " + label + " (" + std::to_string(c.words.size()) +
               " words, " + std::to_string(image.size()) + " distinct P, " + std::to_string(target) +
               " tableaux of shape " + c.shape.str() + ")");
  }
  rep.note("words", std::to_string(all_words(n, r).size()));
  rep.note("components", std::to_string(comps.size()));
  rep.seconds = seconds_since(t0);
  return rep;
}

Report verify_crystal_cells(int n, int max_degree) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep{.suite = "crystal-theorem-a", .n = n};
  if (n > std::min(max_degree, kHardMaxDegree)) throw BoundError("degree " + std::to_string(n) + " exceeds limit");
  const auto comps = decompose(n, n);
  std::map<CrystalWord, std::size_t> label;
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (const CrystalWord& x : comps[c].words) label[x] = c;

  using Partition = std::set<std::vector<Permutation>>;
  std::map<std::size_t, std::vector<Permutation>> by_component;
  std::map<Tableau, std::vector<Permutation>> by_q;
  for (const Permutation& w : enumerate(n, max_degree)) {
    const std::vector<int> word(w.word().begin(), w.word().end());
    by_component[label.at(CrystalWord{n, word})].push_back(w);
    by_q[q_symbol(w)].push_back(w);
  }
  Partition crystal, recording, cell;
  for (auto& [k, v] : by_component) crystal.insert(v);
  for (auto& [k, v] : by_q) recording.insert(v);
  for (auto& c : cells(n, CellSide::Left, max_degree).cells) cell.insert(c);

  auto compare = [&](const Partition& a, const Partition& b, const std::string& what) {
    ++rep.cases;
    if (a == b) return;
    for (const auto& block : a)
      if (!b.contains(block)) {
        std::string s;
        for (const auto& w : block) s += (s.empty() ? "" : ",") + w.str();
        rep.fail(what + ": block {" + s + "} has no counterpart");
        return;
      }
    rep.fail(what + ": partitions differ");
  };
  compare(crystal, recording, "crystal components vs recording tableaux");
  compare(crystal, cell, "crystal components vs left cells");
  rep.note("components", std::to_string(crystal.size()));
  rep.seconds = seconds_since(t0);
  return rep;
}

CrystalGraph crystal_graph(int n, int r) {
  CrystalGraph g;
  g.vertices = all_words(n, r);
  for (std::size_t k = 0; k < g.vertices.size(); ++k)
    for (int i = 1; i < r; ++i)
      if (CrystalResult y = f_op(i, g.vertices[k])) {
        auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), *y);
        g.edges.push_back({k, static_cast<std::size_t>(it - g.vertices.begin()), i});
      }
  return g;
}

}  // namespace klcells
