#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klcells/report.hpp"
#include "klcells/tableau.hpp"

namespace klcells {

/// An element b_1 (x) ... (x) b_n of B^{(x)n}, each b_k a letter in 1..rank.
struct CrystalWord {
  int rank = 1;
  std::vector<int> letters;

  /// Throws InputError on an empty word or a letter outside 1..rank.
  static CrystalWord make(int rank, std::vector<int> letters);
  int size() const { return static_cast<int>(letters.size()); }
  /// "1(x)2(x)2"
  std::string str() const;

  friend auto operator<=>(const CrystalWord&, const CrystalWord&) = default;
  friend bool operator==(const CrystalWord&, const CrystalWord&) = default;
};

/// nullopt stands for 0, the result of an annihilating operator.
using CrystalResult = std::optional<CrystalWord>;

/// Kashiwara operators by the two-factor tensor rule, splitting off the
/// first letter:
///   f(b1 (x) b2) = b1 (x) f(b2)   if eps(b1) <  phi(b2), else f(b1) (x) b2
///   e(b1 (x) b2) = b1 (x) e(b2)   if eps(b1) <= phi(b2), else e(b1) (x) b2
CrystalResult f_op(int i, const CrystalWord& b);
CrystalResult e_op(int i, const CrystalWord& b);

/// Number of times e_i (resp. f_i) applies before reaching 0.
int eps(int i, const CrystalWord& b);
int phi(int i, const CrystalWord& b);

/// Bracketing shortcut: cancel adjacent (i+1, i) pairs; e_i changes the
/// leftmost surviving i+1, f_i the rightmost surviving i.  Positions are
/// 1-based.
struct SignaturePositions {
  std::optional<int> e;
  std::optional<int> f;
  int eps = 0;
  int phi = 0;
};
SignaturePositions signature_rule(int i, const CrystalWord& b);

/// All words reachable from b by the operators, sorted.
std::vector<CrystalWord> component(const CrystalWord& b);

struct CrystalComponent {
  std::vector<CrystalWord> words;  // sorted; words.front() is the label
  CrystalWord highest_weight;
  Tableau q;                       // recording tableau of the label
  Shape shape;
  bool q_constant = true;          // every member has recording tableau q
};

/// Splits B^{(x)n} over 1..r into components, sorted by label.
std::vector<CrystalComponent> decompose(int n, int r);

/// Reading word (bottom row first, rows left to right) of a column-strict
/// tableau with entries <= r.
CrystalWord tableau_reading_embedding(const Tableau& t, int r);
/// Row insertion tableau of the word.
Tableau p_symbol_of_word(const CrystalWord& b);
Tableau q_symbol_of_word(const CrystalWord& b);

/// f_i and e_i carried over to B(lambda) through the reading word.
std::optional<Tableau> tableau_f(int i, const Tableau& t, int r);
std::optional<Tableau> tableau_e(int i, const Tableau& t, int r);

/// Component-wise checks of the tensor-power crystal against insertion:
/// recording tableau constant on each component, b -> P(b) a bijection onto
/// the column-strict tableaux of the component's shape, and P(f_i b) =
/// f_i P(b) (0 going to 0), same for e_i.
Report verify_djm(int n, int r);

/// Permutation words of B^{(x)n}, r = n, grouped by component; compared with
/// the recording-tableau fibres and with the left cells of S_n.
Report verify_crystal_cells(int n, int max_degree = kDefaultMaxDegree);

struct CrystalEdge {
  std::size_t from;
  std::size_t to;
  int i;
};
/// Vertices sorted; edges b -> f_i(b).
struct CrystalGraph {
  std::vector<CrystalWord> vertices;
  std::vector<CrystalEdge> edges;
};
CrystalGraph crystal_graph(int n, int r);

}  // namespace klcells
