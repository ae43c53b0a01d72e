#include "klcells/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "klcells/cells.hpp"
#include "klcells/crystal.hpp"
#include "klcells/errors.hpp"
#include "klcells/hecke.hpp"
#include "klcells/jeu_de_taquin.hpp"
#include "klcells/kl.hpp"
#include "klcells/knuth.hpp"
#include "klcells/tableau.hpp"

namespace klcells {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string join(const std::vector<Permutation>& ws) {
  std::string s = "{";
  for (const auto& w : ws) s += (s.size() > 1 ? "," : "") + w.str();
  return s + "}";
}

void check_degree(int n, int max_degree) {
  if (n < 1) throw InputError("degree must be at least 1");
  if (n > std::min(max_degree, kHardMaxDegree))
    throw BoundError("degree " + std::to_string(n) + " exceeds limit " + std::to_string(std::min(max_degree, kHardMaxDegree)));
}

}  // namespace

Report verify_theorem_a(int n, int max_degree) {
  check_degree(n, max_degree);
  const auto t0 = Clock::now();
  Report rep{.suite = "theorem-a", .n = n};
  const CellPartition part = cells(n, CellSide::Left, max_degree);
  std::map<Tableau, std::vector<Permutation>> fibres;
  for (const Permutation& w : enumerate(n, max_degree)) fibres[q_symbol(w)].push_back(w);
  std::set<std::vector<Permutation>> by_q;
  for (auto& [q, ws] : fibres) by_q.insert(ws);
  for (const auto& cell : part.cells) {
    ++rep.cases;
    if (!by_q.contains(cell)) {
      std::set<Tableau> qs;
      for (const auto& w : cell) qs.insert(q_symbol(w));
      std::string detail;
      for (const auto& q : qs) detail += " " + q.compact();
      rep.fail("left cell " + join(cell) + " is not a recording-tableau fibre; its Q-symbols:" + detail);
    }
  }
  ++rep.cases;
  if (part.cells.size() != by_q.size())
    rep.fail(std::to_string(part.cells.size()) + " left cells but " + std::to_string(by_q.size()) + " recording tableaux");
  rep.note("elements", std::to_string(factorial(n)));
  rep.note("cells", std::to_string(part.cells.size()));
  rep.seconds = seconds_since(t0);
  return rep;
}

Report verify_knuth_classes(int n, int max_degree) {
  check_degree(n, max_degree);
  const auto t0 = Clock::now();
  Report rep{.suite = "knuth", .n = n};
  std::set<Permutation> done;
  std::size_t classes = 0;
  for (const Permutation& w : enumerate(n, max_degree)) {
    if (done.contains(w)) continue;
    const auto cls = knuth_class(w);
    done.insert(cls.begin(), cls.end());
    ++classes;
    const Tableau p = p_symbol(w);
    for (const auto& y : cls) {
      ++rep.cases;
      if (p_symbol(y) != p)
        rep.fail(y.str() + " is Knuth equivalent to " + w.str() + " but P differs: " + p_symbol(y).compact() + " vs " +
                 p.compact());
    }
    // The fibre must not be larger than the class.
    std::size_t fibre = 0;
    for (const auto& y : enumerate(n, max_degree)) fibre += p_symbol(y) == p;
    ++rep.cases;
    if (fibre != cls.size())
      rep.fail("P-fibre of " + p.compact() + " has " + std::to_string(fibre) + " elements, Knuth class of " + w.str() +
               " has " + std::to_string(cls.size()));
  }
  rep.note("classes", std::to_string(classes));
  rep.seconds = seconds_since(t0);
  return rep;
}

Report verify_evacuation(int n, int max_degree) {
  check_degree(n, max_degree);
  const auto t0 = Clock::now();
  Report rep{.suite = "evacuation", .n = n};
  const Permutation w0 = Permutation::longest(n);
  for (const Permutation& w : enumerate(n, max_degree)) {
    ++rep.cases;
    const Tableau lhs = transpose(evacuation(q_symbol(w)));
    const Tableau rhs = q_symbol(w * w0);
    if (lhs != rhs)
      rep.fail("w=" + w.str() + ": transpose(evac(Q(w)))=" + lhs.compact() + " but Q(w w0)=" + rhs.compact());
  }
  rep.seconds = seconds_since(t0);
  return rep;
}

Report verify_bar_invariance(int n, int max_degree) {
  check_degree(n, max_degree);
  const auto t0 = Clock::now();
  Report rep{.suite = "bar-invariance", .n = n};
  for (const Permutation& w : enumerate(n, max_degree)) {
    const HeckeElement c = c_prime(w);
    ++rep.cases;
    if (bar(c) != c) rep.fail("C'_" + w.str() + " is not bar invariant");
    for (const auto& [y, coeff] : c.coordinates()) {
      ++rep.cases;
      if (y == w) {
        if (coeff != LaurentPoly::monomial(1, -w.length()))
          rep.fail("C'_" + w.str() + " has leading coefficient " + coeff.str());
      } else if (coeff.max_degree() + y.length() > -1) {
        rep.fail("C'_" + w.str() + " has coefficient " + coeff.str() + " at T_" + y.str());
      }
    }
  }
  rep.note("elements", std::to_string(factorial(n)));
  rep.seconds = seconds_since(t0);
  return rep;
}

Report verify_kl_properties(int n, int max_degree) {
  check_degree(n, max_degree);
  const auto t0 = Clock::now();
  Report rep{.suite = "kl-properties", .n = n};
  KLEngine& e = kl_engine(n, max_degree);
  const SymmetricGroup& g = e.group();
  for (SymmetricGroup::Index w = 0; w < g.order(); ++w)
    for (SymmetricGroup::Index y = 0; y < g.order(); ++y) {
      if (!g.bruhat_leq(y, w)) continue;
      ++rep.cases;
      const IntPolynomial p = e.polynomial(y, w);
      const std::string pair = "(" + g.element(y).str() + ", " + g.element(w).str() + ")";
      if (p.at_zero() != 1) rep.fail("P" + pair + "(0) = " + std::to_string(p.at_zero()));
      if (y != w && 2 * p.degree() > g.length(w) - g.length(y) - 1)
        rep.fail("P" + pair + " = " + p.str() + " exceeds the degree bound");
      if (e.polynomial(g.inverse(y), g.inverse(w)) != p) rep.fail("P" + pair + " differs on inverses");
    }
  rep.seconds = seconds_since(t0);
  return rep;
}

Report verify_rs(int n, int max_degree) {
  check_degree(n, max_degree);
  const auto t0 = Clock::now();
  Report rep{.suite = "rs", .n = n};
  std::set<std::pair<Tableau, Tableau>> seen;
  for (const Permutation& w : enumerate(n, max_degree)) {
    ++rep.cases;
    auto [p, q] = rs_pair(w);
    if (!p.standard() || !q.standard() || p.shape() != q.shape())
      rep.fail(w.str() + " gives " + p.compact() + ", " + q.compact());
    if (p_symbol(w.inverse()) != q) rep.fail("Q(" + w.str() + ") != P(w^-1)");
    if (rs_inverse(p, q) != w) rep.fail("inverse RS does not recover " + w.str());
    seen.emplace(std::move(p), std::move(q));
  }
  std::size_t pairs = 0;
  for (const Shape& s : partitions(n)) {
    const std::size_t f = standard_tableaux(s).size();
    pairs += f * f;
  }
  ++rep.cases;
  if (seen.size() != factorial(n) || pairs != factorial(n))
    rep.fail(std::to_string(seen.size()) + " distinct pairs from " + std::to_string(factorial(n)) + " elements, " +
             std::to_string(pairs) + " pairs of equal shape");
  rep.seconds = seconds_since(t0);
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem-a",   "knuth",    "evacuation",  "bar-invariance",
                                              "descents",    "knuth-mu", "crystal-djm", "crystal-theorem-a"};
  return names;
}

int long_run_threshold(const std::string& suite) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), suite) == names.end() ? 0 : 7;
}

Report run_suite(const std::string& suite, int n, const SuiteOptions& options) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw InputError("unknown suite '" + suite + "'");
  check_degree(n, options.max_degree);
  if (const int t = long_run_threshold(suite); t && n >= t && !options.long_run)
    throw BoundError("suite " + suite + " at n=" + std::to_string(n) + " needs --long");
  if (suite == "theorem-a") return verify_theorem_a(n, options.max_degree);
  if (suite == "knuth") return verify_knuth_classes(n, options.max_degree);
  if (suite == "evacuation") return verify_evacuation(n, options.max_degree);
  if (suite == "bar-invariance") return verify_bar_invariance(n, options.max_degree);
  if (suite == "descents") return verify_prop_descents(n, options.max_degree);
  if (suite == "knuth-mu") return verify_knuth_mu(n, options.max_degree);
  if (suite == "crystal-djm") return verify_djm(n, n);
  return verify_crystal_cells(n, options.max_degree);
}

}  // namespace klcells
