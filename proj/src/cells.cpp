#include "klcells/cells.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

#include "klcells/errors.hpp"
#include "klcells/kl.hpp"
#include "klcells/knuth.hpp"

namespace klcells {

using Index = std::uint32_t;
using Adjacency = std::vector<std::vector<Index>>;

std::size_t CellGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& o : out) e += o.size();
  return e;
}

CellGraph left_cell_graph(int n, int max_degree, unsigned threads) {
  KLEngine& engine = kl_engine(n, max_degree);
  const SymmetricGroup& g = engine.group();
  const auto N = static_cast<Index>(g.order());

  // mu lists first; they are where the time goes and they parallelize.
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  {
    std::atomic<Index> next{0};
    auto worker = [&] {
      for (Index w; (w = next.fetch_add(1)) < N;) engine.mu_below(N - 1 - w);
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  CellGraph graph;
  graph.n = n;
  graph.vertices = g.elements();
  graph.out.assign(N, {});
  for (Index w = 0; w < N; ++w) {
    const DescentSet lw = g.left_descents(w);
    for (const auto& [z, m] : engine.mu_below(w)) {
      const DescentSet lz = g.left_descents(z);
      if (!lz.subset_of(lw)) graph.out[z].push_back(w);
      if (!lw.subset_of(lz)) graph.out[w].push_back(z);
    }
  }
  for (auto& o : graph.out) {
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
  }
  return graph;
}

std::vector<std::vector<Index>> strongly_connected_components(const Adjacency& out) {
  // Iterative Tarjan.
  const auto N = static_cast<Index>(out.size());
  constexpr Index kUnvisited = ~Index{0};
  std::vector<Index> index(N, kUnvisited), low(N, 0);
  std::vector<bool> on_stack(N, false);
  std::vector<Index> stack;
  std::vector<std::vector<Index>> comps;
  Index counter = 0;

  struct Frame {
    Index v;
    std::size_t edge;
  };
  std::vector<Frame> call;
  for (Index root = 0; root < N; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < out[f.v].size()) {
        const Index u = out[f.v][f.edge++];
        if (index[u] == kUnvisited) {
          index[u] = low[u] = counter++;
          stack.push_back(u);
          on_stack[u] = true;
          call.push_back({u, 0});
        } else if (on_stack[u]) {
          low[f.v] = std::min(low[f.v], index[u]);
        }
        continue;
      }
      const Index v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        auto& comp = comps.emplace_back();
        Index u;
        do {
          u = stack.back();
          stack.pop_back();
          on_stack[u] = false;
          comp.push_back(u);
        } while (u != v);
        std::sort(comp.begin(), comp.end());
      }
    }
  }
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

std::vector<Index> reachable_from(const Adjacency& out, Index source) {
  std::vector<bool> seen(out.size(), false);
  std::vector<Index> stack{source}, result;
  seen[source] = true;
  while (!stack.empty()) {
    const Index v = stack.back();
    stack.pop_back();
    result.push_back(v);
    for (Index u : out[v])
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::size_t CellPartition::cell_of(const Permutation& w) const {
  for (std::size_t c = 0; c < cells.size(); ++c)
    if (std::binary_search(cells[c].begin(), cells[c].end(), w)) return c;
  throw InputError(w.str() + " is not in any cell");
}

CellPartition cells(int n, CellSide side, int max_degree) {
  const CellGraph graph = left_cell_graph(n, max_degree);
  const auto comps = strongly_connected_components(graph.out);
  const std::size_t C = comps.size();

  std::vector<std::size_t> comp_of(graph.vertices.size());
  for (std::size_t c = 0; c < C; ++c)
    for (Index v : comps[c]) comp_of[v] = c;
  Adjacency condensed(C);
  for (Index v = 0; v < graph.out.size(); ++v)
    for (Index u : graph.out[v])
      if (comp_of[u] != comp_of[v]) condensed[comp_of[v]].push_back(static_cast<Index>(comp_of[u]));

  // Cell contents under the requested side; right cells are inverses of left cells.
  std::vector<std::vector<Permutation>> members(C);
  for (std::size_t c = 0; c < C; ++c) {
    for (Index v : comps[c])
      members[c].push_back(side == CellSide::Left ? graph.vertices[v] : graph.vertices[v].inverse());
    std::sort(members[c].begin(), members[c].end());
  }
  std::vector<std::size_t> order(C);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return members[a].front() < members[b].front(); });
  std::vector<std::size_t> position(C);
  for (std::size_t k = 0; k < C; ++k) position[order[k]] = k;

  CellPartition part;
  part.side = side;
  part.leq.assign(C, std::vector<bool>(C, false));
  for (std::size_t k = 0; k < C; ++k) part.cells.push_back(std::move(members[order[k]]));
  for (std::size_t c = 0; c < C; ++c)
    for (Index r : reachable_from(condensed, static_cast<Index>(c))) part.leq[position[c]][position[r]] = true;
  return part;
}

std::vector<Permutation> left_closure(const Permutation& w, int max_degree) {
  const CellGraph graph = left_cell_graph(w.degree(), max_degree);
  Adjacency reverse(graph.out.size());
  for (Index v = 0; v < graph.out.size(); ++v)
    for (Index u : graph.out[v]) reverse[u].push_back(v);
  std::vector<Permutation> out;
  for (Index v : reachable_from(reverse, static_cast<Index>(lex_rank(w)))) out.push_back(graph.vertices[v]);
  return out;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Report verify_prop_descents(int n, int max_degree) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep{.suite = "descents", .n = n};
  const CellGraph graph = left_cell_graph(n, max_degree);
  const auto& V = graph.vertices;
  auto check = [&](Index y, Index w, const char* what) {
    ++rep.cases;
    const DescentSet ry = V[y].right_descents(), rw = V[w].right_descents();
    if (!rw.subset_of(ry))
      rep.fail(std::string(what) + " " + V[y].str() + " <=_L " + V[w].str() + " but R(" + V[y].str() + ")=" + ry.str() +
               " does not contain R(" + V[w].str() + ")=" + rw.str() + "; L(" + V[y].str() + ")=" +
               V[y].left_descents().str() + " L(" + V[w].str() + ")=" + V[w].left_descents().str() +
               " mu=" + std::to_string(mu_sym(V[y], V[w])));
  };
  for (Index x = 0; x < V.size(); ++x)
    for (Index u : graph.out[x]) check(x, u, "edge");
  for (Index y = 0; y < V.size(); ++y)
    for (Index w : reachable_from(graph.out, y)) check(y, w, "path");
  const auto comps = strongly_connected_components(graph.out);
  for (const auto& comp : comps)
    for (Index v : comp) {
      ++rep.cases;
      if (V[v].right_descents() != V[comp.front()].right_descents())
        rep.fail("left cell of " + V[comp.front()].str() + " mixes right descent sets " +
                 V[comp.front()].right_descents().str() + " and " + V[v].right_descents().str() + " (at " +
                 V[v].str() + ")");
    }
  rep.note("elements", std::to_string(V.size()));
  rep.note("edges", std::to_string(graph.edge_count()));
  rep.note("cells", std::to_string(comps.size()));
  rep.seconds = seconds_since(t0);
  return rep;
}

Report verify_knuth_mu(int n, int max_degree) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep{.suite = "knuth-mu", .n = n};
  KLEngine& engine = kl_engine(n, max_degree);
  const SymmetricGroup& g = engine.group();
  const CellGraph graph = left_cell_graph(n, max_degree);
  const auto comps = strongly_connected_components(graph.out);
  std::vector<std::size_t> cell(g.order());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Index v : comps[c]) cell[v] = c;
  auto same_right_cell = [&](Index a, Index b) { return cell[g.inverse(a)] == cell[g.inverse(b)]; };
  auto describe = [&](Index x) {
    const Permutation& p = g.element(x);
    return p.str() + " (L=" + p.left_descents().str() + ", R=" + p.right_descents().str() + ")";
  };

  for (int i = 1; i < n; ++i) {
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j >= n) continue;
      std::vector<Index> dom;
      std::vector<Index> image(g.order());
      for (Index x = 0; x < g.order(); ++x) {
        if (!in_D(g.element(x), i, j)) continue;
        dom.push_back(x);
        image[x] = g.index_of(k_move(g.element(x), i, j));
      }
      const std::string tag = " (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
      for (Index w : dom) {
        ++rep.cases;
        if (!same_right_cell(w, image[w]))
          rep.fail("K_ij(w) not right-equivalent to w" + tag + ": w=" + describe(w) + " K(w)=" + describe(image[w]) +
                   " mu(w|K(w))=" + std::to_string(engine.mu_sym(w, image[w])));
      }
      for (Index y : dom)
        for (Index w : dom) {
          if (y == w) continue;
          const Coeff m = engine.mu_sym(y, w);
          if (m != 0) {
            ++rep.cases;
            const Coeff mk = engine.mu_sym(image[y], image[w]);
            if (mk == 0)
              rep.fail("mu not preserved" + tag + ": y=" + describe(y) + " w=" + describe(w) + " mu(y|w)=" +
                       std::to_string(m) + " K(y)=" + describe(image[y]) + " K(w)=" + describe(image[w]) +
                       " mu(K(y)|K(w))=0");
          }
          if (cell[y] == cell[w]) {
            ++rep.cases;
            if (cell[image[y]] != cell[image[w]])
              rep.fail("left cell not preserved" + tag + ": y=" + describe(y) + " w=" + describe(w) + " K(y)=" +
                       describe(image[y]) + " K(w)=" + describe(image[w]));
          }
        }
    }
  }
  rep.note("elements", std::to_string(g.order()));
  rep.seconds = seconds_since(t0);
  return rep;
}

}  // namespace klcells
