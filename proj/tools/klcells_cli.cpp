// Command-line front end for the klcells library.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "klcells/cells.hpp"
#include "klcells/crystal.hpp"
#include "klcells/errors.hpp"
#include "klcells/io.hpp"
#include "klcells/kl.hpp"
#include "klcells/kl_cache.hpp"
#include "klcells/tableau.hpp"
#include "klcells/verify.hpp"

namespace fs = std::filesystem;
using namespace klcells;

namespace {

enum Exit { kOk = 0, kViolation = 1, kInput = 2, kBound = 3, kIo = 4 };

struct Config {
  std::string format = "text";
  std::optional<fs::path> cache_dir;
  int max_n = kDefaultMaxDegree;
  bool long_run = false;
};

std::size_t memo_total() {
  std::size_t total = 0;
  for (KLEngine* e : kl_engines()) total += e->cache_size();
  return total;
}

class Session {
 public:
  explicit Session(const Config& cfg) : cfg_(cfg) {
    if (cfg.max_n < 1 || cfg.max_n > kHardMaxDegree)
      throw BoundError("--max-n must lie in 1.." + std::to_string(kHardMaxDegree));
    dir_ = resolve_cache_dir(cfg.cache_dir);
  }

  // Loads the KL cache, if one is configured, before any polynomial work.
  void load() {
    if (!dir_) return;
    load_cache(cache_file(*dir_), cfg_.max_n);
    loaded_ = memo_total();
  }

  void save() {
    if (dir_ && memo_total() != loaded_) save_cache(cache_file(*dir_));
  }

  const std::optional<fs::path>& dir() const { return dir_; }

  void check_n(int n) const {
    if (n < 1) throw InputError("n must be at least 1");
    if (n > cfg_.max_n) throw BoundError("n=" + std::to_string(n) + " exceeds --max-n " + std::to_string(cfg_.max_n));
  }

 private:
  const Config& cfg_;
  std::optional<fs::path> dir_;
  std::size_t loaded_ = 0;
};

Permutation parse_perm(const std::string& s, const Config& cfg) {
  const Permutation w = Permutation::parse(s);
  if (w.degree() > cfg.max_n)
    throw BoundError("degree " + std::to_string(w.degree()) + " exceeds --max-n " + std::to_string(cfg.max_n));
  return w;
}

void print_json(const Json& j) { std::cout << j.dump() << '\n'; }

int cmd_rsk(const Config& cfg, const std::string& arg) {
  const Permutation w = parse_perm(arg, cfg);
  const auto [p, q] = rs_pair(w);
  if (cfg.format == "json")
    print_json({{"w", to_json(w)}, {"P", to_json(p)}, {"Q", to_json(q)}});
  else
    std::cout << "P=" << p.compact() << " Q=" << q.compact() << '\n';
  return kOk;
}

int cmd_rsk_inverse(const Config& cfg, const std::string& p_text, const std::string& q_text) {
  const Tableau p = parse_tableau(p_text);
  const Tableau q = parse_tableau(q_text);
  if (p.size() > cfg.max_n) throw BoundError("tableau size exceeds --max-n");
  const Permutation w = rs_inverse(p, q);
  if (cfg.format == "json")
    print_json({{"w", to_json(w)}});
  else
    std::cout << w.str() << '\n';
  return kOk;
}

int cmd_klpoly(const Config& cfg, Session& s, const std::string& a, const std::string& b) {
  const Permutation y = parse_perm(a, cfg), w = parse_perm(b, cfg);
  if (y.degree() != w.degree()) throw InputError("permutations have different degrees");
  s.load();
  const IntPolynomial p = kl_engine(w.degree(), cfg.max_n).polynomial(y, w);
  s.save();
  if (cfg.format == "json")
    print_json({{"y", to_json(y)}, {"w", to_json(w)}, {"P", to_json(p)}});
  else
    std::cout << p.str() << '\n';
  return kOk;
}

int cmd_mu(const Config& cfg, Session& s, const std::string& a, const std::string& b) {
  const Permutation y = parse_perm(a, cfg), w = parse_perm(b, cfg);
  if (y.degree() != w.degree()) throw InputError("permutations have different degrees");
  s.load();
  auto& e = kl_engine(w.degree(), cfg.max_n);
  const auto iy = e.group().index_of(y), iw = e.group().index_of(w);
  const Coeff m = e.mu(iy, iw), ms = e.mu_sym(iy, iw);
  s.save();
  if (cfg.format == "json")
    print_json({{"y", to_json(y)}, {"w", to_json(w)}, {"mu", m}, {"mu_sym", ms}});
  else
    std::cout << m << '\n';
  return kOk;
}

int cmd_cells(const Config& cfg, Session& s, int n, const std::string& side) {
  s.check_n(n);
  if (side != "left" && side != "right") throw InputError("side must be left or right");
  s.load();
  const CellPartition part = cells(n, side == "left" ? CellSide::Left : CellSide::Right, cfg.max_n);
  s.save();
  if (cfg.format == "json") {
    print_json(to_json(part, n));
    return kOk;
  }
  for (const auto& cell : part.cells) {
    std::string line;
    for (const auto& w : cell) line += (line.empty() ? "" : " ") + w.str();
    std::cout << line << '\n';
  }
  return kOk;
}

int cmd_graph(const Config& cfg, Session& s, int n, const std::string& kind, int rank) {
  s.check_n(n);
  if (kind == "cells") {
    s.load();
    const CellGraph g = left_cell_graph(n, cfg.max_n);
    s.save();
    if (cfg.format == "json")
      print_json(to_json(g));
    else
      std::cout << to_dot(g);
  } else if (kind == "crystal") {
    const CrystalGraph g = crystal_graph(n, rank > 0 ? rank : n);
    if (cfg.format == "json")
      print_json(to_json(g));
    else
      std::cout << to_dot(g);
  } else {
    throw InputError("graph kind must be cells or crystal");
  }
  return kOk;
}

int cmd_crystal(const Config& cfg, Session& s, int n, int rank) {
  s.check_n(n);
  const auto comps = decompose(n, rank > 0 ? rank : n);
  if (cfg.format == "json") {
    Json out = Json::array();
    for (const auto& c : comps) {
      Json words = Json::array();
      for (const auto& b : c.words) words.push_back(to_json(b));
      out.push_back({{"label", to_json(c.words.front())},
                     {"highest_weight", to_json(c.highest_weight)},
                     {"shape", c.shape.rows()},
                     {"Q", to_json(c.q)},
                     {"q_constant", c.q_constant},
                     {"words", words}});
    }
    print_json(out);
  } else {
    for (const auto& c : comps) {
      std::string label;
      for (int x : c.words.front().letters) label += std::to_string(x) + (c.words.front().rank > 9 ? "," : "");
      std::cout << label << " shape=" << c.shape.str() << " Q=" << c.q.compact() << " size=" << c.words.size()
                << (c.q_constant ? "" : " Q-NOT-CONSTANT") << '\n';
    }
  }
  return kOk;
}

int cmd_verify(const Config& cfg, Session& s, const std::string& suite, int n) {
  s.check_n(n);
  s.load();
  const Report r = run_suite(suite, n, {.max_degree = cfg.max_n, .long_run = cfg.long_run});
  s.save();
  if (cfg.format == "json")
    print_json(to_json(r));
  else
    std::cout << report_text(r);
  std::cerr << "wall time " << r.seconds << " s\n";
  return r.ok() ? kOk : kViolation;
}

int cmd_cache(const Config& cfg, Session& s, const std::string& action, int n) {
  if (!s.dir()) throw InputError("no cache directory: pass --cache-dir or set " + std::string(kCacheDirEnv));
  const fs::path file = cache_file(*s.dir());
  if (action == "info") {
    const std::size_t count = count_cache_entries(file);
    if (cfg.format == "json")
      print_json({{"file", file.string()}, {"entries", count}});
    else
      std::cout << count << " entries\n";
  } else if (action == "clear") {
    clear_cache(file);
    if (cfg.format == "json")
      print_json({{"file", file.string()}, {"entries", 0}});
    else
      std::cout << "0 entries\n";
  } else if (action == "warm") {
    if (n == 0) throw InputError("cache warm needs n");
    s.check_n(n);
    s.load();
    kl_engine(n, cfg.max_n).warm();
    const std::size_t count = save_cache(file);
    if (cfg.format == "json")
      print_json({{"file", file.string()}, {"entries", count}});
    else
      std::cout << count << " entries\n";
  } else {
    throw InputError("cache action must be info, clear or warm");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robinson-Schensted, Kazhdan-Lusztig polynomials, cells and crystals of S_n"};
  app.require_subcommand(1);
  Config cfg;
  std::string cache_dir;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--cache-dir", cache_dir, std::string("KL cache directory (overridden by ") + kCacheDirEnv + ")");
  app.add_option("--max-n", cfg.max_n, "Largest accepted degree");
  app.add_flag("--long", cfg.long_run, "Allow the long verification runs");

  std::string a, b, side = "left", kind = "cells", suite, action;
  int n = 0, rank = 0;

  auto* rsk = app.add_subcommand("rsk", "P and Q symbols of a permutation");
  rsk->add_option("w", a, "Permutation, e.g. 31524")->required();
  auto* rski = app.add_subcommand("rsk-inverse", "Permutation with the given P and Q symbols");
  rski->add_option("P", a, "Tableau as JSON rows")->required();
  rski->add_option("Q", b, "Tableau as JSON rows")->required();
  auto* klpoly = app.add_subcommand("klpoly", "Kazhdan-Lusztig polynomial P_{y,w}");
  klpoly->add_option("y", a)->required();
  klpoly->add_option("w", b)->required();
  auto* mucmd = app.add_subcommand("mu", "mu(y,w)");
  mucmd->add_option("y", a)->required();
  mucmd->add_option("w", b)->required();
  auto* cellscmd = app.add_subcommand("cells", "Left or right cells of S_n");
  cellscmd->add_option("n", n)->required();
  cellscmd->add_option("side", side)->check(CLI::IsMember({"left", "right"}));
  auto* graph = app.add_subcommand("graph", "Cell graph or crystal graph");
  graph->add_option("n", n)->required();
  graph->add_option("kind", kind)->check(CLI::IsMember({"cells", "crystal"}));
  graph->add_option("--rank", rank, "Crystal rank (default n)");
  auto* crystal = app.add_subcommand("crystal", "Components of the tensor-power crystal");
  crystal->add_option("n", n)->required();
  crystal->add_option("--rank", rank, "Crystal rank (default n)");
  auto* verify = app.add_subcommand("verify", "Run an exhaustive check");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("n", n)->required();
  auto* cache = app.add_subcommand("cache", "Inspect or fill the KL cache");
  cache->add_option("action", action)->required()->check(CLI::IsMember({"info", "clear", "warm"}));
  cache->add_option("n", n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  if (!cache_dir.empty()) cfg.cache_dir = fs::path(cache_dir);

  try {
    Session s(cfg);
    if (*rsk) return cmd_rsk(cfg, a);
    if (*rski) return cmd_rsk_inverse(cfg, a, b);
    if (*klpoly) return cmd_klpoly(cfg, s, a, b);
    if (*mucmd) return cmd_mu(cfg, s, a, b);
    if (*cellscmd) return cmd_cells(cfg, s, n, side);
    if (*graph) return cmd_graph(cfg, s, n, kind, rank);
    if (*crystal) return cmd_crystal(cfg, s, n, rank);
    if (*verify) return cmd_verify(cfg, s, suite, n);
    if (*cache) return cmd_cache(cfg, s, action, n);
  } catch (const BoundError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBound;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
