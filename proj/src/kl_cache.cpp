#include "klcells/kl_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <string>

#include "klcells/errors.hpp"
#include "klcells/kl.hpp"

namespace klcells {

namespace fs = std::filesystem;

std::optional<fs::path> resolve_cache_dir(const std::optional<fs::path>& flag) {
  if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env != '\0') return fs::path(env);
  return flag;
}

fs::path cache_file(const fs::path& dir) { return dir / kCacheFileName; }

std::size_t load_cache(const fs::path& file, int max_degree) {
  std::error_code ec;
  if (!fs::exists(file, ec)) return 0;
  std::ifstream in(file);
  if (!in) throw IoError("cannot read cache file " + file.string());
  std::string line;
  std::size_t count = 0, lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) throw IoError(file.string() + ":" + std::to_string(lineno) + ": expected three tab-separated fields");
    try {
      const Permutation y = Permutation::parse(line.substr(0, t1));
      const Permutation w = Permutation::parse(line.substr(t1 + 1, t2 - t1 - 1));
      const IntPolynomial p = IntPolynomial::from_csv(line.substr(t2 + 1));
      if (y.degree() != w.degree()) throw InputError("degree mismatch");
      if (y.degree() > max_degree) continue;
      auto& engine = kl_engine(y.degree(), max_degree);
      engine.insert(engine.group().index_of(y), engine.group().index_of(w), p);
      ++count;
    } catch (const InputError& e) {
      throw IoError(file.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return count;
}

std::size_t save_cache(const fs::path& file) {
  std::error_code ec;
  if (file.has_parent_path()) fs::create_directories(file.parent_path(), ec);
  const fs::path tmp = file.string() + ".tmp";
  std::size_t count = 0;
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write cache file " + tmp.string());
    for (KLEngine* engine : kl_engines()) {
      const auto& g = engine->group();
      for (const auto& r : engine->records()) {
        out << g.element(r.y).str() << '\t' << g.element(r.w).str() << '\t' << r.p.csv() << '\n';
        ++count;
      }
    }
    if (!out) throw IoError("failed writing cache file " + tmp.string());
  }
  fs::rename(tmp, file, ec);
  if (ec) throw IoError("cannot replace cache file " + file.string() + ": " + ec.message());
  return count;
}

std::size_t count_cache_entries(const fs::path& file) {
  std::error_code ec;
  if (!fs::exists(file, ec)) return 0;
  std::ifstream in(file);
  if (!in) throw IoError("cannot read cache file " + file.string());
  std::size_t count = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++count;
  return count;
}

bool clear_cache(const fs::path& file) {
  std::error_code ec;
  const bool removed = fs::remove(file, ec);
  if (ec) throw IoError("cannot remove cache file " + file.string() + ": " + ec.message());
  return removed;
}

}  // namespace klcells
