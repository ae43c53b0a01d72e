#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "klcells/permutation.hpp"
#include "klcells/polynomial.hpp"
#include "klcells/symmetric_group.hpp"

namespace klcells {

namespace detail {

/// Concurrent map with idempotent inserts: readers see either nothing or the
/// final value for a key, never a partially written one.
template <class Value, std::size_t Shards = 64>
class ShardedMap {
 public:
  std::optional<Value> find(std::uint64_t key) const {
    const Shard& s = shard(key);
    std::shared_lock lock(s.mutex);
    auto it = s.map.find(key);
    if (it == s.map.end()) return std::nullopt;
    return it->second;
  }

  /// Keeps the existing value if the key is already present.
  void insert(std::uint64_t key, Value value) {
    Shard& s = shard(key);
    std::unique_lock lock(s.mutex);
    s.map.try_emplace(key, std::move(value));
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (const auto& s : shards_) {
      std::shared_lock lock(s.mutex);
      total += s.map.size();
    }
    return total;
  }

  template <class F>
  void for_each(F&& f) const {
    for (const auto& s : shards_) {
      std::shared_lock lock(s.mutex);
      for (const auto& [k, v] : s.map) f(k, v);
    }
  }

 private:
  struct Shard {
    mutable std::shared_mutex mutex;
    std::unordered_map<std::uint64_t, Value> map;
  };
  Shard& shard(std::uint64_t key) { return shards_[(key * 0x9E3779B97F4A7C15ull) >> 58 & (Shards - 1)]; }
  const Shard& shard(std::uint64_t key) const { return shards_[(key * 0x9E3779B97F4A7C15ull) >> 58 & (Shards - 1)]; }

  std::array<Shard, Shards> shards_;
};

}  // namespace detail

/// Kazhdan-Lusztig polynomials of S_n by the inductive recursion.
///
/// For y < w the first argument is pushed up with P_{y,w} = P_{s y, w}
/// (s y > y, s w < w) until L(w) is contained in L(y); the memo is keyed on
/// the resulting pair.  The recursion then runs through the smallest left
/// descent s of w:
///
///   P_{y,w} = q^{1-c} P_{sy,sw} + q^c P_{y,sw}
///             - sum_{z < sw, sz < z} mu(z, sw) q^{(l(w)-l(z))/2} P_{y,z},
///
/// with c = 1 iff sy < y.  All methods are safe to call concurrently.
class KLEngine {
 public:
  using Index = SymmetricGroup::Index;

  struct MuEntry {
    Index z;
    Coeff mu;
  };

  struct Record {
    Index y;
    Index w;
    IntPolynomial p;
  };

  explicit KLEngine(int n, int max_degree = kDefaultMaxDegree);
  ~KLEngine();

  int degree() const { return group_.degree(); }
  const SymmetricGroup& group() const { return group_; }

  IntPolynomial polynomial(Index y, Index w);
  IntPolynomial polynomial(const Permutation& y, const Permutation& w);

  /// One recursion step through the left descent s_i of w (which must be
  /// one), without normalizing y.  Sub-terms come from the memo.
  IntPolynomial polynomial_via(Index y, Index w, int i);

  /// Mirror-image recursion through right descents, with its own memo and
  /// mu lists.  Agrees with polynomial() when everything is right.
  IntPolynomial polynomial_right(Index y, Index w);

  /// Coefficient of q^{(l(w)-l(y)-1)/2} in P_{y,w} for y < w with odd length
  /// difference, 0 otherwise.
  Coeff mu(Index y, Index w);
  /// mu(y,w) if y < w, mu(w,y) if w < y, else 0.
  Coeff mu_sym(Index y, Index w);

  /// All z < w with mu(z, w) != 0, in increasing index order.
  const std::vector<MuEntry>& mu_below(Index w);

  /// Memo key representative of y for the pair (y, w).
  Index normalize(Index y, Index w) const;

  /// Fills the memo for every pair y <= w.
  void warm();

  std::size_t cache_size() const;
  /// Memo contents sorted by (y, w).
  std::vector<Record> records() const;
  /// Seeds the memo (used when loading a cache file).
  void insert(Index y, Index w, IntPolynomial p);

 private:
  class Recursion;

  SymmetricGroup group_;
  std::vector<std::vector<Index>> by_length_;
  std::unique_ptr<Recursion> left_;
  std::unique_ptr<Recursion> right_;
};

/// Process-wide engine for S_n, created on first use.
KLEngine& kl_engine(int n, int max_degree = kDefaultMaxDegree);
/// Engines created so far, by degree.
std::vector<KLEngine*> kl_engines();

IntPolynomial kl_polynomial(const Permutation& y, const Permutation& w);
Coeff mu(const Permutation& y, const Permutation& w);
Coeff mu_sym(const Permutation& y, const Permutation& w);

}  // namespace klcells
