#include "klcells/kl.hpp"

#include <algorithm>
#include <map>

#include "klcells/errors.hpp"

namespace klcells {

namespace {

std::uint64_t key_of(SymmetricGroup::Index y, SymmetricGroup::Index w) {
  return (static_cast<std::uint64_t>(y) << 32) | w;
}

}  // namespace

/// One handed version of the recursion.  The right-handed one is the same
/// algorithm with s*x replaced by x*s and left descents by right descents.
class KLEngine::Recursion {
 public:
  Recursion(const SymmetricGroup& g, const std::vector<std::vector<Index>>& by_length, Side side)
      : g_(g), by_length_(by_length), side_(side), mu_once_(new std::once_flag[g.order()]), mu_lists_(g.order()) {}

  IntPolynomial polynomial(Index y, Index w) {
    if (y == w) return IntPolynomial::constant(1);
    if (!g_.bruhat_leq(y, w)) return {};
    y = normalize(y, w);
    if (y == w) return IntPolynomial::constant(1);
    const std::uint64_t key = key_of(y, w);
    if (auto hit = memo_.find(key)) return *std::move(hit);
    IntPolynomial p = step(y, w, descents(w).members().front());
    memo_.insert(key, p);
    return p;
  }

  // y <= w and s_i a descent of w on this side.
  IntPolynomial step(Index y, Index w, int i) {
    const Index v = mul(i, w);
    const Index sy = mul(i, y);
    const int c = g_.length(sy) < g_.length(y) ? 1 : 0;
    IntPolynomial p = polynomial(sy, v).shifted(1 - c);
    p += polynomial(y, v).shifted(c);
    for (const auto& [z, m] : mu_below(v)) {
      if (g_.length(mul(i, z)) > g_.length(z)) continue;
      if (!g_.bruhat_leq(y, z)) continue;
      p -= m * polynomial(y, z).shifted((g_.length(w) - g_.length(z)) / 2);
    }
    return p;
  }

  Index normalize(Index y, Index w) const {
    if (y == w) return y;
    for (bool moved = true; moved;) {
      moved = false;
      const DescentSet dw = descents(w);
      const DescentSet dy = descents(y);
      for (int i : dw.members()) {
        if (!dy.contains(i)) {
          y = mul(i, y);
          moved = true;
          break;
        }
      }
    }
    return y;
  }

  Coeff mu(Index y, Index w) {
    if (y == w) return 0;
    const int d = g_.length(w) - g_.length(y);
    if (d <= 0 || d % 2 == 0) return 0;
    if (!g_.bruhat_leq(y, w)) return 0;
    return polynomial(y, w).coefficient((d - 1) / 2);
  }

  const std::vector<MuEntry>& mu_below(Index w) {
    std::call_once(mu_once_[w], [&] {
      std::vector<MuEntry> out;
      const int lw = g_.length(w);
      for (int l = lw - 1; l >= 0; l -= 2)
        for (Index z : by_length_[l])
          if (const Coeff m = mu(z, w); m != 0) out.push_back({z, m});
      std::sort(out.begin(), out.end(), [](const MuEntry& a, const MuEntry& b) { return a.z < b.z; });
      mu_lists_[w] = std::move(out);
    });
    return mu_lists_[w];
  }

  std::size_t size() const { return memo_.size(); }

  std::vector<Record> records() const {
    std::vector<Record> out;
    memo_.for_each([&](std::uint64_t key, const IntPolynomial& p) {
      out.push_back({static_cast<Index>(key >> 32), static_cast<Index>(key & 0xffffffffu), p});
    });
    std::sort(out.begin(), out.end(), [](const Record& a, const Record& b) {
      return std::tie(a.y, a.w) < std::tie(b.y, b.w);
    });
    return out;
  }

  void insert(Index y, Index w, IntPolynomial p) { memo_.insert(key_of(normalize(y, w), w), std::move(p)); }

  DescentSet descents(Index x) const { return side_ == Side::Left ? g_.left_descents(x) : g_.right_descents(x); }
  Index mul(int i, Index x) const { return side_ == Side::Left ? g_.left_multiply(i, x) : g_.right_multiply(x, i); }

 private:
  const SymmetricGroup& g_;
  const std::vector<std::vector<Index>>& by_length_;
  Side side_;
  detail::ShardedMap<IntPolynomial> memo_;
  std::unique_ptr<std::once_flag[]> mu_once_;
  std::vector<std::vector<MuEntry>> mu_lists_;
};

KLEngine::KLEngine(int n, int max_degree) : group_(n, max_degree) {
  const int top = n * (n - 1) / 2;
  by_length_.resize(static_cast<std::size_t>(top) + 1);
  for (Index x = 0; x < group_.order(); ++x) by_length_[group_.length(x)].push_back(x);
  left_ = std::make_unique<Recursion>(group_, by_length_, Side::Left);
  right_ = std::make_unique<Recursion>(group_, by_length_, Side::Right);
}

KLEngine::~KLEngine() = default;

IntPolynomial KLEngine::polynomial(Index y, Index w) { return left_->polynomial(y, w); }

IntPolynomial KLEngine::polynomial(const Permutation& y, const Permutation& w) {
  if (y.degree() != w.degree()) throw InputError("degree mismatch in kl_polynomial");
  return polynomial(group_.index_of(y), group_.index_of(w));
}

IntPolynomial KLEngine::polynomial_via(Index y, Index w, int i) {
  if (!group_.left_descents(w).contains(i)) throw InputError("s" + std::to_string(i) + " is not a left descent");
  if (y == w) return IntPolynomial::constant(1);
  if (!group_.bruhat_leq(y, w)) return {};
  return left_->step(y, w, i);
}

IntPolynomial KLEngine::polynomial_right(Index y, Index w) { return right_->polynomial(y, w); }

Coeff KLEngine::mu(Index y, Index w) { return left_->mu(y, w); }

Coeff KLEngine::mu_sym(Index y, Index w) {
  if (group_.length(y) < group_.length(w)) return mu(y, w);
  if (group_.length(w) < group_.length(y)) return mu(w, y);
  return 0;
}

const std::vector<KLEngine::MuEntry>& KLEngine::mu_below(Index w) { return left_->mu_below(w); }

KLEngine::Index KLEngine::normalize(Index y, Index w) const { return left_->normalize(y, w); }

void KLEngine::warm() {
  for (Index w = 0; w < group_.order(); ++w)
    for (Index y = 0; y < group_.order(); ++y)
      if (group_.bruhat_leq(y, w)) polynomial(y, w);
}

std::size_t KLEngine::cache_size() const { return left_->size(); }

std::vector<KLEngine::Record> KLEngine::records() const { return left_->records(); }

void KLEngine::insert(Index y, Index w, IntPolynomial p) {
  if (y == w || !group_.bruhat_leq(y, w)) return;
  left_->insert(y, w, std::move(p));
}

// ---------------------------------------------------------------- registry

namespace {

std::mutex registry_mutex;
std::map<int, std::unique_ptr<KLEngine>>& registry() {
  static std::map<int, std::unique_ptr<KLEngine>> engines;
  return engines;
}

}  // namespace

KLEngine& kl_engine(int n, int max_degree) {
  if (n < 1) throw InputError("degree must be at least 1");
  if (n > std::min(max_degree, kHardMaxDegree))
    throw BoundError("degree " + std::to_string(n) + " exceeds limit " + std::to_string(std::min(max_degree, kHardMaxDegree)));
  std::lock_guard lock(registry_mutex);
  auto& slot = registry()[n];
  if (!slot) slot = std::make_unique<KLEngine>(n, max_degree);
  return *slot;
}

std::vector<KLEngine*> kl_engines() {
  std::lock_guard lock(registry_mutex);
  std::vector<KLEngine*> out;
  for (auto& [n, e] : registry()) out.push_back(e.get());
  return out;
}

IntPolynomial kl_polynomial(const Permutation& y, const Permutation& w) {
  if (y.degree() != w.degree()) throw InputError("degree mismatch in kl_polynomial");
  return kl_engine(y.degree()).polynomial(y, w);
}

Coeff mu(const Permutation& y, const Permutation& w) {
  if (y.degree() != w.degree()) throw InputError("degree mismatch in mu");
  auto& e = kl_engine(y.degree());
  return e.mu(e.group().index_of(y), e.group().index_of(w));
}

Coeff mu_sym(const Permutation& y, const Permutation& w) {
  if (y.degree() != w.degree()) throw InputError("degree mismatch in mu_sym");
  auto& e = kl_engine(y.degree());
  return e.mu_sym(e.group().index_of(y), e.group().index_of(w));
}

}  // namespace klcells
