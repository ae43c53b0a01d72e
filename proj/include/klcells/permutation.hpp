#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace klcells {

/// Default cap on the degree of enumeration-based work.
inline constexpr int kDefaultMaxDegree = 8;
/// Nothing larger is accepted anywhere, whatever the configuration says.
inline constexpr int kHardMaxDegree = 10;

/// The adjacent transposition s_i = (i, i+1), 1 <= i <= n-1.
struct SimpleReflection {
  int index = 1;
  auto operator<=>(const SimpleReflection&) const = default;
};

/// A subset of {s_1, ..., s_{n-1}}, stored as a bit mask (bit i <-> s_i).
class DescentSet {
 public:
  DescentSet() = default;
  explicit DescentSet(std::uint32_t mask) : mask_(mask) {}

  bool contains(int i) const { return (mask_ >> i) & 1u; }
  void insert(int i) { mask_ |= (1u << i); }
  bool empty() const { return mask_ == 0; }
  int size() const;
  bool subset_of(DescentSet other) const { return (mask_ & ~other.mask_) == 0; }
  std::uint32_t mask() const { return mask_; }
  std::vector<int> members() const;
  /// "{s1,s3}" style.
  std::string str() const;

  friend bool operator==(DescentSet, DescentSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Element of S_n in one-line notation: word[i-1] is the image of i.
///
/// Composition is (u * v)(i) = u(v(i)), i.e. v acts first.  Under this
/// convention right multiplication by s_i swaps positions i, i+1 of the word
/// and left multiplication swaps the letters i and i+1.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError unless `word` is a permutation of 1..n.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// w0 = n (n-1) ... 1.
  static Permutation longest(int n);
  static Permutation simple(int n, int i);
  /// Digit string ("31524") or JSON integer array ("[1,10,2,...]").
  static Permutation parse(std::string_view text);

  int degree() const { return static_cast<int>(word_.size()); }
  /// Image of i, 1-based.
  int operator()(int i) const { return word_[i - 1]; }
  std::span<const int> word() const { return word_; }

  Permutation inverse() const;
  /// Number of inversions.
  int length() const;
  DescentSet left_descents() const;
  DescentSet right_descents() const;
  bool is_identity() const;

  /// Digit string for n <= 9, JSON array otherwise.
  std::string str() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

enum class Side { Left, Right };

Permutation compose(const Permutation& u, const Permutation& v);
inline Permutation operator*(const Permutation& u, const Permutation& v) { return compose(u, v); }

int length(const Permutation& w);
DescentSet left_descents(const Permutation& w);
DescentSet right_descents(const Permutation& w);

/// w * s_i (Side::Right) or s_i * w (Side::Left).
Permutation multiply_simple(const Permutation& w, int i, Side side);
Permutation multiply_simple(const Permutation& w, SimpleReflection s, Side side);

/// Bruhat order by sorted-prefix dominance.
bool bruhat_leq(const Permutation& y, const Permutation& w);

/// Repeatedly strips the smallest right descent; the product s_{i1} ... s_{ir}
/// of the result equals w and r = length(w).
std::vector<SimpleReflection> reduced_word(const Permutation& w);
/// Product s_{i1} * ... * s_{ir} in S_n.
Permutation from_reduced_word(int n, std::span<const SimpleReflection> word);

/// Minimal-length element of the right coset w<s_i, s_j>, |i - j| = 1.
Permutation min_coset_rep(const Permutation& w, int i, int j);

/// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> enumerate(int n, int max_degree = kDefaultMaxDegree);

/// Lexicographic index of w among the elements of S_n (Lehmer code).
std::uint64_t lex_rank(const Permutation& w);
Permutation lex_unrank(int n, std::uint64_t rank);

std::uint64_t factorial(int n);

}  // namespace klcells

template <>
struct std::hash<klcells::Permutation> {
  std::size_t operator()(const klcells::Permutation& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : w.word()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};
