#include <doctest.h>

#include "klcells/errors.hpp"
#include "klcells/permutation.hpp"
#include "klcells/symmetric_group.hpp"
#include "oracles/oracles.hpp"

using namespace klcells;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

oracle::Word word_of(const Permutation& w) { return {w.word().begin(), w.word().end()}; }

}  // namespace

TEST_CASE("construction and parsing") {
  CHECK(P("31524").degree() == 5);
  CHECK(Permutation::parse("[3,1,2]") == P("312"));
  CHECK(Permutation::parse("[1,2,3,4,5,6,7,8,10,9]").str() == "[1,2,3,4,5,6,7,8,10,9]");
  CHECK_THROWS_AS(P("112"), InputError);
  CHECK_THROWS_AS(P("13"), InputError);
  CHECK_THROWS_AS(P("1a2"), InputError);
  CHECK_THROWS_AS(Permutation::parse("[1,2"), InputError);
  CHECK_THROWS_AS(Permutation::parse(""), InputError);
  CHECK_THROWS_AS(Permutation(oracle::identity(11)), BoundError);
}

TEST_CASE("compose") {
  CHECK(compose(Permutation::identity(3), P("231")) == P("231"));
  CHECK(compose(P("213"), P("132")) == P("231"));
  for (const auto& w : enumerate(5)) {
    CHECK(compose(w, w.inverse()).is_identity());
    CHECK(w.inverse().inverse() == w);
  }
  CHECK_THROWS_AS(compose(P("12"), P("123")), InputError);
  // Composition agrees with composing maps by hand.
  for (const auto& u : enumerate(4))
    for (const auto& v : enumerate(4)) {
      const Permutation uv = u * v;
      for (int i = 1; i <= 4; ++i) CHECK(uv(i) == u(v(i)));
    }
}

TEST_CASE("length") {
  CHECK(length(Permutation::identity(6)) == 0);
  CHECK(length(P("4321")) == 6);
  CHECK(length(P("31524")) == 4);
  for (int n = 1; n <= 6; ++n) {
    const Permutation w0 = Permutation::longest(n);
    for (const auto& w : enumerate(n)) {
      CHECK(w.length() + (w * w0).length() == n * (n - 1) / 2);
      CHECK(w.length() == w.inverse().length());
      CHECK(w.length() == oracle::inversions(word_of(w)));
    }
  }
}

TEST_CASE("descent sets") {
  CHECK(right_descents(P("123")).empty());
  CHECK(right_descents(P("31524")).members() == std::vector<int>{1, 3});
  CHECK(right_descents(P("31524")).str() == "{s1,s3}");
  CHECK(left_descents(P("321")).members() == std::vector<int>{1, 2});
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : enumerate(n)) {
      CHECK(w.right_descents() == w.inverse().left_descents());
      for (int i = 1; i < n; ++i) {
        CHECK(w.left_descents().contains(i) == (multiply_simple(w, i, Side::Left).length() < w.length()));
        CHECK(w.right_descents().contains(i) == (multiply_simple(w, i, Side::Right).length() < w.length()));
      }
    }
  const Permutation w0 = Permutation::longest(4);
  CHECK(w0.left_descents().size() == 3);
  CHECK(w0.right_descents().size() == 3);
}

TEST_CASE("multiply_simple") {
  CHECK(multiply_simple(P("123"), 1, Side::Right) == P("213"));
  CHECK(multiply_simple(P("213"), 2, Side::Left) == P("312"));
  const Permutation w0 = Permutation::longest(4);
  for (int i = 1; i <= 3; ++i) {
    CHECK(multiply_simple(w0, i, Side::Left).length() == 5);
    CHECK(multiply_simple(w0, i, Side::Right).length() == 5);
  }
  for (const auto& w : enumerate(5))
    for (int i = 1; i < 5; ++i) {
      const Permutation ws = multiply_simple(w, i, Side::Right);
      CHECK(std::abs(ws.length() - w.length()) == 1);
      CHECK((ws.length() > w.length()) == (w(i) < w(i + 1)));
      CHECK(ws == w * Permutation::simple(5, i));
      CHECK(multiply_simple(w, i, Side::Left) == Permutation::simple(5, i) * w);
    }
}

TEST_CASE("w w0 reverses the word") {
  for (const auto& w : enumerate(5)) {
    auto rev = word_of(w);
    std::reverse(rev.begin(), rev.end());
    CHECK(word_of(w * Permutation::longest(5)) == rev);
  }
}

TEST_CASE("bruhat order against subword oracle") {
  CHECK(bruhat_leq(P("1324"), P("3412")));
  CHECK_FALSE(bruhat_leq(P("321"), P("312")));
  for (const auto& w : enumerate(4)) CHECK(bruhat_leq(Permutation::identity(4), w));
  for (int n = 1; n <= 5; ++n) {
    const auto elems = enumerate(n);
    for (const auto& w : elems) {
      const auto below = oracle::bruhat_below(word_of(w));
      for (const auto& y : elems) CHECK(bruhat_leq(y, w) == below.contains(word_of(y)));
    }
  }
  const auto elems = enumerate(4);
  for (const auto& a : elems)
    for (const auto& b : elems) {
      if (bruhat_leq(a, b) && bruhat_leq(b, a)) CHECK(a == b);
      for (const auto& c : elems)
        if (bruhat_leq(a, b) && bruhat_leq(b, c)) CHECK(bruhat_leq(a, c));
    }
  CHECK_THROWS_AS(bruhat_leq(P("12"), P("123")), InputError);
}

TEST_CASE("reduced words") {
  CHECK(reduced_word(Permutation::identity(3)).empty());
  const auto s2 = reduced_word(P("132"));
  REQUIRE(s2.size() == 1);
  CHECK(s2[0].index == 2);
  std::vector<int> idx;
  for (auto s : reduced_word(P("321"))) idx.push_back(s.index);
  CHECK(idx == std::vector<int>{1, 2, 1});
  for (const auto& w : enumerate(6)) {
    const auto red = reduced_word(w);
    CHECK(static_cast<int>(red.size()) == w.length());
    CHECK(from_reduced_word(6, red) == w);
  }
}

TEST_CASE("minimal coset representatives") {
  CHECK(min_coset_rep(Permutation::identity(3), 1, 2).is_identity());
  CHECK(min_coset_rep(P("321"), 1, 2) == P("123"));
  for (int n = 3; n <= 5; ++n)
    for (const auto& w : enumerate(n))
      for (int i = 1; i + 1 < n; ++i) {
        const Permutation y0 = min_coset_rep(w, i, i + 1);
        CHECK_FALSE(y0.right_descents().contains(i));
        CHECK_FALSE(y0.right_descents().contains(i + 1));
        // Scan the six elements of w<s_i, s_{i+1}> for the shortest one.
        const Permutation a = Permutation::simple(n, i), b = Permutation::simple(n, i + 1);
        std::vector<Permutation> coset{w, w * a, w * b, w * a * b, w * b * a, w * a * b * a};
        CHECK(std::find(coset.begin(), coset.end(), y0) != coset.end());
        for (const auto& x : coset) CHECK(x.length() >= y0.length());
        CHECK(min_coset_rep(w, i + 1, i) == y0);
      }
  CHECK_THROWS_AS(min_coset_rep(P("1234"), 1, 3), InputError);
}

TEST_CASE("enumeration order and ranks") {
  CHECK(enumerate(1) == std::vector<Permutation>{P("1")});
  const auto s3 = enumerate(3);
  CHECK(s3.size() == 6);
  CHECK(s3.front() == P("123"));
  CHECK(s3.back() == P("321"));
  CHECK(enumerate(5).size() == 120);
  CHECK(std::is_sorted(s3.begin(), s3.end()));
  const auto s5 = enumerate(5);
  for (std::size_t k = 0; k < s5.size(); ++k) {
    CHECK(lex_rank(s5[k]) == k);
    CHECK(lex_unrank(5, k) == s5[k]);
  }
  CHECK_THROWS_AS(enumerate(9), BoundError);
  CHECK(enumerate(9, 9).size() == 362880);
  CHECK_THROWS_AS(enumerate(11, 20), BoundError);
}

TEST_CASE("group tables") {
  const SymmetricGroup g(5);
  CHECK(g.order() == 120);
  CHECK(g.element(g.identity()).is_identity());
  CHECK(g.element(g.longest()) == Permutation::longest(5));
  for (SymmetricGroup::Index x = 0; x < g.order(); ++x) {
    const Permutation& w = g.element(x);
    CHECK(g.index_of(w) == x);
    CHECK(g.element(g.inverse(x)) == w.inverse());
    CHECK(g.length(x) == w.length());
    CHECK(g.left_descents(x) == w.left_descents());
    CHECK(g.right_descents(x) == w.right_descents());
    for (int i = 1; i < 5; ++i) {
      CHECK(g.element(g.left_multiply(i, x)) == multiply_simple(w, i, Side::Left));
      CHECK(g.element(g.right_multiply(x, i)) == multiply_simple(w, i, Side::Right));
    }
    for (SymmetricGroup::Index y = 0; y < g.order(); ++y) CHECK(g.bruhat_leq(y, x) == bruhat_leq(g.element(y), w));
  }
}
