#include <doctest.h>

#include "gen.hpp"
#include "ptg/braids.hpp"
#include "ptg/cosimplicial.hpp"

using namespace ptg;

namespace {
BraidWord B(const char* s, int n) { return BraidWord::parse(s, n); }

// strand-identity simulation: drop every crossing that involves the strand
// starting at position i, renumber the survivors by rank
BraidWord delete_oracle(const BraidWord& b, int i) {
  int n = b.strands();
  std::vector<int> at(n + 1);
  for (int p = 1; p <= n; ++p) at[p] = p;
  std::vector<Letter> out;
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    int j = it->gen;
    if (at[j] != i && at[j + 1] != i) {
      int rank = 0;
      for (int p = 1; p <= j; ++p)
        if (at[p] != i) ++rank;
      out.push_back({rank, it->sign});
    }
    std::swap(at[j], at[j + 1]);
  }
  return BraidWord(n - 1, std::vector<Letter>(out.rbegin(), out.rend()));
}

// w x_j w^-1 for some j and w
bool is_conjugate_of_generator(const FreeWord& f) {
  auto& l = f.letters();
  if (l.size() % 2 == 0) return false;
  std::size_t m = l.size() / 2;
  if (l[m].sign != 1) return false;
  for (std::size_t k = 0; k < m; ++k)
    if (!(l[k] == l[l.size() - 1 - k].inverse())) return false;
  return true;
}
}  // namespace

TEST_CASE("perm_of examples") {
  CHECK(perm_of(BraidWord(3)).is_identity());
  CHECK(perm_of(B("s1", 2)) == Permutation({2, 1}));
  CHECK(perm_of(B("s1 s2 s1", 3)) == perm_of(B("s2 s1 s2", 3)));
  CHECK(perm_of(B("s1 s2", 3)) == Permutation({2, 3, 1}));
}

TEST_CASE("double_braid examples") {
  CHECK(double_braid(BraidWord(2), 1) == BraidWord(3));
  CHECK(double_braid(B("s1", 2), 1) == B("s1 s2", 3));
  CHECK(double_braid(B("s1", 2), 2) == B("s2 s1", 3));
  CHECK(double_perm(Permutation({2, 1}), 1) == Permutation({2, 3, 1}));
  CHECK(double_perm(Permutation({2, 1}), 2) == Permutation({3, 1, 2}));
  CHECK_THROWS_AS(double_braid(B("s1", 2), 3), Error);
}

TEST_CASE("delete_strand examples") {
  CHECK(delete_strand_pure(B("s1 s1", 2), 1) == BraidWord(1));
  CHECK(delete_strand_pure(B("s2 s2", 3), 1) == B("s1 s1", 2));
  try {
    delete_strand_pure(B("s1", 2), 1);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPure);
  }
}

TEST_CASE("artin action examples") {
  auto id = artin_images(BraidWord(3));
  CHECK(id == std::vector<FreeWord>{FreeWord::parse("x1"), FreeWord::parse("x2"), FreeWord::parse("x3")});
  CHECK(artin_images(B("s1 s1^-1", 3)) == id);
  CHECK(artin_images(B("s1", 2))[0] == FreeWord::parse("x1 x2 x1^-1"));
  CHECK(artin_images(B("s1", 2))[1] == FreeWord::parse("x1"));
  CHECK(braid_equal(B("s1 s2 s1", 3), B("s2 s1 s2", 3)));
  CHECK(braid_equal(B("s1 s3", 4), B("s3 s1", 4)));
  CHECK_FALSE(braid_equal(B("s1", 2), B("s1^-1", 2)));
  CHECK_FALSE(braid_equal(B("s1 s2", 3), B("s2 s1", 3)));
  try {
    braid_equal(B("s1", 2), B("s1", 3));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::StrandMismatch);
  }
}

TEST_CASE("burau examples") {
  LaurentMatrix id = burau(BraidWord(3));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(id(r, c) == Laurent(r == c ? 1 : 0));
  LaurentMatrix s = burau(B("s1", 2));
  CHECK(s(0, 0).str() == "1 - t");
  CHECK(s(0, 1).str() == "t");
  CHECK(s(1, 0).str() == "1");
  CHECK(s(1, 1).str() == "0");
  LaurentMatrix p = burau(B("s1", 3)) * burau(B("s1^-1", 3));
  CHECK(p == burau(BraidWord(3)));
  CHECK(burau(B("s1 s2 s1", 3)) == burau(B("s2 s1 s2", 3)));
  CHECK(burau(B("s2 s3 s2", 4)) == burau(B("s3 s2 s3", 4)));
  CHECK_FALSE(burau(B("s1 s2", 3)) == burau(B("s2 s1", 3)));
  CHECK((Laurent::t() * Laurent::monomial(-2, -3) + Laurent(1)).str() == "-2t^-2 + 1");
}

TEST_CASE("braid properties, random") {
  gen::Rng r(23);
  for (int k = 0; k < 150; ++k) {
    int n = gen::uniform(r, 2, 6);
    BraidWord g = gen::braid(r, n, gen::uniform(r, 0, 12));
    BraidWord h = gen::braid(r, n, gen::uniform(r, 0, 12));
    int i = gen::uniform(r, 1, n);

    CHECK(perm_of(g * h) == perm_of(g) * perm_of(h));
    CHECK(perm_of(double_braid(g, i)) == double_perm(perm_of(g), i));
    CHECK(burau_at_one(g) == permutation_matrix(perm_of(g)));
    CHECK(burau(g * h) == burau(g) * burau(h));
    CHECK(delete_strand(g, i) == delete_oracle(g, i));

    auto img = artin_images(g);
    FreeWord prod;
    for (const auto& f : img) {
      CHECK(f.is_reduced());
      CHECK(is_conjugate_of_generator(f));
      prod = prod * f;
    }
    FreeWord boundary;
    for (int j = 1; j <= n; ++j) boundary = boundary * FreeWord::generator(j);
    CHECK(prod == boundary);

    // crossed law
    CHECK(braid_equal(double_braid(g * h, i), double_braid(g, perm_of(h)(i)) * double_braid(h, i)));
    // exchange law
    if (i >= 2) {
      int j = gen::uniform(r, 1, i - 1);
      CHECK(braid_equal(double_braid(double_braid(g, i), j), double_braid(double_braid(g, j), i + 1)));
    }
    // congruence: conjugating an equal pair keeps them equal
    BraidWord g2 = g * B("s1 s1^-1", n);
    CHECK(braid_equal(h * g * h.inverse(), h * g2 * h.inverse()));
    CHECK(braid_is_identity(g * g.inverse()));
  }
}

TEST_CASE("codegeneracy after doubling, pure braids") {
  gen::Rng r(29);
  for (int k = 0; k < 100; ++k) {
    int n = gen::uniform(r, 2, 5);
    BraidWord p = gen::pure_braid(r, n, gen::uniform(r, 1, 3), 4);
    REQUIRE(perm_of(p).is_identity());
    int i = gen::uniform(r, 1, n);
    CHECK(braid_equal(delete_strand_pure(double_braid(p, i), i), p));
    CHECK(braid_equal(delete_strand_pure(double_braid(p, i), i + 1), p));
    // homomorphism on pure braids
    BraidWord q = gen::pure_braid(r, n, 2, 3);
    int d = gen::uniform(r, 1, n);
    CHECK(braid_equal(delete_strand_pure(p * q, d), delete_strand_pure(p, d) * delete_strand_pure(q, d)));
  }
}
