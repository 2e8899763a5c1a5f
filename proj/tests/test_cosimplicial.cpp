#include <doctest.h>

#include "gen.hpp"
#include "ptg/cosimplicial.hpp"

using namespace ptg;

namespace {

// contract removable caret pairs in random order
template <class S>
Symbol<S> reduce_random_order(Symbol<S> s, gen::Rng& r) {
  for (;;) {
    std::vector<Symbol<S>> options;
    for (int i = 1; i < s.leaves(); ++i)
      if (auto c = symbol_contract_at(s, i)) options.push_back(*c);
    if (options.empty()) return s;
    s = options[gen::uniform(r, 0, static_cast<int>(options.size()) - 1)];
  }
}

template <class S>
Symbol<S> random_expansions(Symbol<S> s, gen::Rng& r, int count) {
  for (int k = 0; k < count; ++k) s = symbol_expand(s, gen::uniform(r, 1, s.leaves()));
  return s;
}

bool same_v(const VSymbol& a, const VSymbol& b) {
  return a.target == b.target && a.source == b.source && a.g == b.g;
}

}  // namespace

TEST_CASE("double_perm examples and laws") {
  CHECK(double_perm(Permutation::identity(4), 2) == Permutation::identity(5));
  CHECK(double_perm(Permutation({2, 1}), 1) == Permutation({2, 3, 1}));
  CHECK(double_perm(Permutation({2, 1}), 2) == Permutation({3, 1, 2}));
  CHECK_THROWS_AS(double_perm(Permutation({2, 1}), 3), Error);

  gen::Rng r(31);
  for (int k = 0; k < 300; ++k) {
    int n = gen::uniform(r, 1, 10);
    auto g = gen::permutation(r, n), h = gen::permutation(r, n);
    int i = gen::uniform(r, 1, n);
    CHECK(double_perm(g * h, i) == double_perm(g, h(i)) * double_perm(h, i));
    if (i >= 2) {
      int j = gen::uniform(r, 1, i - 1);
      CHECK(double_perm(double_perm(g, i), j) == double_perm(double_perm(g, j), i + 1));
    }
    CHECK(PermutationSystem::delete_pure(double_perm(Permutation::identity(n), i), i) == Permutation::identity(n));
    CHECK(delete_point(double_perm(g, i), i + 1) == g);
  }
}

TEST_CASE("symbol expansion examples") {
  VSymbol id(Tree("10100"), Tree("10100"), Permutation::identity(3));
  VSymbol e = symbol_expand(id, 2);
  CHECK(e.target == expand(Tree("10100"), 2));
  CHECK(e.source == expand(Tree("10100"), 2));
  CHECK(e.g.is_identity());

  VSymbol s(Tree("100"), Tree("100"), Permutation({2, 1}));
  VSymbol x = symbol_expand(s, 1);
  CHECK(x.target.bits() == "10100");
  CHECK(x.source.bits() == "11000");
  CHECK(x.g == Permutation({2, 3, 1}));
  CHECK(symbol_equal(x, s));
  CHECK(same_v(symbol_reduce(x), s));

  // exchange law on symbols
  VSymbol t(Tree("11000"), Tree("10100"), Permutation({3, 1, 2}));
  CHECK(same_v(symbol_expand(symbol_expand(t, 3), 1), symbol_expand(symbol_expand(t, 1), 4)));
}

TEST_CASE("reduction examples") {
  VSymbol id(Tree("1101000"), Tree("1101000"), Permutation::identity(4));
  VSymbol red = symbol_reduce(id);
  CHECK(red.target.bits() == "0");
  CHECK(red.source.bits() == "0");
  CHECK(red.g.is_identity());
}

TEST_CASE("multiplication examples") {
  VSymbol x(Tree("10100"), Tree("11000"), Permutation::identity(3));
  VSymbol xi(Tree("11000"), Tree("10100"), Permutation::identity(3));
  CHECK(same_v(symbol_multiply(x, xi), VSymbol()));
  CHECK(same_v(symbol_invert(x), xi));
  CHECK(same_v(symbol_multiply(x, VSymbol()), symbol_reduce(x)));
  CHECK(symbol_is_identity(symbol_invert(VSymbol())));
}

TEST_CASE("V symbols: group axioms, reduction confluence, replay") {
  gen::Rng r(37);
  for (int k = 0; k < 300; ++k) {
    VSymbol a = gen::v_symbol(r, 8), b = gen::v_symbol(r, 8), c = gen::v_symbol(r, 8);
    CHECK(symbol_equal(symbol_multiply(symbol_multiply(a, b), c), symbol_multiply(a, symbol_multiply(b, c))));
    CHECK(symbol_equal(symbol_multiply(a, VSymbol()), a));
    CHECK(symbol_equal(symbol_multiply(VSymbol(), a), a));
    CHECK(symbol_is_identity(symbol_multiply(a, symbol_invert(a))));
    CHECK(symbol_is_identity(symbol_multiply(symbol_invert(a), a)));

    VSymbol ra = symbol_reduce(a);
    CHECK(same_v(symbol_reduce(ra), ra));
    CHECK(same_v(reduce_random_order(a, r), ra));
    VSymbol grown = random_expansions(ra, r, gen::uniform(r, 1, 8));
    CHECK(same_v(symbol_reduce(grown), ra));
    CHECK(same_v(reduce_random_order(grown, r), ra));
    CHECK(same_v(symbol_reduce(symbol_invert(symbol_invert(a))), ra));
    // F and T are closed
    VSymbol f1 = gen::f_symbol(r, 8), f2 = gen::f_symbol(r, 8);
    CHECK(symbol_multiply(f1, f2).g.is_identity());
    VSymbol t1 = gen::t_symbol(r, 8), t2 = gen::t_symbol(r, 8);
    CHECK(symbol_multiply(t1, t2).g.is_cyclic());
  }
}

TEST_CASE("BV symbols: group axioms, reduction, projection") {
  gen::Rng r(41);
  for (int k = 0; k < 60; ++k) {
    BVSymbol a = gen::bv_symbol(r, 6, 4), b = gen::bv_symbol(r, 6, 4), c = gen::bv_symbol(r, 6, 4);
    CHECK(symbol_equal(symbol_multiply(symbol_multiply(a, b), c), symbol_multiply(a, symbol_multiply(b, c))));
    CHECK(symbol_equal(symbol_multiply(a, BVSymbol()), a));
    CHECK(symbol_is_identity(symbol_multiply(a, symbol_invert(a))));
    CHECK(symbol_equal(project_to_V(symbol_multiply(a, b)), symbol_multiply(project_to_V(a), project_to_V(b))));

    BVSymbol ra = symbol_reduce(a);
    BVSymbol grown = random_expansions(ra, r, gen::uniform(r, 1, 5));
    BVSymbol back = reduce_random_order(grown, r);
    CHECK(back.target == ra.target);
    CHECK(back.source == ra.source);
    CHECK(braid_equal(back.g, ra.g));
    CHECK(symbol_equal(grown, a));
  }
  // a pure braid coefficient projects into the kernel
  BVSymbol pure(Tree("100"), Tree("100"), BraidWord::parse("s1 s1", 2));
  CHECK(project_to_V(pure).g.is_identity());
  CHECK_FALSE(symbol_is_identity(pure));
  CHECK(symbol_is_identity(project_to_V(pure)));
  // s1 s1 is not a doubled braid: the caret does not cancel
  CHECK(symbol_reduce(pure).leaves() == 2);
}
