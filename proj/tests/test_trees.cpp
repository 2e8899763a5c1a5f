#include <doctest.h>

#include "gen.hpp"
#include "ptg/trees.hpp"

using namespace ptg;

namespace {
Dyadic D(const char* s) { return Dyadic::parse(s); }

// interval coded by a 0/1 address, computed with plain integers
std::pair<Fraction, Fraction> address_interval(const std::string& a) {
  long long k = 0;
  for (char c : a) k = 2 * k + (c - '0');
  Fraction den(BigInt(1) << a.size(), BigInt(1));
  return {Fraction(k) / den, Fraction(k + 1) / den};
}
}  // namespace

TEST_CASE("tree validation") {
  CHECK(Tree::valid("0"));
  CHECK(Tree::valid("10100"));
  CHECK_FALSE(Tree::valid("1"));
  CHECK_FALSE(Tree::valid("00"));
  CHECK_FALSE(Tree::valid("1002"));
  CHECK_FALSE(Tree::valid("1000"));
  CHECK(Tree("1100100").leaves() == 4);
}

TEST_CASE("expand examples") {
  CHECK(expand(Tree("0"), 1).bits() == "100");
  CHECK(expand(Tree("100"), 1).bits() == "11000");
  CHECK(expand(Tree("100"), 2).bits() == "10100");
  try {
    expand(Tree("100"), 3);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndexOutOfRange);
  }
}

TEST_CASE("leaf geometry examples") {
  CHECK(leaf_interval(Tree("0"), 1) == std::make_pair(Dyadic(0), Dyadic(1)));
  CHECK(leaf_interval(Tree("100"), 2) == std::make_pair(D("1/2^1"), Dyadic(1)));
  CHECK(leaf_interval(Tree("11000"), 2) == std::make_pair(D("1/2^2"), D("1/2^1")));
  CHECK(leaf_address(Tree("100"), 1) == "0");
  CHECK(leaf_address(Tree("11000"), 3) == "1");
  CHECK(leaf_address(Tree("11000"), 2) == "01");
  CHECK_THROWS_AS(leaf_address(Tree("11000"), 4), Error);
}

TEST_CASE("common expansion examples") {
  auto same = common_expansion(Tree("10100"), Tree("10100"));
  CHECK(same.tree.bits() == "10100");
  CHECK(same.steps_a.empty());
  CHECK(same.steps_b.empty());

  auto ce = common_expansion(Tree("11000"), Tree("10100"));
  CHECK(ce.tree.bits() == "1100100");
  auto c2 = common_expansion(Tree("0"), Tree("100"));
  CHECK(c2.tree.bits() == "100");
  CHECK(c2.steps_a == std::vector<int>{1});
  CHECK(c2.steps_b.empty());
}

TEST_CASE("caret contraction") {
  CHECK(is_caret(Tree("11000"), 1));
  CHECK_FALSE(is_caret(Tree("11000"), 2));
  CHECK(contract(Tree("11000"), 1).bits() == "100");
  CHECK(is_caret(Tree("10100"), 2));
  CHECK(contract(Tree("10100"), 2).bits() == "100");
}

TEST_CASE("tree enumeration") {
  // Catalan numbers
  CHECK(all_trees(1).size() == 1);
  CHECK(all_trees(3).size() == 2);
  CHECK(all_trees(5).size() == 14);
  CHECK(all_trees(3)[0].bits() == "10100");
}

TEST_CASE("tree properties, random") {
  gen::Rng r(17);
  for (int k = 0; k < 200; ++k) {
    Tree t = gen::tree(r, gen::uniform(r, 1, 12));
    int n = t.leaves();
    // tiling of [0,1] and agreement with addresses
    Dyadic prev(0);
    for (int i = 1; i <= n; ++i) {
      auto [lo, hi] = leaf_interval(t, i);
      CHECK(lo == prev);
      prev = hi;
      auto [flo, fhi] = address_interval(leaf_address(t, i));
      CHECK(flo == lo.to_fraction());
      CHECK(fhi == hi.to_fraction());
    }
    CHECK(prev == Dyadic(1));
    // prefix-free addresses
    auto addrs = leaf_addresses(t);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) CHECK(addrs[j].rfind(addrs[i], 0) != 0);

    int i = gen::uniform(r, 1, n);
    Tree e = expand(t, i);
    CHECK(e.leaves() == n + 1);
    CHECK(contract(e, i) == t);
    auto ce = common_expansion(e, t);
    CHECK(ce.tree == e);
    CHECK(ce.steps_a.empty());
    CHECK(ce.steps_b == std::vector<int>{i});

    if (n >= 2) {
      int a = gen::uniform(r, 2, n), b = gen::uniform(r, 1, a - 1);
      CHECK(expand(expand(t, a), b) == expand(expand(t, b), a + 1));
    }

    Tree u = gen::tree(r, gen::uniform(r, 1, 12));
    auto cu = common_expansion(t, u);
    Tree x = t, y = u;
    for (int s : cu.steps_a) x = expand(x, s);
    for (int s : cu.steps_b) y = expand(y, s);
    CHECK(x == cu.tree);
    CHECK(y == cu.tree);
    // least: every breakpoint of the result comes from one of the inputs
    auto bt = breakpoints(t), bu = breakpoints(u);
    for (const Dyadic& d : breakpoints(cu.tree))
      CHECK((std::find(bt.begin(), bt.end(), d) != bt.end() || std::find(bu.begin(), bu.end(), d) != bu.end()));
  }
}
