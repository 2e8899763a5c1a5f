#pragma once

#include <concepts>
#include <optional>
#include <string>

#include "ptg/braids.hpp"
#include "ptg/kernel.hpp"
#include "ptg/trees.hpp"

namespace ptg {

// strand doubling on permutations: strand i becomes two parallel strands i, i+1
Permutation double_perm(const Permutation& s, int i);
// removes point i from the domain and its image from the range
Permutation delete_point(const Permutation& s, int i);

// A family of groups G_n over the symmetric groups with doubling maps and
// codegeneracies on the kernel; plugs into the symbol engine below.
template <class S>
concept CoefficientSystem = requires(const typename S::Element& g, int i) {
  { S::identity(i) } -> std::same_as<typename S::Element>;
  { S::multiply(g, g) } -> std::same_as<typename S::Element>;
  { S::invert(g) } -> std::same_as<typename S::Element>;
  { S::degree(g) } -> std::same_as<int>;
  { S::underlying_permutation(g) } -> std::same_as<Permutation>;
  { S::double_at(g, i) } -> std::same_as<typename S::Element>;
  { S::delete_pure(g, i) } -> std::same_as<typename S::Element>;
  // preimage under double_at(., i), if g lies in its image
  { S::undouble(g, i) } -> std::same_as<std::optional<typename S::Element>>;
  { S::equal(g, g) } -> std::same_as<bool>;
};

struct PermutationSystem {
  using Element = Permutation;
  static Permutation identity(int n) { return Permutation::identity(n); }
  static Permutation multiply(const Permutation& g, const Permutation& h) { return g * h; }
  static Permutation invert(const Permutation& g) { return g.inverse(); }
  static int degree(const Permutation& g) { return g.size(); }
  static Permutation underlying_permutation(const Permutation& g) { return g; }
  static Permutation double_at(const Permutation& g, int i) { return double_perm(g, i); }
  static Permutation delete_pure(const Permutation& g, int i);
  static std::optional<Permutation> undouble(const Permutation& g, int i);
  static bool equal(const Permutation& g, const Permutation& h) { return g == h; }
};

struct BraidSystem {
  using Element = BraidWord;
  static BraidWord identity(int n) { return BraidWord(n); }
  static BraidWord multiply(const BraidWord& g, const BraidWord& h) { return g * h; }
  static BraidWord invert(const BraidWord& g) { return g.inverse(); }
  static int degree(const BraidWord& g) { return g.strands(); }
  static Permutation underlying_permutation(const BraidWord& g) { return perm_of(g); }
  static BraidWord double_at(const BraidWord& g, int i) { return double_braid(g, i); }
  static BraidWord delete_pure(const BraidWord& g, int i) { return delete_strand_pure(g, i); }
  static std::optional<BraidWord> undouble(const BraidWord& g, int i);
  static bool equal(const BraidWord& g, const BraidWord& h) { return braid_equal(g, h); }
};

static_assert(CoefficientSystem<PermutationSystem>);
static_assert(CoefficientSystem<BraidSystem>);

template <CoefficientSystem S>
struct Symbol {
  using Element = typename S::Element;
  Tree target;
  Tree source;
  Element g;

  Symbol() : target(), source(), g(S::identity(1)) {}
  Symbol(Tree t, Tree s, Element e) : target(std::move(t)), source(std::move(s)), g(std::move(e)) {
    if (target.leaves() != source.leaves() || S::degree(g) != source.leaves())
      throw Error(ErrorKind::DegreeMismatch, "trees with " + std::to_string(target.leaves()) + " and " +
                                                 std::to_string(source.leaves()) + " leaves, coefficient of degree " +
                                                 std::to_string(S::degree(g)));
  }
  int leaves() const { return source.leaves(); }
};

using VSymbol = Symbol<PermutationSystem>;
using BVSymbol = Symbol<BraidSystem>;

template <CoefficientSystem S>
Symbol<S> symbol_identity() {
  return Symbol<S>();
}

template <CoefficientSystem S>
Symbol<S> symbol_expand(const Symbol<S>& s, int i) {
  if (i < 1 || i > s.leaves()) throw Error(ErrorKind::IndexOutOfRange, "expansion at leaf " + std::to_string(i));
  Permutation p = S::underlying_permutation(s.g);
  return Symbol<S>(expand(s.target, p(i)), expand(s.source, i), S::double_at(s.g, i));
}

// first i at which s is an expansion, with the contracted symbol
template <CoefficientSystem S>
std::optional<Symbol<S>> symbol_contract_at(const Symbol<S>& s, int i) {
  if (!is_caret(s.source, i)) return std::nullopt;
  Permutation p = S::underlying_permutation(s.g);
  int j = p(i);
  if (p(i + 1) != j + 1 || !is_caret(s.target, j)) return std::nullopt;
  auto h = S::undouble(s.g, i);
  if (!h) return std::nullopt;
  return Symbol<S>(contract(s.target, j), contract(s.source, i), std::move(*h));
}

template <CoefficientSystem S>
Symbol<S> symbol_reduce(Symbol<S> s) {
  for (int i = 1; i < s.leaves();) {
    if (auto r = symbol_contract_at(s, i)) {
      s = std::move(*r);
      i = std::max(1, i - 1);
    } else {
      ++i;
    }
  }
  return s;
}

template <CoefficientSystem S>
Symbol<S> symbol_multiply(const Symbol<S>& a, const Symbol<S>& b) {
  CommonExpansion ce = common_expansion(a.source, b.target);
  Symbol<S> x = a, y = b;
  for (int i : ce.steps_a) x = symbol_expand(x, i);
  for (int j : ce.steps_b) y = symbol_expand(y, S::underlying_permutation(y.g).inverse()(j));
  return symbol_reduce(Symbol<S>(x.target, y.source, S::multiply(x.g, y.g)));
}

template <CoefficientSystem S>
Symbol<S> symbol_invert(const Symbol<S>& s) {
  return Symbol<S>(s.source, s.target, S::invert(s.g));
}

template <CoefficientSystem S>
bool symbol_equal(const Symbol<S>& a, const Symbol<S>& b) {
  Symbol<S> x = symbol_reduce(a), y = symbol_reduce(b);
  return x.target == y.target && x.source == y.source && S::equal(x.g, y.g);
}

template <CoefficientSystem S>
bool symbol_is_identity(const Symbol<S>& s) {
  return symbol_equal(s, symbol_identity<S>());
}

template <CoefficientSystem S>
Symbol<S> symbol_power(const Symbol<S>& s, int k) {
  Symbol<S> base = k < 0 ? symbol_invert(s) : s;
  Symbol<S> r = symbol_identity<S>();
  for (int m = 0; m < (k < 0 ? -k : k); ++m) r = symbol_multiply(r, base);
  return r;
}

VSymbol project_to_V(const BVSymbol& s);

}  // namespace ptg
