#pragma once
// Random generators shared by the property tests.

#include <algorithm>
#include <random>

#include "ptg/cosimplicial.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& r, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(r); }

inline ptg::Permutation permutation(Rng& r, int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::shuffle(v.begin(), v.end(), r);
  return ptg::Permutation(v);
}

inline ptg::Tree tree(Rng& r, int n) {
  ptg::Tree t;
  while (t.leaves() < n) t = ptg::expand(t, uniform(r, 1, t.leaves()));
  return t;
}

inline ptg::BraidWord braid(Rng& r, int n, int len) {
  std::vector<ptg::Letter> v;
  if (n >= 2)
    for (int k = 0; k < len; ++k) v.push_back({uniform(r, 1, n - 1), uniform(r, 0, 1) ? 1 : -1});
  return ptg::BraidWord(n, v);
}

// products of conjugates of squared generators
inline ptg::BraidWord pure_braid(Rng& r, int n, int factors, int conj_len) {
  ptg::BraidWord b(n);
  if (n < 2) return b;
  for (int k = 0; k < factors; ++k) {
    ptg::BraidWord w = braid(r, n, uniform(r, 0, conj_len));
    int i = uniform(r, 1, n - 1), s = uniform(r, 0, 1) ? 1 : -1;
    ptg::BraidWord sq(n, {{i, s}, {i, s}});
    b = b * w * sq * w.inverse();
  }
  return b;
}

inline ptg::VSymbol v_symbol(Rng& r, int max_leaves) {
  int n = uniform(r, 1, max_leaves);
  return ptg::VSymbol(tree(r, n), tree(r, n), permutation(r, n));
}

inline ptg::VSymbol t_symbol(Rng& r, int max_leaves) {
  int n = uniform(r, 1, max_leaves);
  return ptg::VSymbol(tree(r, n), tree(r, n), ptg::Permutation::rotation(n, uniform(r, 0, n - 1)));
}

inline ptg::VSymbol f_symbol(Rng& r, int max_leaves) {
  int n = uniform(r, 1, max_leaves);
  return ptg::VSymbol(tree(r, n), tree(r, n), ptg::Permutation::identity(n));
}

inline ptg::BVSymbol bv_symbol(Rng& r, int max_leaves, int max_len) {
  int n = uniform(r, 1, max_leaves);
  return ptg::BVSymbol(tree(r, n), tree(r, n), braid(r, n, uniform(r, 0, max_len)));
}

// words over A = 1, B = 2
inline ptg::FreeWord move_word(Rng& r, int len) {
  ptg::FreeWord w;
  for (int k = 0; k < len; ++k) w.push({uniform(r, 1, 2), uniform(r, 0, 1) ? 1 : -1});
  return w;
}

}  // namespace gen
