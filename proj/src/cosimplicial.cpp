#include "ptg/cosimplicial.hpp"

namespace ptg {

Permutation double_perm(const Permutation& s, int i) {
  int n = s.size();
  if (i < 1 || i > n) throw Error(ErrorKind::IndexOutOfRange, "doubling index " + std::to_string(i));
  int j = s(i);
  std::vector<int> img(n + 1);
  auto shift = [j](int v) { return v > j ? v + 1 : v; };
  for (int k = 1; k <= n + 1; ++k) {
    if (k < i)
      img[k - 1] = shift(s(k));
    else if (k == i)
      img[k - 1] = j;
    else if (k == i + 1)
      img[k - 1] = j + 1;
    else
      img[k - 1] = shift(s(k - 1));
  }
  return Permutation(std::move(img));
}

Permutation delete_point(const Permutation& s, int i) {
  int n = s.size();
  if (n < 2 || i < 1 || i > n) throw Error(ErrorKind::IndexOutOfRange, "deleting point " + std::to_string(i));
  int j = s(i);
  std::vector<int> img;
  for (int k = 1; k <= n; ++k) {
    if (k == i) continue;
    int v = s(k);
    img.push_back(v > j ? v - 1 : v);
  }
  return Permutation(std::move(img));
}

Permutation PermutationSystem::delete_pure(const Permutation& g, int i) {
  if (!g.is_identity()) throw Error(ErrorKind::NotPure, "permutation " + g.str() + " is not trivial");
  return delete_point(g, i);
}

std::optional<Permutation> PermutationSystem::undouble(const Permutation& g, int i) {
  if (i < 1 || i >= g.size() || g(i + 1) != g(i) + 1) return std::nullopt;
  return delete_point(g, i + 1);
}

std::optional<BraidWord> BraidSystem::undouble(const BraidWord& g, int i) {
  if (i < 1 || i >= g.strands()) return std::nullopt;
  Permutation p = perm_of(g);
  if (p(i + 1) != p(i) + 1) return std::nullopt;
  BraidWord h = delete_strand(g, i + 1);
  if (!braid_equal(double_braid(h, i), g)) return std::nullopt;
  return h;
}

VSymbol project_to_V(const BVSymbol& s) { return VSymbol(s.target, s.source, perm_of(s.g)); }

}  // namespace ptg
