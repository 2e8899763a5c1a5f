#include "ptg/trees.hpp"

#include <algorithm>
#include <functional>

namespace ptg {

bool Tree::valid(const std::string& bits) {
  if (bits.empty()) return false;
  int need = 1;  // open leaf slots
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (need == 0) return false;
    if (bits[k] == '1')
      ++need;
    else if (bits[k] == '0')
      --need;
    else
      return false;
  }
  return need == 0;
}

Tree::Tree(std::string bits) : bits_(std::move(bits)) {
  if (!valid(bits_)) throw Error(ErrorKind::SyntaxError, "invalid tree encoding \"" + bits_ + "\"");
  leaves_ = static_cast<int>(std::count(bits_.begin(), bits_.end(), '0'));
}

static std::size_t leaf_pos(const Tree& t, int i) {
  if (i < 1 || i > t.leaves())
    throw Error(ErrorKind::IndexOutOfRange, "leaf " + std::to_string(i) + " of " + t.bits());
  int seen = 0;
  for (std::size_t k = 0; k < t.bits().size(); ++k)
    if (t.bits()[k] == '0' && ++seen == i) return k;
  return std::string::npos;
}

Tree expand(const Tree& t, int i) {
  std::string b = t.bits();
  b.replace(leaf_pos(t, i), 1, "100");
  return Tree(std::move(b));
}

bool is_caret(const Tree& t, int i) {
  if (i < 1 || i >= t.leaves()) return false;
  std::size_t p = leaf_pos(t, i);
  // a caret with two leaves is exactly "100" in preorder, ending at leaf i+1
  return p >= 1 && t.bits()[p - 1] == '1' && p + 1 < t.bits().size() && t.bits()[p + 1] == '0';
}

Tree contract(const Tree& t, int i) {
  if (!is_caret(t, i)) throw Error(ErrorKind::IndexOutOfRange, "no caret at leaves " + std::to_string(i));
  std::string b = t.bits();
  b.replace(leaf_pos(t, i) - 1, 3, "0");
  return Tree(std::move(b));
}

std::vector<std::string> leaf_addresses(const Tree& t) {
  std::vector<std::string> out;
  std::string path;
  // stack of pending right turns
  std::vector<std::size_t> stack;
  for (char c : t.bits()) {
    if (c == '1') {
      stack.push_back(path.size());
      path.push_back('0');
    } else {
      out.push_back(path);
      if (stack.empty()) break;
      std::size_t d = stack.back();
      stack.pop_back();
      path.resize(d);
      path.push_back('1');
    }
  }
  return out;
}

std::vector<unsigned> leaf_depths(const Tree& t) {
  std::vector<unsigned> d;
  for (const auto& a : leaf_addresses(t)) d.push_back(static_cast<unsigned>(a.size()));
  return d;
}

std::string leaf_address(const Tree& t, int i) {
  if (i < 1 || i > t.leaves())
    throw Error(ErrorKind::IndexOutOfRange, "leaf " + std::to_string(i) + " of " + t.bits());
  return leaf_addresses(t)[i - 1];
}

static std::pair<Dyadic, Dyadic> interval_of_address(const std::string& a) {
  BigInt k = 0;
  for (char c : a) k = k * 2 + (c == '1' ? 1 : 0);
  unsigned m = static_cast<unsigned>(a.size());
  return {Dyadic(k, m), Dyadic(k + 1, m)};
}

std::pair<Dyadic, Dyadic> leaf_interval(const Tree& t, int i) {
  return interval_of_address(leaf_address(t, i));
}

std::vector<Dyadic> breakpoints(const Tree& t) {
  std::vector<Dyadic> out;
  auto addrs = leaf_addresses(t);
  for (std::size_t k = 0; k + 1 < addrs.size(); ++k) out.push_back(interval_of_address(addrs[k]).second);
  return out;
}

Tree tree_from_breakpoints(const std::vector<Dyadic>& interior) {
  std::string bits;
  std::function<void(const Dyadic&, const Dyadic&, unsigned)> build = [&](const Dyadic& lo, const Dyadic& hi,
                                                                        unsigned depth) {
    auto it = std::upper_bound(interior.begin(), interior.end(), lo);
    if (it == interior.end() || !(*it < hi)) {
      bits.push_back('0');
      return;
    }
    if (depth > 4096) throw Error(ErrorKind::DomainViolation, "breakpoints are not a dyadic subdivision");
    Dyadic mid = (lo + hi).scaled(-1);
    bits.push_back('1');
    build(lo, mid, depth + 1);
    build(mid, hi, depth + 1);
  };
  build(Dyadic(0), Dyadic(1), 0);
  return Tree(std::move(bits));
}

static std::vector<int> expansion_steps(const Tree& from, const Tree& to) {
  std::vector<int> steps;
  auto target = breakpoints(to);
  Tree cur = from;
  while (cur.leaves() < to.leaves()) {
    auto addrs = leaf_addresses(cur);
    bool done = false;
    for (std::size_t k = 0; k < addrs.size() && !done; ++k) {
      auto [lo, hi] = interval_of_address(addrs[k]);
      auto it = std::upper_bound(target.begin(), target.end(), lo);
      if (it != target.end() && *it < hi) {
        int i = static_cast<int>(k) + 1;
        steps.push_back(i);
        cur = expand(cur, i);
        done = true;
      }
    }
    if (!done) break;
  }
  return steps;
}

CommonExpansion common_expansion(const Tree& a, const Tree& b) {
  auto pa = breakpoints(a), pb = breakpoints(b);
  std::vector<Dyadic> all;
  std::merge(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(all));
  all.erase(std::unique(all.begin(), all.end()), all.end());
  Tree t = tree_from_breakpoints(all);
  return {t, expansion_steps(a, t), expansion_steps(b, t)};
}

std::vector<Tree> all_trees(int n) {
  std::vector<std::vector<std::string>> by(n + 1);
  if (n < 1) return {};
  by[1] = {"0"};
  for (int m = 2; m <= n; ++m)
    for (int l = 1; l < m; ++l)
      for (const auto& x : by[l])
        for (const auto& y : by[m - l]) by[m].push_back("1" + x + y);
  std::sort(by[n].begin(), by[n].end());
  std::vector<Tree> out;
  for (auto& s : by[n]) out.emplace_back(s);
  return out;
}

}  // namespace ptg
