#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ptg/kernel.hpp"

namespace ptg {

// Finite rooted planar binary tree in preorder: '1' internal vertex, '0' leaf.
class Tree {
 public:
  Tree() : bits_("0") {}
  explicit Tree(std::string bits);

  const std::string& bits() const { return bits_; }
  int leaves() const { return leaves_; }

  static Tree caret() { return Tree("100"); }
  static bool valid(const std::string& bits);

  friend bool operator==(const Tree&, const Tree&) = default;
  friend auto operator<=>(const Tree& a, const Tree& b) { return a.bits_ <=> b.bits_; }

 private:
  std::string bits_;
  int leaves_ = 1;
};

Tree expand(const Tree& t, int i);

struct CommonExpansion {
  Tree tree;
  std::vector<int> steps_a;  // replay on the first argument
  std::vector<int> steps_b;  // replay on the second argument
};
CommonExpansion common_expansion(const Tree& a, const Tree& b);

std::pair<Dyadic, Dyadic> leaf_interval(const Tree& t, int i);
std::string leaf_address(const Tree& t, int i);
std::vector<std::string> leaf_addresses(const Tree& t);
std::vector<unsigned> leaf_depths(const Tree& t);

// leaves i and i+1 hang from a common caret
bool is_caret(const Tree& t, int i);
// inverse of expand(., i) when is_caret(t, i)
Tree contract(const Tree& t, int i);

// the tree whose leaf intervals have exactly these interior breakpoints
Tree tree_from_breakpoints(const std::vector<Dyadic>& interior);
std::vector<Dyadic> breakpoints(const Tree& t);  // interior ones, increasing

// all trees with n leaves in lexicographic order of their bit strings
std::vector<Tree> all_trees(int n);

}  // namespace ptg
