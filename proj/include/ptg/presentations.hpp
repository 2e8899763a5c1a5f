#pragma once

#include <concepts>
#include <map>
#include <string>
#include <vector>

#include "ptg/cosimplicial.hpp"
#include "ptg/kernel.hpp"
#include "ptg/ptolemy.hpp"

namespace ptg {

struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;  // letter k is generators[k-1]
  // relator words are read left to right as successive maps; evaluated
  // through the library convention by reversal
  bool right_action = false;

  std::string format(const FreeWord& w) const;
};

// grammar: generator names separated by spaces, x^k powers (k may be
// negative), parenthesized groups with powers, commutators [u, v] = u v u^-1 v^-1,
// equations u = v meaning u v^-1
FreeWord parse_group_word(std::string_view text, const std::vector<std::string>& generators);
std::string format_group_word(const FreeWord& w, const std::vector<std::string>& generators);

Presentation presentation_T_LS();
Presentation presentation_T_npqrs(int n, int p, int q, int r, int s);
Presentation presentation_Tstar_ab();
Presentation presentation_braided_houghton(int n);

// "T_LS", "Tstar_ab", "T_npqrs(n,p,q,r,s)", "BraidedHoughton_n"
Presentation builtin_presentation(const std::string& name);
std::vector<std::string> builtin_presentation_names();

constexpr long long chi(long long n, long long p, long long q) { return 12 * n - 15 * p - 20 * q; }

template <class O>
concept GroupOracle = requires(const O& o, const typename O::Element& x) {
  { o.identity() } -> std::convertible_to<typename O::Element>;
  { o.multiply(x, x) } -> std::convertible_to<typename O::Element>;
  { o.invert(x) } -> std::convertible_to<typename O::Element>;
  { o.equal(x, x) } -> std::same_as<bool>;
};

struct RelatorResult {
  std::string relator;
  bool holds;
};

struct RelatorReport {
  std::string presentation;
  std::vector<RelatorResult> results;
  bool pass() const {
    for (const auto& r : results)
      if (!r.holds) return false;
    return true;
  }
};

template <GroupOracle O>
typename O::Element evaluate(const Presentation& p, const FreeWord& w,
                             const std::map<std::string, typename O::Element>& images, const O& oracle) {
  auto x = oracle.identity();
  auto step = [&](const Letter& l) {
    auto it = images.find(p.generators.at(l.gen - 1));
    const auto& img = it->second;
    x = oracle.multiply(x, l.sign > 0 ? img : oracle.invert(img));
  };
  if (p.right_action)
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) step(*it);
  else
    for (const Letter& l : w.letters()) step(l);
  return x;
}

template <GroupOracle O>
RelatorReport check_relators(const Presentation& p, const std::map<std::string, typename O::Element>& images,
                             const O& oracle) {
  for (const auto& g : p.generators)
    if (!images.count(g)) throw Error(ErrorKind::MissingImage, "no image for generator " + g);
  RelatorReport rep{p.name, {}};
  for (const FreeWord& w : p.relators)
    rep.results.push_back({p.format(w), oracle.equal(evaluate(p, w, images, oracle), oracle.identity())});
  return rep;
}

struct SymbolOracle {
  using Element = VSymbol;
  VSymbol identity() const { return VSymbol(); }
  VSymbol multiply(const VSymbol& a, const VSymbol& b) const { return symbol_multiply(a, b); }
  VSymbol invert(const VSymbol& a) const { return symbol_invert(a); }
  bool equal(const VSymbol& a, const VSymbol& b) const { return symbol_equal(a, b); }
};

// elements are move words over A = 1, B = 2, compared by their action on the
// base tessellation
struct TessellationOracle {
  using Element = FreeWord;
  FreeWord identity() const { return FreeWord(); }
  FreeWord multiply(const FreeWord& a, const FreeWord& b) const { return a * b; }
  FreeWord invert(const FreeWord& a) const { return a.inverse(); }
  bool equal(const FreeWord& a, const FreeWord& b) const {
    auto base = base_tessellation();
    return tess_equal(act_word(base, a), act_word(base, b));
  }
};

// Houghton-type group on {center} ∪ rays 1..n × {1,2,...}: eventually a
// translation by offsets[r] along each ray
struct HPoint {
  int ray;  // 0 for the center
  long long index;
  friend auto operator<=>(const HPoint&, const HPoint&) = default;
};

class HoughtonElement {
 public:
  explicit HoughtonElement(int n = 2);
  HoughtonElement(int n, std::vector<long long> offsets, long long radius, std::map<HPoint, HPoint> table);

  int rays() const { return n_; }
  const std::vector<long long>& offsets() const { return offsets_; }
  HPoint operator()(const HPoint& x) const;
  HoughtonElement inverse() const;
  // (a*b)(x) = a(b(x))
  friend HoughtonElement operator*(const HoughtonElement& a, const HoughtonElement& b);
  friend bool operator==(const HoughtonElement& a, const HoughtonElement& b);
  // points moved within the core, for display
  std::string str() const;

 private:
  long long max_offset() const;
  int n_;
  std::vector<long long> offsets_;  // index r-1
  long long radius_;
  std::map<HPoint, HPoint> table_;  // all core points: center and index <= radius
};

HoughtonElement houghton_generator(int n, int j);

struct HoughtonOracle {
  using Element = HoughtonElement;
  int n;
  HoughtonElement identity() const { return HoughtonElement(n); }
  HoughtonElement multiply(const HoughtonElement& a, const HoughtonElement& b) const { return a * b; }
  HoughtonElement invert(const HoughtonElement& a) const { return a.inverse(); }
  bool equal(const HoughtonElement& a, const HoughtonElement& b) const { return a == b; }
};

std::map<std::string, HoughtonElement> houghton_images(int n);

}  // namespace ptg
