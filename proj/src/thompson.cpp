#include "ptg/thompson.hpp"

#include <mutex>
#include <sstream>

#include "ptg/presentations.hpp"

namespace ptg {

namespace {

Fraction pow2(int a) {
  if (a >= 0) return Fraction(BigInt(1) << a, BigInt(1));
  return Fraction(BigInt(1), BigInt(1) << (-a));
}

Fraction frac_part(const Fraction& x) { return x - Fraction(x.floor(), BigInt(1)); }

}  // namespace

Fraction PLPiece::apply(const Fraction& x) const { return pow2(slope_exp) * x + intercept; }

std::vector<Dyadic> PLMap::breakpoints() const {
  std::vector<Dyadic> out;
  for (const auto& p : pieces) out.push_back(p.start);
  if (!pieces.empty()) out.push_back(pieces.back().end);
  return out;
}

std::string PLMap::str() const {
  std::ostringstream os;
  os << (mode == PLMode::Interval ? "interval" : mode == PLMode::Circle ? "circle" : "exchange") << "\n";
  for (const auto& p : pieces) {
    Fraction y = p.apply(p.start.to_fraction());
    if (mode == PLMode::Circle) y = frac_part(y);
    os << p.start.to_fraction() << "→" << y << " @slope 2^" << p.slope_exp << "\n";
  }
  return os.str();
}

PLMap to_plmap(const VSymbol& s) {
  PLMap m;
  const Permutation& g = s.g;
  m.mode = g.is_identity() ? PLMode::Interval : g.is_cyclic() ? PLMode::Circle : PLMode::Exchange;
  auto src = leaf_addresses(s.source), tgt = leaf_addresses(s.target);
  int n = s.leaves();
  for (int i = 1; i <= n; ++i) {
    auto [lo, hi] = leaf_interval(s.source, i);
    int k = g(i);
    Dyadic jlo = leaf_interval(s.target, k).first;
    int a = static_cast<int>(src[i - 1].size()) - static_cast<int>(tgt[k - 1].size());
    Fraction c = jlo.to_fraction() - pow2(a) * lo.to_fraction();
    if (m.mode == PLMode::Circle && k < g(1)) c = c + Fraction(1);
    if (!m.pieces.empty() && m.pieces.back().slope_exp == a && m.pieces.back().intercept == c)
      m.pieces.back().end = hi;
    else
      m.pieces.push_back({lo, hi, a, c});
  }
  return m;
}

static const PLPiece& piece_at(const PLMap& m, const Fraction& x) {
  for (const auto& p : m.pieces)
    if (p.start.to_fraction() <= x && x < p.end.to_fraction()) return p;
  if (m.mode == PLMode::Interval && x == Fraction(1)) return m.pieces.back();
  throw Error(ErrorKind::OutOfDomain, "point " + x.str() + " outside the domain");
}

Fraction eval(const PLMap& m, const Fraction& x) {
  if (x.is_inf() || x < Fraction(0) || x > Fraction(1) || (m.mode != PLMode::Interval && x == Fraction(1)))
    throw Error(ErrorKind::OutOfDomain, "point " + x.str() + " outside the domain");
  Fraction y = piece_at(m, x).apply(x);
  return m.mode == PLMode::Circle ? frac_part(y) : y;
}

Fraction eval_lift(const PLMap& m, const Fraction& x) {
  if (m.mode == PLMode::Exchange) throw Error(ErrorKind::OutOfDomain, "interval exchanges have no lift");
  Fraction k(x.floor(), BigInt(1));
  Fraction r = x - k;
  return piece_at(m, r).apply(r) + k;
}

std::string cantor_apply(const VSymbol& s, const std::string& w) {
  auto src = leaf_addresses(s.source), tgt = leaf_addresses(s.target);
  for (int i = 1; i <= s.leaves(); ++i) {
    const std::string& a = src[i - 1];
    if (w.size() >= a.size() && w.compare(0, a.size(), a) == 0) return tgt[s.g(i) - 1] + w.substr(a.size());
  }
  throw Error(ErrorKind::AddressTooShort, "no leaf address of " + s.source.bits() + " is a prefix of \"" + w + "\"");
}

bool in_F(const VSymbol& s) { return s.g.is_identity(); }
bool in_T(const VSymbol& s) { return s.g.is_cyclic(); }

Fraction rotation_number(const VSymbol& s, int q_cap) {
  if (!in_T(s)) throw Error(ErrorKind::OutOfDomain, "rotation number of an element outside T");
  PLMap f = to_plmap(s);
  VSymbol power = symbol_reduce(s);
  Fraction orbit(0);
  for (int q = 1; q <= q_cap; ++q) {
    orbit = eval_lift(f, orbit);  // F^q(0)
    PLMap g = to_plmap(power);    // lift of the same circle map, normalized at 0
    Fraction m = orbit - g.pieces.front().apply(Fraction(0));
    for (const auto& p : g.pieces) {
      Fraction c = p.intercept + m;
      Fraction x0 = p.start.to_fraction(), x1 = p.end.to_fraction();
      if (p.slope_exp == 0) {
        if (c.is_integer()) return frac_part(Fraction(c.num(), BigInt(q)));
        continue;
      }
      Fraction k = pow2(p.slope_exp) - Fraction(1);
      Fraction d0 = k * x0 + c, d1 = k * x1 + c;
      Fraction lo = d0 < d1 ? d0 : d1, hi = d0 < d1 ? d1 : d0;
      for (BigInt pp = lo.floor(); Fraction(pp, BigInt(1)) <= hi; ++pp) {
        Fraction x = (Fraction(pp, BigInt(1)) - c) / k;
        if (x0 <= x && x < x1) return frac_part(Fraction(pp, BigInt(q)));
      }
    }
    power = symbol_multiply(power, s);
  }
  throw Error(ErrorKind::SearchExceeded, "no periodic point of period <= " + std::to_string(q_cap));
}

std::optional<int> element_order(const VSymbol& s, int cap) {
  VSymbol p = symbol_reduce(s);
  for (int k = 1; k <= cap; ++k) {
    if (symbol_is_identity(p)) return k;
    p = symbol_multiply(p, s);
  }
  return std::nullopt;
}

VSymbol evaluate_word(const FreeWord& w, const std::vector<VSymbol>& images) {
  VSymbol r;
  for (const Letter& l : w.letters()) {
    if (l.gen < 1 || l.gen > static_cast<int>(images.size()))
      throw Error(ErrorKind::MissingImage, "generator " + std::to_string(l.gen));
    const VSymbol& x = images[l.gen - 1];
    r = symbol_multiply(r, l.sign > 0 ? x : symbol_invert(x));
  }
  return r;
}

namespace {

TGenerators search_generators() {
  std::vector<VSymbol> order4, order3;
  for (int n = 1; n <= 5; ++n) {
    auto trees = all_trees(n);
    for (const Tree& t : trees)
      for (const Tree& s : trees)
        for (int r = 0; r < n; ++r) {
          VSymbol x(t, s, Permutation::rotation(n, r));
          VSymbol red = symbol_reduce(x);
          if (red.leaves() != n) continue;
          auto ord = element_order(x, 4);
          if (ord == 4) order4.push_back(x);
          if (ord == 3) order3.push_back(x);
        }
  }
  const Presentation& ls = builtin_presentation("T_LS");
  // cheapest relators first
  std::vector<FreeWord> rels = ls.relators;
  std::stable_sort(rels.begin(), rels.end(), [](const FreeWord& a, const FreeWord& b) { return a.length() < b.length(); });
  for (const VSymbol& a : order4)
    for (const VSymbol& b : order3) {
      bool ok = true;
      for (const FreeWord& w : rels)
        if (!symbol_is_identity(evaluate_word(w, {a, b}))) {
          ok = false;
          break;
        }
      if (ok) return {a, b};
    }
  throw Error(ErrorKind::NoGeneratorFound, "no pair satisfies the relators");
}

}  // namespace

const TGenerators& generators_T() {
  static const TGenerators gens = search_generators();
  return gens;
}

}  // namespace ptg
