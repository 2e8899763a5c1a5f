#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptg/cosimplicial.hpp"

namespace ptg {

enum class PLMode { Interval, Circle, Exchange };

// x in [start, end) maps to 2^slope_exp * x + intercept; circle maps are
// stored as the lift with image of 0 in [0,1)
struct PLPiece {
  Dyadic start, end;
  int slope_exp;
  Fraction intercept;
  Fraction apply(const Fraction& x) const;
};

struct PLMap {
  PLMode mode = PLMode::Interval;
  std::vector<PLPiece> pieces;

  std::vector<Dyadic> breakpoints() const;
  std::string str() const;
};

PLMap to_plmap(const VSymbol& s);
Fraction eval(const PLMap& m, const Fraction& x);
// the lift of a circle or interval map to the real line
Fraction eval_lift(const PLMap& m, const Fraction& x);

std::string cantor_apply(const VSymbol& s, const std::string& w);

bool in_F(const VSymbol& s);
bool in_T(const VSymbol& s);

Fraction rotation_number(const VSymbol& s, int q_cap = 64);
std::optional<int> element_order(const VSymbol& s, int cap);

// product of images along a word; letter k stands for images[k-1]
VSymbol evaluate_word(const FreeWord& w, const std::vector<VSymbol>& images);

struct TGenerators {
  VSymbol alpha, beta;
};
// α of order 4 and β of order 3 satisfying the five Lochak–Schneps relators,
// the first such pair among reduced symbols with at most five leaves and
// cyclic permutation, enumerated by leaf count, then target, source and
// rotation
const TGenerators& generators_T();

}  // namespace ptg
