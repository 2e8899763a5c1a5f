#pragma once

#include <Eigen/Core>

#include <map>
#include <string>
#include <vector>

#include "ptg/kernel.hpp"

namespace ptg {

// Word in the Artin generators s_i^{+-1} of B_n. Letters act right to left.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<Letter> letters = {});
  static BraidWord generator(int strands, int i, int sign = 1) { return BraidWord(strands, {{i, sign}}); }

  int strands() const { return n_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  BraidWord inverse() const;
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);

  // word identity, not braid identity (see braid_equal)
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  std::string str() const;
  static BraidWord parse(std::string_view s, int strands);

 private:
  int n_ = 1;
  std::vector<Letter> letters_;
};

Permutation perm_of(const BraidWord& b);
BraidWord double_braid(const BraidWord& b, int i);
// removes the strand that starts at position i (bottom of the word), any braid
BraidWord delete_strand(const BraidWord& b, int i);
BraidWord delete_strand_pure(const BraidWord& b, int i);
std::vector<FreeWord> artin_images(const BraidWord& b);
bool braid_equal(const BraidWord& a, const BraidWord& b);
bool braid_is_identity(const BraidWord& b);

// Laurent polynomial in t with integer coefficients
class Laurent {
 public:
  Laurent() = default;
  Laurent(int c) { if (c) terms_[0] = c; }  // NOLINT implicit
  static Laurent monomial(BigInt c, int e);
  static Laurent t() { return monomial(1, 1); }

  const std::map<int, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt at_one() const;

  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;
  Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
  Laurent& operator-=(const Laurent& b) { return *this = *this - b; }
  Laurent& operator*=(const Laurent& b) { return *this = *this * b; }
  friend bool operator==(const Laurent&, const Laurent&) = default;

  std::string str() const;

 private:
  std::map<int, BigInt> terms_;
};

std::ostream& operator<<(std::ostream& os, const Laurent& p);

}  // namespace ptg

namespace Eigen {
template <>
struct NumTraits<ptg::Laurent> : GenericNumTraits<ptg::Laurent> {
  using Real = ptg::Laurent;
  using NonInteger = ptg::Laurent;
  using Nested = ptg::Laurent;
  using Literal = ptg::Laurent;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 200
  };
};
}  // namespace Eigen

namespace ptg {

using LaurentMatrix = Eigen::Matrix<Laurent, Eigen::Dynamic, Eigen::Dynamic>;

// unreduced Burau; s_i acts by the block [[1-t, t], [1, 0]] on coordinates i, i+1
LaurentMatrix burau(const BraidWord& b);
Eigen::MatrixXi burau_at_one(const BraidWord& b);
// column j carries a 1 in row p(j)
Eigen::MatrixXi permutation_matrix(const Permutation& p);
std::string matrix_json(const LaurentMatrix& m);

}  // namespace ptg
