#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ptg/error.hpp"

namespace ptg {

using BigInt = boost::multiprecision::cpp_int;

// p/q in lowest terms, q >= 0; the single point at infinity is 1/0.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(long long n) : num_(n), den_(1) {}  // NOLINT implicit
  Fraction(BigInt n, BigInt d);

  static Fraction inf() { return Fraction(BigInt(1), BigInt(0)); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_inf() const { return den_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  BigInt floor() const;
  double to_double() const;
  std::string str() const;
  static Fraction parse(std::string_view s);

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator/(const Fraction& a, const Fraction& b);
  Fraction operator-() const;

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  // infinity sorts above every finite value
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  BigInt num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

Fraction mediant(const Fraction& a, const Fraction& b);
bool is_unimodular(const Fraction& a, const Fraction& b);

// num / 2^exp, normalized so that num is odd unless exp == 0.
class Dyadic {
 public:
  Dyadic() : num_(0), exp_(0) {}
  Dyadic(long long n) : num_(n), exp_(0) {}  // NOLINT implicit
  Dyadic(BigInt n, unsigned e);

  const BigInt& num() const { return num_; }
  unsigned exp() const { return exp_; }
  Fraction to_fraction() const;
  std::string str() const;
  static Dyadic parse(std::string_view s);

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  Dyadic scaled(int k) const;  // times 2^k
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num_ == b.num_ && a.exp_ == b.exp_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  BigInt num_;
  unsigned exp_;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

// One-line images on {1..n}. (g*h)(x) = g(h(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  static Permutation rotation(int n, int shift);  // i -> i + shift mod n

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_cyclic() const;  // a power of the n-cycle i -> i+1

  friend Permutation operator*(const Permutation& g, const Permutation& h);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string str() const;
  static Permutation parse(std::string_view s);

 private:
  std::vector<int> img_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

struct Letter {
  int gen;   // >= 1
  int sign;  // +1 or -1
  Letter inverse() const { return {gen, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  static FreeWord generator(int g, int sign = 1) { return FreeWord({{g, sign}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // appends with cancellation against the tail
  void push(Letter l);
  FreeWord inverse() const;
  bool is_reduced() const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

  std::string str(char symbol = 'x') const;
  static FreeWord parse(std::string_view s, char symbol = 'x');

 private:
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const FreeWord& w);

FreeWord free_reduce(const FreeWord& w);

}  // namespace ptg
