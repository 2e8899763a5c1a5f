#include "ptg/kernel.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ptg {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::EqualArguments: return "EqualArguments";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::AddressTooShort: return "AddressTooShort";
    case ErrorKind::SearchExceeded: return "SearchExceeded";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::StrandMismatch: return "StrandMismatch";
    case ErrorKind::EdgeNotPresent: return "EdgeNotPresent";
    case ErrorKind::LabelNotReachable: return "LabelNotReachable";
    case ErrorKind::NotStabilizing: return "NotStabilizing";
    case ErrorKind::EdgeNotInterior: return "EdgeNotInterior";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::MissingImage: return "MissingImage";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NoGeneratorFound: return "NoGeneratorFound";
  }
  return "Error";
}

namespace {

[[noreturn]] void syntax(std::string_view text, std::size_t pos, const std::string& msg) {
  std::ostringstream os;
  os << msg << " at position " << pos << " in \"" << text << "\"";
  throw Error(ErrorKind::SyntaxError, os.str());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_int(std::string_view text, std::string_view s, std::size_t offset) {
  if (s.empty()) syntax(text, offset, "expected integer");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) syntax(text, offset + i, "expected digits");
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) syntax(text, offset + i, "unexpected character");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? BigInt(-v) : v;
}

}  // namespace

// ---------------------------------------------------------------- Fraction

Fraction::Fraction(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (num_ == 0 && den_ == 0) throw Error(ErrorKind::DomainViolation, "0/0 is not a fraction");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (den_ == 0) {
    num_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

static void require_finite(const Fraction& a, const Fraction& b) {
  if (a.is_inf() || b.is_inf()) throw Error(ErrorKind::DomainViolation, "arithmetic with infinity");
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  require_finite(a, b);
  return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Fraction operator-(const Fraction& a, const Fraction& b) {
  require_finite(a, b);
  return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Fraction operator*(const Fraction& a, const Fraction& b) {
  require_finite(a, b);
  return Fraction(a.num_ * b.num_, a.den_ * b.den_);
}
Fraction operator/(const Fraction& a, const Fraction& b) {
  require_finite(a, b);
  if (b.num_ == 0) throw Error(ErrorKind::DomainViolation, "division by zero");
  return Fraction(a.num_ * b.den_, a.den_ * b.num_);
}
Fraction Fraction::operator-() const {
  if (is_inf()) return *this;
  return Fraction(-num_, den_);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  if (a.is_inf() || b.is_inf()) return a.is_inf() <=> b.is_inf();
  BigInt l = a.num_ * b.den_, r = b.num_ * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt Fraction::floor() const {
  if (is_inf()) throw Error(ErrorKind::DomainViolation, "floor of infinity");
  BigInt q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && q * den_ != num_) q -= 1;
  return q;
}

double Fraction::to_double() const {
  if (is_inf()) return std::numeric_limits<double>::infinity();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Fraction::str() const {
  if (is_inf()) return "inf";
  return num_.str() + "/" + den_.str();
}

Fraction Fraction::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "inf" || s == "1/0" || s == "-1/0") return inf();
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_int(text, s, 0), BigInt(1));
  BigInt d = parse_int(text, s.substr(slash + 1), slash + 1);
  BigInt n = parse_int(text, s.substr(0, slash), 0);
  if (d < 0) syntax(text, slash + 1, "negative denominator");
  return Fraction(n, d);
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

Fraction mediant(const Fraction& a, const Fraction& b) {
  if (a == b) throw Error(ErrorKind::EqualArguments, "mediant of " + a.str() + " with itself");
  // infinity contributes (+-1, 0), signed toward the finite argument's side
  if (b.is_inf()) return Fraction(a.num() + (a.sign() < 0 ? -1 : 1), a.den());
  if (a.is_inf()) return Fraction(b.num() + (b.sign() < 0 ? -1 : 1), b.den());
  return Fraction(a.num() + b.num(), a.den() + b.den());
}

bool is_unimodular(const Fraction& a, const Fraction& b) {
  BigInt d = a.num() * b.den() - b.num() * a.den();
  return d == 1 || d == -1;
}

// ---------------------------------------------------------------- Dyadic

Dyadic::Dyadic(BigInt n, unsigned e) : num_(std::move(n)), exp_(e) {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && !boost::multiprecision::bit_test(num_, 0)) {
    num_ >>= 1;
    --exp_;
  }
}

Fraction Dyadic::to_fraction() const { return Fraction(num_, BigInt(1) << exp_); }

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  unsigned e = std::max(a.exp_, b.exp_);
  return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
}
Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  unsigned e = std::max(a.exp_, b.exp_);
  return Dyadic((a.num_ << (e - a.exp_)) - (b.num_ << (e - b.exp_)), e);
}

Dyadic Dyadic::scaled(int k) const {
  if (k >= 0) {
    if (static_cast<unsigned>(k) <= exp_) return Dyadic(num_, exp_ - k);
    return Dyadic(num_ << (k - static_cast<int>(exp_)), 0);
  }
  return Dyadic(num_, exp_ + static_cast<unsigned>(-k));
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  unsigned e = std::max(a.exp_, b.exp_);
  BigInt l = a.num_ << (e - a.exp_), r = b.num_ << (e - b.exp_);
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::str() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_int(text, s, 0), 0);
  BigInt n = parse_int(text, s.substr(0, slash), 0);
  std::string_view rest = s.substr(slash + 1);
  if (rest.substr(0, 2) != "2^") syntax(text, slash + 1, "expected 2^k");
  BigInt k = parse_int(text, rest.substr(2), slash + 3);
  if (k < 0 || k > 100000) syntax(text, slash + 3, "exponent out of range");
  return Dyadic(n, static_cast<unsigned>(k));
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.str(); }

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size() + 1, 0);
  for (int v : img_) {
    if (v < 1 || v > size() || seen[v])
      throw Error(ErrorKind::DomainViolation, "not a permutation of 1..n");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int i, int j) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[i - 1], v[j - 1]);
  return Permutation(std::move(v));
}

Permutation Permutation::rotation(int n, int shift) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = ((i + shift) % n + n) % n + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 0; i < size(); ++i) v[img_[i] - 1] = i + 1;
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

bool Permutation::is_cyclic() const {
  int n = size();
  if (n == 0) return true;
  int shift = img_[0] - 1;
  for (int i = 0; i < n; ++i)
    if (img_[i] != (i + shift) % n + 1) return false;
  return true;
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  if (g.size() != h.size()) throw Error(ErrorKind::DegreeMismatch, "composing permutations of different degree");
  std::vector<int> v(h.size());
  for (int i = 0; i < h.size(); ++i) v[i] = g.img_[h.img_[i] - 1];
  return Permutation(std::move(v));
}

std::string Permutation::str() const {
  std::string s = "[";
  for (int i = 0; i < size(); ++i) {
    if (i) s += ",";
    s += std::to_string(img_[i]);
  }
  return s + "]";
}

Permutation Permutation::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') syntax(text, text.size(), "missing ']'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> v;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    std::string_view item = trim(s.substr(pos, comma - pos));
    if (item.empty()) {
      if (s.empty()) break;
      syntax(text, pos, "empty permutation entry");
    }
    BigInt x = parse_int(text, item, pos);
    if (x < 1 || x > 1000000) syntax(text, pos, "permutation entry out of range");
    v.push_back(static_cast<int>(x));
    pos = comma + 1;
  }
  try {
    return Permutation(std::move(v));
  } catch (const Error&) {
    syntax(text, 0, "images are not a permutation");
  }
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.str(); }

// ---------------------------------------------------------------- FreeWord

void FreeWord::push(Letter l) {
  if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign)
    letters_.pop_back();
  else
    letters_.push_back(l);
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> v;
  v.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) v.push_back(it->inverse());
  return FreeWord(std::move(v));
}

bool FreeWord::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i].gen == letters_[i - 1].gen && letters_[i].sign == -letters_[i - 1].sign) return false;
  return true;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord r = free_reduce(a);
  for (const Letter& l : b.letters_) r.push(l);
  return r;
}

FreeWord free_reduce(const FreeWord& w) {
  FreeWord r;
  for (const Letter& l : w.letters()) r.push(l);
  return r;
}

std::string FreeWord::str(char symbol) const {
  std::string s;
  for (const Letter& l : letters_) {
    if (!s.empty()) s += ' ';
    s += symbol;
    s += std::to_string(l.gen);
    if (l.sign < 0) s += "^-1";
  }
  return s;
}

FreeWord FreeWord::parse(std::string_view text, char symbol) {
  std::vector<Letter> v;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != symbol) syntax(text, i, std::string("expected '") + symbol + "'");
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) syntax(text, i, "expected generator index");
    int g = std::stoi(std::string(text.substr(start, i - start)));
    if (g < 1) syntax(text, start, "generator index must be positive");
    int e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t es = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      BigInt x = parse_int(text, text.substr(es, i - es), es);
      if (x > 10000 || x < -10000) syntax(text, es, "exponent too large");
      e = static_cast<int>(x);
    }
    for (int k = 0; k < (e < 0 ? -e : e); ++k) v.push_back({g, e < 0 ? -1 : 1});
    skip();
  }
  return FreeWord(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const FreeWord& w) { return os << w.str(); }

}  // namespace ptg
