#include "ptg/braids.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace ptg {

BraidWord::BraidWord(int strands, std::vector<Letter> letters) : n_(strands), letters_(std::move(letters)) {
  if (n_ < 1) throw Error(ErrorKind::IndexOutOfRange, "a braid needs at least one strand");
  for (const Letter& l : letters_)
    if (l.gen < 1 || l.gen >= n_ || (l.sign != 1 && l.sign != -1))
      throw Error(ErrorKind::IndexOutOfRange,
                  "generator s" + std::to_string(l.gen) + " on " + std::to_string(n_) + " strands");
}

BraidWord BraidWord::inverse() const {
  std::vector<Letter> v;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) v.push_back(it->inverse());
  return BraidWord(n_, std::move(v));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::StrandMismatch, "composing braids on different strand counts");
  std::vector<Letter> v = a.letters_;
  for (const Letter& l : b.letters_) {
    if (!v.empty() && v.back().gen == l.gen && v.back().sign == -l.sign)
      v.pop_back();
    else
      v.push_back(l);
  }
  return BraidWord(a.n_, std::move(v));
}

std::string BraidWord::str() const {
  if (letters_.empty()) return "";
  return FreeWord(letters_).str('s');
}

BraidWord BraidWord::parse(std::string_view s, int strands) {
  FreeWord w = FreeWord::parse(s, 's');
  return BraidWord(strands, w.letters());
}

Permutation perm_of(const BraidWord& b) {
  Permutation p = Permutation::identity(b.strands());
  for (const Letter& l : b.letters()) p = p * Permutation::transposition(b.strands(), l.gen, l.gen + 1);
  return p;
}

namespace {

int swap_pos(int j, int c) {
  if (c == j) return j + 1;
  if (c == j + 1) return j;
  return c;
}

// cabling of a positive generator s_j at strand position c, on n+1 strands
std::vector<Letter> double_positive(int j, int c) {
  if (j == c) return {{c, 1}, {c + 1, 1}};
  if (j == c - 1) return {{c, 1}, {c - 1, 1}};
  if (j > c) return {{j + 1, 1}};
  return {{j, 1}};
}

}  // namespace

BraidWord double_braid(const BraidWord& b, int i) {
  int n = b.strands();
  if (i < 1 || i > n) throw Error(ErrorKind::IndexOutOfRange, "doubling index " + std::to_string(i));
  std::vector<std::vector<Letter>> chunks;
  int c = i;
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    int next = swap_pos(it->gen, c);
    if (it->sign > 0) {
      chunks.push_back(double_positive(it->gen, c));
    } else {
      auto pos = double_positive(it->gen, next);
      std::vector<Letter> inv;
      for (auto jt = pos.rbegin(); jt != pos.rend(); ++jt) inv.push_back(jt->inverse());
      chunks.push_back(std::move(inv));
    }
    c = next;
  }
  std::vector<Letter> out;
  for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return BraidWord(n + 1, std::move(out));
}

BraidWord delete_strand(const BraidWord& b, int i) {
  int n = b.strands();
  if (n < 2 || i < 1 || i > n) throw Error(ErrorKind::IndexOutOfRange, "deleting strand " + std::to_string(i));
  std::vector<Letter> kept;
  int p = i;
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    int j = it->gen;
    if (j == p || j + 1 == p) {
      p = swap_pos(j, p);
      continue;
    }
    kept.push_back({j > p ? j - 1 : j, it->sign});
  }
  return BraidWord(n - 1, std::vector<Letter>(kept.rbegin(), kept.rend()));
}

BraidWord delete_strand_pure(const BraidWord& b, int i) {
  if (!perm_of(b).is_identity()) throw Error(ErrorKind::NotPure, "braid " + b.str() + " is not pure");
  return delete_strand(b, i);
}

std::vector<FreeWord> artin_images(const BraidWord& b) {
  std::vector<FreeWord> img;
  for (int k = 1; k <= b.strands(); ++k) img.push_back(FreeWord::generator(k));
  for (const Letter& l : b.letters()) {
    FreeWord& u = img[l.gen - 1];
    FreeWord& v = img[l.gen];
    if (l.sign > 0) {
      // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
      FreeWord nu = u * v * u.inverse();
      v = std::move(u);
      u = std::move(nu);
    } else {
      // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
      FreeWord nv = v.inverse() * u * v;
      u = std::move(v);
      v = std::move(nv);
    }
  }
  return img;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw Error(ErrorKind::StrandMismatch,
                std::to_string(a.strands()) + " vs " + std::to_string(b.strands()) + " strands");
  if (a.letters() == b.letters()) return true;
  return artin_images(a) == artin_images(b);
}

bool braid_is_identity(const BraidWord& b) {
  auto img = artin_images(b);
  for (int k = 0; k < b.strands(); ++k)
    if (!(img[k] == FreeWord::generator(k + 1))) return false;
  return true;
}

// ---------------------------------------------------------------- Laurent

Laurent Laurent::monomial(BigInt c, int e) {
  Laurent p;
  if (c != 0) p.terms_[e] = std::move(c);
  return p;
}

BigInt Laurent::at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  Laurent r = a;
  for (const auto& [e, c] : b.terms_) {
    BigInt& x = r.terms_[e];
    x += c;
    if (x == 0) r.terms_.erase(e);
  }
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      BigInt& x = r.terms_[ea + eb];
      x += ca * cb;
    }
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    if (it->second == 0)
      it = r.terms_.erase(it);
    else
      ++it;
  }
  return r;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (e == 0) {
      s += mag.str();
      continue;
    }
    if (mag != 1) s += mag.str();
    s += "t";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.str(); }

LaurentMatrix burau(const BraidWord& b) {
  int n = b.strands();
  LaurentMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = Laurent(r == c ? 1 : 0);
  const Laurent t = Laurent::t(), tinv = Laurent::monomial(1, -1);
  const Laurent one(1);
  for (const Letter& l : b.letters()) {
    int i = l.gen - 1;
    for (int r = 0; r < n; ++r) {
      Laurent u = m(r, i), v = m(r, i + 1);
      if (l.sign > 0) {
        m(r, i) = (one - t) * u + v;
        m(r, i + 1) = t * u;
      } else {
        m(r, i) = tinv * v;
        m(r, i + 1) = u + (one - tinv) * v;
      }
    }
  }
  return m;
}

Eigen::MatrixXi burau_at_one(const BraidWord& b) {
  LaurentMatrix m = burau(b);
  return m.unaryExpr([](const Laurent& p) { return static_cast<int>(p.at_one()); });
}

Eigen::MatrixXi permutation_matrix(const Permutation& p) {
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(p.size(), p.size());
  for (int j = 1; j <= p.size(); ++j) m(p(j) - 1, j - 1) = 1;
  return m;
}

std::string matrix_json(const LaurentMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    os << (r ? "," : "") << "[";
    for (Eigen::Index c = 0; c < m.cols(); ++c) os << (c ? "," : "") << "\"" << m(r, c).str() << "\"";
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace ptg
