#include "ptg/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ptg {

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const std::vector<std::string>& gens) : s_(text), gens_(gens) {}

  FreeWord parse() {
    std::vector<Letter> w = term();
    skip();
    if (peek() == '=') {
      ++i_;
      std::vector<Letter> rhs = term();
      append_inverse(w, rhs);
    }
    skip();
    if (i_ != s_.size()) fail("unexpected character");
    return FreeWord(std::move(w));
  }

 private:
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, msg + " at position " + std::to_string(i_) + " in \"" + std::string(s_) + "\"");
  }
  static void append_inverse(std::vector<Letter>& w, const std::vector<Letter>& x) {
    for (auto it = x.rbegin(); it != x.rend(); ++it) w.push_back(it->inverse());
  }

  std::vector<Letter> term() {
    std::vector<Letter> w;
    for (;;) {
      skip();
      char c = peek();
      if (c == '\0' || c == ')' || c == ']' || c == ',' || c == '=') return w;
      auto f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
  }

  std::vector<Letter> factor() {
    std::vector<Letter> a = atom();
    skip();
    if (peek() != '^') return a;
    ++i_;
    skip();
    std::size_t st = i_;
    if (peek() == '-' || peek() == '+') ++i_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    std::string num(s_.substr(st, i_ - st));
    if (num.empty() || num == "-" || num == "+") fail("expected exponent");
    int e = std::stoi(num);
    std::vector<Letter> out;
    for (int k = 0; k < std::abs(e); ++k) {
      if (e > 0)
        out.insert(out.end(), a.begin(), a.end());
      else
        append_inverse(out, a);
    }
    return out;
  }

  std::vector<Letter> atom() {
    skip();
    char c = peek();
    if (c == '(') {
      ++i_;
      auto w = term();
      skip();
      if (peek() != ')') fail("expected ')'");
      ++i_;
      return w;
    }
    if (c == '[') {
      ++i_;
      auto u = term();
      skip();
      if (peek() != ',') fail("expected ','");
      ++i_;
      auto v = term();
      skip();
      if (peek() != ']') fail("expected ']'");
      ++i_;
      std::vector<Letter> w = u;
      w.insert(w.end(), v.begin(), v.end());
      append_inverse(w, u);
      append_inverse(w, v);
      return w;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t st = i_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '*') ++i_;
      std::string name(s_.substr(st, i_ - st));
      auto it = std::find(gens_.begin(), gens_.end(), name);
      if (it == gens_.end()) {
        i_ = st;
        fail("unknown generator \"" + name + "\"");
      }
      return {{static_cast<int>(it - gens_.begin()) + 1, 1}};
    }
    fail("expected generator");
  }

  std::string_view s_;
  const std::vector<std::string>& gens_;
  std::size_t i_ = 0;
};

}  // namespace

FreeWord parse_group_word(std::string_view text, const std::vector<std::string>& generators) {
  return WordParser(text, generators).parse();
}

std::string format_group_word(const FreeWord& w, const std::vector<std::string>& generators) {
  std::string out;
  const auto& l = w.letters();
  for (std::size_t k = 0; k < l.size();) {
    std::size_t e = k;
    while (e < l.size() && l[e] == l[k]) ++e;
    int run = static_cast<int>(e - k) * l[k].sign;
    if (!out.empty()) out += ' ';
    out += generators.at(l[k].gen - 1);
    if (run != 1) out += "^" + std::to_string(run);
    k = e;
  }
  return out.empty() ? "1" : out;
}

std::string Presentation::format(const FreeWord& w) const { return format_group_word(w, generators); }

namespace {

Presentation make(std::string name, std::vector<std::string> gens, const std::vector<std::string>& rels,
                  bool right_action = false) {
  Presentation p{std::move(name), std::move(gens), {}, right_action};
  for (const auto& r : rels) p.relators.push_back(parse_group_word(r, p.generators));
  return p;
}

std::string zpow(int k) { return k == 0 ? "" : " z^" + std::to_string(-k); }

}  // namespace

Presentation presentation_T_LS() {
  return make("T_LS", {"a", "b"},
              {"a^4", "b^3", "(b a)^5", "[b a b, a^2 b a b a^2]", "[b a b, a^2 b^2 a^2 b a b a^2 b a^2]"});
}

Presentation presentation_T_npqrs(int n, int p, int q, int r, int s) {
  std::ostringstream name;
  name << "T_npqrs(" << n << "," << p << "," << q << "," << r << "," << s << ")";
  return make(name.str(), {"a", "b", "z"},
              {"(b a)^5" + zpow(n), "a^4" + zpow(p), "b^3" + zpow(q), "[b a b, a^2 b a b a^2]" + zpow(r),
               "[b a b, a^2 b a^2 b a b a^2 b^2 a^2]" + zpow(s), "[a, z]", "[b, z]"});
}

Presentation presentation_Tstar_ab() {
  return make("Tstar_ab", {"a", "b", "z"},
              {"a^4", "b^3", "(b a)^5 z^-1", "[a, z]", "[b, z]", "[b a b, a^2 b a b a^2]",
               "[b a b, a^2 b^2 a^2 b a b a^2 b a^2]"});
}

Presentation presentation_braided_houghton(int n) {
  if (n < 2) throw Error(ErrorKind::IndexOutOfRange, "braided Houghton presentation needs n >= 2");
  std::vector<std::string> gens;
  for (int i = 1; i <= n; ++i) gens.push_back("d" + std::to_string(i));
  auto wrap = [n](int i) { return ((i - 1) % n + n) % n + 1; };
  auto d = [&](int i) { return "d" + std::to_string(wrap(i)); };
  auto u = [&](int i) { return "(" + d(i) + " " + d(i + 1) + " " + d(i) + "^-1 " + d(i + 1) + "^-1)"; };
  // j strictly after i and strictly before i-1 in the cyclic order
  auto between = [&](int i, int j) {
    int k = ((j - i) % n + n) % n;
    return k >= 1 && k <= n - 2;
  };

  std::vector<std::string> rels;
  std::string top;
  for (int i = n; i >= 1; --i) top += (top.empty() ? "" : " ") + d(i);
  rels.push_back(top);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        if (a == b || b == c || a == c) continue;
        int kb = ((b - a) % n + n) % n, kc = ((c - a) % n + n) % n;
        if (kb >= kc) continue;
        std::string w1 = u(a) + " " + u(b) + " " + u(c) + " " + u(a);
        std::string w2 = u(b) + " " + u(c) + " " + u(a) + " " + u(b);
        std::string w3 = u(c) + " " + u(a) + " " + u(b) + " " + u(c);
        rels.push_back(w1 + " = " + w2);
        rels.push_back(w2 + " = " + w3);
      }
  for (int i = 1; i <= n; ++i) rels.push_back(d(i - 1) + "^-1 " + u(i) + " " + d(i - 1) + " = " + d(i) + " " + u(i) + " " + d(i) + "^-1");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) rels.push_back(u(i) + " " + u(j) + " " + u(i) + " = " + u(j) + " " + u(i) + " " + u(j));
  for (int i = 1; i <= n; ++i) {
    std::string c = "(" + d(i - 1) + "^-1 " + u(i) + " " + d(i - 1) + ")";
    rels.push_back(c + " " + u(i) + " " + c + " = " + u(i) + " " + c + " " + u(i));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) rels.push_back("[" + d(i) + " " + u(i) + " " + d(i) + "^-1, " + u(j) + "]");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (between(i, j)) rels.push_back("[" + d(i) + " " + u(i) + " " + d(i) + "^-1, " + d(j) + "]");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (between(i, j))
        rels.push_back(d(j) + " " + u(i) + " " + d(j) + "^-1 = " + u(i) + " " + u(j) + " " + u(i) + "^-1");
  return make("BraidedHoughton_" + std::to_string(n), gens, rels, true);
}

Presentation builtin_presentation(const std::string& name) {
  if (name == "T_LS") return presentation_T_LS();
  if (name == "Tstar_ab") return presentation_Tstar_ab();
  const std::string bh = "BraidedHoughton_";
  if (name.rfind(bh, 0) == 0) {
    std::string rest = name.substr(bh.size());
    if (!rest.empty() && std::all_of(rest.begin(), rest.end(), ::isdigit))
      return presentation_braided_houghton(std::stoi(rest));
  }
  const std::string tn = "T_npqrs(";
  if (name.rfind(tn, 0) == 0 && name.back() == ')') {
    std::vector<int> v;
    std::stringstream ss(name.substr(tn.size(), name.size() - tn.size() - 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        v.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw Error(ErrorKind::SyntaxError, "bad parameter \"" + item + "\" in " + name);
      }
    }
    if (v.size() == 5) return presentation_T_npqrs(v[0], v[1], v[2], v[3], v[4]);
  }
  throw Error(ErrorKind::SyntaxError, "unknown presentation \"" + name + "\"");
}

std::vector<std::string> builtin_presentation_names() {
  return {"T_LS", "Tstar_ab", "T_npqrs(n,p,q,r,s)", "BraidedHoughton_n"};
}

// ---------------------------------------------------------------- Houghton

HoughtonElement::HoughtonElement(int n) : n_(n), offsets_(n, 0), radius_(0) {
  if (n < 2) throw Error(ErrorKind::IndexOutOfRange, "Houghton group needs n >= 2 rays");
  table_[{0, 0}] = {0, 0};
}

HoughtonElement::HoughtonElement(int n, std::vector<long long> offsets, long long radius,
                                 std::map<HPoint, HPoint> table)
    : n_(n), offsets_(std::move(offsets)), radius_(radius), table_(std::move(table)) {}

long long HoughtonElement::max_offset() const {
  long long m = 0;
  for (long long t : offsets_) m = std::max(m, t < 0 ? -t : t);
  return m;
}

HPoint HoughtonElement::operator()(const HPoint& x) const {
  if (x.ray == 0 || x.index <= radius_) return table_.at(x);
  return {x.ray, x.index + offsets_[x.ray - 1]};
}

namespace {
template <class F>
void for_core(int n, long long radius, F f) {
  f(HPoint{0, 0});
  for (int r = 1; r <= n; ++r)
    for (long long i = 1; i <= radius; ++i) f(HPoint{r, i});
}
}  // namespace

HoughtonElement operator*(const HoughtonElement& a, const HoughtonElement& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::DegreeMismatch, "Houghton elements on different ray counts");
  std::vector<long long> off(a.n_);
  for (int r = 0; r < a.n_; ++r) off[r] = a.offsets_[r] + b.offsets_[r];
  long long radius = std::max(a.radius_, b.radius_) + b.max_offset();
  std::map<HPoint, HPoint> t;
  for_core(a.n_, radius, [&](const HPoint& x) { t[x] = a(b(x)); });
  return HoughtonElement(a.n_, std::move(off), radius, std::move(t));
}

HoughtonElement HoughtonElement::inverse() const {
  std::vector<long long> off(n_);
  for (int r = 0; r < n_; ++r) off[r] = -offsets_[r];
  long long radius = radius_ + max_offset();
  std::map<HPoint, HPoint> t;
  for_core(n_, radius + max_offset(), [&](const HPoint& x) {
    HPoint y = (*this)(x);
    if (y.ray == 0 || y.index <= radius) t[y] = x;
  });
  return HoughtonElement(n_, std::move(off), radius, std::move(t));
}

bool operator==(const HoughtonElement& a, const HoughtonElement& b) {
  if (a.n_ != b.n_ || a.offsets_ != b.offsets_) return false;
  bool same = true;
  for_core(a.n_, std::max(a.radius_, b.radius_), [&](const HPoint& x) { same = same && a(x) == b(x); });
  return same;
}

std::string HoughtonElement::str() const {
  std::ostringstream os;
  auto pt = [](const HPoint& p) { return p.ray == 0 ? std::string("c") : "(" + std::to_string(p.ray) + "," + std::to_string(p.index) + ")"; };
  os << "offsets [";
  for (int r = 0; r < n_; ++r) os << (r ? "," : "") << offsets_[r];
  os << "]";
  for_core(n_, radius_, [&](const HPoint& x) {
    HPoint y = (*this)(x);
    if (!(x == y)) os << " " << pt(x) << "->" << pt(y);
  });
  return os.str();
}

HoughtonElement houghton_generator(int n, int j) {
  if (n < 2 || j < 1 || j > n) throw Error(ErrorKind::IndexOutOfRange, "d" + std::to_string(j) + " with n = " + std::to_string(n));
  int k = j % n + 1;
  std::vector<long long> off(n, 0);
  off[j - 1] = -1;
  off[k - 1] = 1;
  std::map<HPoint, HPoint> t;
  for (int r = 1; r <= n; ++r) t[{r, 1}] = {r, 1};
  t[{0, 0}] = {k, 1};
  t[{j, 1}] = {0, 0};
  t[{k, 1}] = {k, 2};
  return HoughtonElement(n, std::move(off), 1, std::move(t));
}

std::map<std::string, HoughtonElement> houghton_images(int n) {
  std::map<std::string, HoughtonElement> m;
  for (int j = 1; j <= n; ++j) m.emplace("d" + std::to_string(j), houghton_generator(n, j));
  return m;
}

}  // namespace ptg
