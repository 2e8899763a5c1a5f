#include "ptg/ptolemy.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <sstream>

#include "ptg/error.hpp"

namespace ptg {

Edge::Edge(const Fraction& x, const Fraction& y) {
  if (x == y) throw Error(ErrorKind::EqualArguments, "degenerate edge at " + x.str());
  if (x < y) {
    a = x;
    b = y;
  } else {
    a = y;
    b = x;
  }
}

std::string Edge::str() const { return "{" + a.str() + ", " + b.str() + "}"; }

Triangle::Triangle(const Fraction& x, const Fraction& y, const Fraction& z) : v{x, y, z} {
  std::sort(v.begin(), v.end());
  if (v[0] == v[1] || v[1] == v[2]) throw Error(ErrorKind::EqualArguments, "degenerate triangle");
}

const Fraction& Triangle::apex(const Edge& e) const {
  for (const auto& x : v)
    if (!e.has(x)) return x;
  throw Error(ErrorKind::EdgeNotPresent, e.str());
}

bool ccw(const Fraction& a, const Fraction& b, const Fraction& c) {
  return (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
}

std::array<Fraction, 2> farey_apexes(const Edge& e) {
  const auto& x = e.a;
  const auto& y = e.b;
  return {Fraction(x.num() + y.num(), x.den() + y.den()), Fraction(x.num() - y.num(), x.den() - y.den())};
}

namespace {

std::map<Edge, int> edge_counts(const MarkedTessellation& t) {
  std::map<Edge, int> m;
  for (const auto& tr : t.support)
    for (const auto& e : tr.edges()) ++m[e];
  return m;
}

// x lies on the closed arc cut off by chord {p, q} away from r
bool in_far_arc(const Fraction& p, const Fraction& q, const Fraction& r, const Fraction& x) {
  if (x == p || x == q) return true;
  if (x == r) return false;
  return ccw(p, x, q) != ccw(p, r, q);
}

Fraction far_farey_apex(const Edge& e, const Fraction& near) {
  auto ap = farey_apexes(e);
  return in_far_arc(e.a, e.b, near, ap[0]) ? ap[0] : ap[1];
}

// adds Farey triangles beyond the boundary until e is an edge of the support
void materialize_edge(MarkedTessellation& t, const Edge& e) {
  if (has_edge(t, e)) return;
  if (!is_unimodular(e.a, e.b)) throw Error(ErrorKind::EdgeNotPresent, e.str() + " is not an edge");
  for (const auto& [b, n] : edge_counts(t)) {
    if (n != 1) continue;
    Fraction near;
    for (const auto& tr : t.support)
      if (tr.has(b)) near = tr.apex(b);
    if (!in_far_arc(b.a, b.b, near, e.a) || !in_far_arc(b.a, b.b, near, e.b)) continue;
    Fraction p = b.a, q = b.b, r = near;
    for (;;) {
      Fraction w = far_farey_apex(Edge(p, q), r);
      t.support.insert(Triangle(p, q, w));
      if (Edge(p, w) == e || Edge(w, q) == e) return;
      if (in_far_arc(p, w, q, e.a) && in_far_arc(p, w, q, e.b)) {
        r = q;
        q = w;
      } else {
        r = p;
        p = w;
      }
    }
  }
  throw Error(ErrorKind::EdgeNotPresent, e.str() + " crosses the support");
}

void ensure_interior(MarkedTessellation& t, const Edge& e) {
  materialize_edge(t, e);
  auto tri = t.triangles_on(e);
  if (tri.size() == 1) t.support.insert(Triangle(e.a, e.b, far_farey_apex(e, tri[0].apex(e))));
}

void flip_in_place(MarkedTessellation& t, const Edge& e) {
  ensure_interior(t, e);
  auto tri = t.triangles_on(e);
  const Fraction r = tri[0].apex(e), s = tri[1].apex(e);
  t.support.erase(tri[0]);
  t.support.erase(tri[1]);
  t.support.insert(Triangle(r, s, e.a));
  t.support.insert(Triangle(r, s, e.b));
  if (t.doe.edge() == e) {
    const Fraction& z = t.doe.tail;
    const Fraction& x = t.doe.head;
    bool r_is_y = ccw(x, r, z);
    t.doe = r_is_y ? OrientedEdge{s, r} : OrientedEdge{r, s};
  }
}

void move_B_in_place(MarkedTessellation& t) {
  ensure_interior(t, t.doe.edge());
  const Fraction x = t.doe.tail, y = t.doe.head;
  for (const auto& tr : t.triangles_on(t.doe.edge())) {
    const Fraction& z = tr.apex(t.doe.edge());
    if (ccw(x, y, z)) {
      t.doe = {y, z};
      return;
    }
  }
}

}  // namespace

std::vector<Edge> MarkedTessellation::edges() const {
  std::vector<Edge> out;
  for (const auto& [e, n] : edge_counts(*this)) out.push_back(e);
  return out;
}

std::vector<Edge> MarkedTessellation::interior_edges() const {
  std::vector<Edge> out;
  for (const auto& [e, n] : edge_counts(*this))
    if (n == 2) out.push_back(e);
  return out;
}

std::vector<Edge> MarkedTessellation::boundary_edges() const {
  std::vector<Edge> out;
  for (const auto& [e, n] : edge_counts(*this))
    if (n == 1) out.push_back(e);
  return out;
}

std::vector<Triangle> MarkedTessellation::triangles_on(const Edge& e) const {
  std::vector<Triangle> out;
  for (const auto& tr : support)
    if (tr.has(e)) out.push_back(tr);
  return out;
}

MarkedTessellation base_tessellation() {
  MarkedTessellation t;
  t.support.insert(Triangle(0, Fraction::inf(), -1));
  t.support.insert(Triangle(0, Fraction::inf(), 1));
  t.doe = {Fraction(0), Fraction::inf()};
  return t;
}

bool is_valid(const MarkedTessellation& t) {
  auto counts = edge_counts(t);
  for (const auto& [e, n] : counts) {
    if (n > 2) return false;
    if (n == 1 && !is_unimodular(e.a, e.b)) return false;
  }
  // a triangulated disk: V - E + F = 1
  std::set<Fraction> verts;
  for (const auto& tr : t.support) verts.insert(tr.v.begin(), tr.v.end());
  long euler = static_cast<long>(verts.size()) - static_cast<long>(counts.size()) + static_cast<long>(t.support.size());
  if (euler != 1) return false;
  return counts.contains(t.doe.edge()) || is_unimodular(t.doe.tail, t.doe.head);
}

bool has_edge(const MarkedTessellation& t, const Edge& e) {
  for (const auto& tr : t.support)
    if (tr.has(e)) return true;
  return false;
}

MarkedTessellation with_edge_interior(const MarkedTessellation& t, const Edge& e) {
  MarkedTessellation u = t;
  ensure_interior(u, e);
  return u;
}

MarkedTessellation flip(const MarkedTessellation& t, const Edge& e) {
  MarkedTessellation u = t;
  flip_in_place(u, e);
  return u;
}

MarkedTessellation move_A(const MarkedTessellation& t) { return flip(t, t.doe.edge()); }

MarkedTessellation move_B(const MarkedTessellation& t) {
  MarkedTessellation u = t;
  move_B_in_place(u);
  return u;
}

Edge char_map(const MarkedTessellation& t, const Fraction& q, int depth_cap) {
  if (q == Fraction(0)) return t.doe.edge();
  if (q.is_inf() || q == Fraction(1) || q == Fraction(-1))
    throw Error(ErrorKind::OutOfDomain, "no edge carries the label " + q.str());
  MarkedTessellation work = t;
  const Edge d = t.doe.edge();
  ensure_interior(work, d);
  const Fraction tail = t.doe.tail, head = t.doe.head;
  Fraction left, right;
  for (const auto& tr : work.triangles_on(d)) {
    const Fraction& z = tr.apex(d);
    (ccw(tail, head, z) ? left : right) = z;
  }
  struct Lab {
    BigInt p, q;
  };
  auto below = [&](const Lab& l) {  // q < l, for finite l
    return q.num() * l.q < l.p * q.den();
  };
  Fraction u, v, near;
  Lab lu, lv;
  if (q.sign() > 0) {
    if (q < Fraction(1)) {
      u = tail, v = right, near = head, lu = {0, 1}, lv = {1, 1};
    } else {
      u = right, v = head, near = tail, lu = {1, 1}, lv = {1, 0};
    }
  } else {
    if (q > Fraction(-1)) {
      u = left, v = tail, near = head, lu = {-1, 1}, lv = {0, 1};
    } else {
      u = head, v = left, near = tail, lu = {-1, 0}, lv = {-1, 1};
    }
  }
  for (int step = 0; step < depth_cap; ++step) {
    Edge e(u, v);
    ensure_interior(work, e);
    Fraction w;
    for (const auto& tr : work.triangles_on(e))
      if (!tr.has(near)) w = tr.apex(e);
    Lab lw{lu.p + lv.p, lu.q + lv.q};
    if (lw.p * q.den() == q.num() * lw.q) return e;
    if (below(lw)) {
      near = v, v = w, lv = lw;
    } else {
      near = u, u = w, lu = lw;
    }
  }
  throw Error(ErrorKind::LabelNotReachable, q.str() + " beyond depth " + std::to_string(depth_cap));
}

MarkedTessellation act_flip_label(const MarkedTessellation& t, const Fraction& q) {
  return flip(t, char_map(t, q));
}

FreeWord parse_move_word(std::string_view text) {
  FreeWord w;
  auto first = text.find_first_not_of(' '), last = text.find_last_not_of(' ');
  if (first != std::string_view::npos && text.substr(first, last - first + 1) == "1") return w;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::SyntaxError, msg + " at position " + std::to_string(i));
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '*' || c == '.') {
      ++i;
      continue;
    }
    int gen = 0, sign = 1;
    switch (c) {
      case 'A': gen = 1; break;
      case 'B': gen = 2; break;
      case 'a': gen = 1, sign = -1; break;
      case 'b': gen = 2, sign = -1; break;
      default: fail(std::string("unexpected '") + c + "'");
    }
    ++i;
    long k = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t start = i;
      if (i < text.size() && text[i] == '-') ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start || (i == start + 1 && text[start] == '-')) fail("missing exponent");
      k = std::stol(std::string(text.substr(start, i - start)));
    }
    if (k < 0) sign = -sign, k = -k;
    for (long j = 0; j < k; ++j) w.push({gen, sign});
  }
  return w;
}

std::string format_move_word(const FreeWord& w) {
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    if (!out.empty()) out += ' ';
    out += ls[i].gen == 1 ? 'A' : 'B';
    long k = static_cast<long>(j - i) * ls[i].sign;
    if (k != 1) out += "^" + std::to_string(k);
    i = j;
  }
  return out.empty() ? "1" : out;
}

MarkedTessellation act_word(const MarkedTessellation& t, const FreeWord& w) {
  MarkedTessellation u = t;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    int reps = it->gen == 1 ? (it->sign > 0 ? 1 : 3) : (it->sign > 0 ? 1 : 2);
    for (int r = 0; r < reps; ++r) {
      if (it->gen == 1)
        flip_in_place(u, u.doe.edge());
      else
        move_B_in_place(u);
    }
  }
  return u;
}

MarkedTessellation act_word(const MarkedTessellation& t, std::string_view w) {
  return act_word(t, parse_move_word(w));
}

MarkedTessellation canonicalize(const MarkedTessellation& t) {
  MarkedTessellation u = t;
  ensure_interior(u, u.doe.edge());
  const Edge d = u.doe.edge();
  for (bool pruned = true; pruned;) {
    pruned = false;
    auto counts = edge_counts(u);
    for (auto it = u.support.begin(); it != u.support.end(); ++it) {
      if (it->has(d)) continue;
      int outer = 0;
      bool farey = true;
      for (const auto& e : it->edges()) {
        outer += counts[e] == 1;
        farey = farey && is_unimodular(e.a, e.b);
      }
      if (farey && outer >= 2) {
        u.support.erase(it);
        pruned = true;
        break;
      }
    }
  }
  return u;
}

bool tess_equal(const MarkedTessellation& a, const MarkedTessellation& b) {
  return canonicalize(a) == canonicalize(b);
}

namespace {

void sync_labels(LabelledTessellation& lt) {
  for (const auto& e : lt.tess.edges()) {
    if (lt.labels.contains(e)) continue;
    lt.labels[e] = lt.next_label;
    lt.birth[e] = lt.next_label;
    ++lt.next_label;
  }
}

void labelled_flip_in_place(LabelledTessellation& lt, const Edge& e) {
  ensure_interior(lt.tess, e);
  sync_labels(lt);
  int label = lt.labels.at(e);
  auto tri = lt.tess.triangles_on(e);
  Edge diag(tri[0].apex(e), tri[1].apex(e));
  flip_in_place(lt.tess, e);
  lt.labels.erase(e);
  lt.labels[diag] = label;
}

}  // namespace

LabelledTessellation label_edges(const MarkedTessellation& t) {
  LabelledTessellation lt;
  lt.tess = t;
  sync_labels(lt);
  return lt;
}

LabelledTessellation labelled_flip(const LabelledTessellation& lt, const Edge& e) {
  LabelledTessellation u = lt;
  labelled_flip_in_place(u, e);
  return u;
}

LabelledTessellation labelled_flip_label(const LabelledTessellation& lt, int label) {
  for (const auto& [e, l] : lt.labels)
    if (l == label) return labelled_flip(lt, e);
  throw Error(ErrorKind::EdgeNotPresent, "no edge labelled " + std::to_string(label));
}

LabelledTessellation labelled_act(const LabelledTessellation& lt, const FreeWord& w) {
  LabelledTessellation u = lt;
  sync_labels(u);
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    int reps = it->gen == 1 ? (it->sign > 0 ? 1 : 3) : (it->sign > 0 ? 1 : 2);
    for (int r = 0; r < reps; ++r) {
      if (it->gen == 1) {
        labelled_flip_in_place(u, u.tess.doe.edge());
      } else {
        move_B_in_place(u.tess);
        sync_labels(u);
      }
    }
  }
  return u;
}

Permutation label_permutation(const LabelledTessellation& start, const LabelledTessellation& end) {
  if (!tess_equal(start.tess, end.tess))
    throw Error(ErrorKind::NotStabilizing, "the word moves the tessellation");
  const int n = end.next_label - 1;
  std::vector<int> img(n, 0);
  for (const auto& [e, l] : end.labels) {
    auto b = end.birth.find(e);
    if (b == end.birth.end())
      throw Error(ErrorKind::NotStabilizing, "edge " + e.str() + " absent from the start");
    img[b->second - 1] = l;
  }
  for (int i = 0; i < n; ++i)
    if (img[i] == 0) throw Error(ErrorKind::NotStabilizing, "label set not preserved");
  return Permutation(img);
}

Permutation stabilizer_permutation(const MarkedTessellation& t, const FreeWord& w) {
  auto start = label_edges(t);
  return label_permutation(start, labelled_act(start, w));
}

CayleyBall cayley_ball(int r) {
  CayleyBall ball;
  std::map<MarkedTessellation, long> index;
  auto root = canonicalize(base_tessellation());
  index[root] = 0;
  ball.vertices.push_back(root);
  ball.adjacency.push_back({-1, -1, -1, -1});
  ball.sphere_sizes.push_back(1);
  std::size_t lo = 0, hi = 1;
  for (int radius = 1; radius <= r + 1; ++radius) {
    std::size_t added = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      const auto v = ball.vertices[i];
      std::array<MarkedTessellation, 4> nb = {move_A(v), move_A(move_A(move_A(v))), move_B(v),
                                              move_B(move_B(v))};
      for (int g = 0; g < 4; ++g) {
        auto c = canonicalize(nb[g]);
        auto it = index.find(c);
        if (it == index.end()) {
          if (radius > r) continue;
          it = index.emplace(c, static_cast<long>(ball.vertices.size())).first;
          ball.vertices.push_back(c);
          ball.adjacency.push_back({-1, -1, -1, -1});
          ++added;
        }
        ball.adjacency[i][g] = it->second;
      }
    }
    if (radius > r) break;
    ball.sphere_sizes.push_back(added);
    lo = hi;
    hi = ball.vertices.size();
  }
  return ball;
}

namespace {

struct Pt {
  double x, y;
};

// Cayley transform onto the unit circle, screen y pointing down
Pt disk_point(const Fraction& f) {
  if (f.is_inf()) return {1.0, 0.0};
  double x = f.to_double();
  double d = x * x + 1;
  return {(x * x - 1) / d, 2 * x / d};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << (std::abs(v) < 5e-7 ? 0.0 : v);
  return os.str();
}

std::string arc_path(const Fraction& s, const Fraction& t) {
  Pt p = disk_point(s), q = disk_point(t);
  std::string d = "M " + fmt(p.x) + " " + fmt(p.y) + " ";
  double a1 = std::atan2(p.y, p.x), a2 = std::atan2(q.y, q.x);
  double delta = std::remainder(a2 - a1, 2 * std::numbers::pi);
  if (std::abs(std::abs(delta) - std::numbers::pi) < 1e-9)
    return d + "L " + fmt(q.x) + " " + fmt(q.y);
  double radius = std::abs(std::tan(delta / 2));
  double mid = a1 + delta / 2, dist = 1 / std::cos(delta / 2);
  Pt c{dist * std::cos(mid), dist * std::sin(mid)};
  double cross = (p.x - c.x) * (q.y - c.y) - (p.y - c.y) * (q.x - c.x);
  return d + "A " + fmt(radius) + " " + fmt(radius) + " 0 0 " + (cross > 0 ? "1 " : "0 ") + fmt(q.x) + " " +
         fmt(q.y);
}

}  // namespace

std::string render_svg(const MarkedTessellation& t) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.05 -1.05 2.1 2.1\" width=\"600\" height=\"600\">\n";
  os << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
        "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#c0392b\"/>"
        "</marker></defs>\n";
  os << "<circle class=\"boundary\" cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#888\" stroke-width=\"0.004\"/>\n";
  const Edge d = t.doe.edge();
  for (const auto& e : t.edges()) {
    if (e == d) continue;
    os << "<path class=\"edge\" d=\"" << arc_path(e.a, e.b)
       << "\" fill=\"none\" stroke=\"#222\" stroke-width=\"0.006\"/>\n";
  }
  os << "<path class=\"edge\" id=\"doe\" d=\"" << arc_path(t.doe.tail, t.doe.head)
     << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"0.01\" marker-end=\"url(#arrow)\"/>\n";
  std::set<Fraction> verts;
  for (const auto& tr : t.support) verts.insert(tr.v.begin(), tr.v.end());
  for (const auto& v : verts) {
    Pt p = disk_point(v);
    os << "<circle class=\"vertex\" cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
       << "\" r=\"0.012\"><title>" << v.str() << "</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ptg
