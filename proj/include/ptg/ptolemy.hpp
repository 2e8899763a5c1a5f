#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ptg/kernel.hpp"

namespace ptg {

// unordered pair of distinct points of Q ∪ {∞}, stored with a < b
struct Edge {
  Fraction a, b;
  Edge() = default;
  Edge(const Fraction& x, const Fraction& y);
  bool has(const Fraction& x) const { return a == x || b == x; }
  const Fraction& other(const Fraction& x) const { return a == x ? b : a; }
  std::string str() const;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Triangle {
  std::array<Fraction, 3> v;  // increasing
  Triangle(const Fraction& x, const Fraction& y, const Fraction& z);
  bool has(const Fraction& x) const { return v[0] == x || v[1] == x || v[2] == x; }
  bool has(const Edge& e) const { return has(e.a) && has(e.b); }
  std::array<Edge, 3> edges() const { return {Edge(v[0], v[1]), Edge(v[1], v[2]), Edge(v[0], v[2])}; }
  const Fraction& apex(const Edge& e) const;  // vertex off e
  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

struct OrientedEdge {
  Fraction tail, head;
  Edge edge() const { return Edge(tail, head); }
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
  friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
};

// (a, b, c) are met in this order going counterclockwise around the disk,
// equivalently increasing along the real line with ∞ at the end, cyclically
bool ccw(const Fraction& a, const Fraction& b, const Fraction& c);

// the two Farey neighbours of a unimodular edge: mediant and co-mediant
std::array<Fraction, 2> farey_apexes(const Edge& e);

// Finite triangulated support; outside it the tessellation is Farey's.
struct MarkedTessellation {
  std::set<Triangle> support;
  OrientedEdge doe;

  std::vector<Edge> edges() const;
  std::vector<Edge> interior_edges() const;
  std::vector<Edge> boundary_edges() const;
  std::vector<Triangle> triangles_on(const Edge& e) const;
  friend bool operator==(const MarkedTessellation&, const MarkedTessellation&) = default;
  friend auto operator<=>(const MarkedTessellation&, const MarkedTessellation&) = default;
};

MarkedTessellation base_tessellation();
bool is_valid(const MarkedTessellation& t);

// both triangles on e present in the support, materializing Farey triangles
// from the fringe when needed
MarkedTessellation with_edge_interior(const MarkedTessellation& t, const Edge& e);
bool has_edge(const MarkedTessellation& t, const Edge& e);

MarkedTessellation flip(const MarkedTessellation& t, const Edge& e);
MarkedTessellation move_A(const MarkedTessellation& t);
MarkedTessellation move_B(const MarkedTessellation& t);

// the edge Q(q): opposite the vertex labelled q, or the doe for q = 0
Edge char_map(const MarkedTessellation& t, const Fraction& q, int depth_cap = 100000);
MarkedTessellation act_flip_label(const MarkedTessellation& t, const Fraction& q);

// words over A = 1, B = 2; text like "B A B^-1 A^3"; rightmost letter acts first
FreeWord parse_move_word(std::string_view text);
std::string format_move_word(const FreeWord& w);
MarkedTessellation act_word(const MarkedTessellation& t, const FreeWord& w);
MarkedTessellation act_word(const MarkedTessellation& t, std::string_view w);

MarkedTessellation canonicalize(const MarkedTessellation& t);
bool tess_equal(const MarkedTessellation& a, const MarkedTessellation& b);

using EdgeLabelState = std::map<Edge, int>;

struct LabelledTessellation {
  MarkedTessellation tess;
  EdgeLabelState labels;
  int next_label = 1;
  // label each edge received on first appearance
  EdgeLabelState birth;
};

// labels 1..m on the support edges in sorted order
LabelledTessellation label_edges(const MarkedTessellation& t);
LabelledTessellation labelled_flip(const LabelledTessellation& lt, const Edge& e);
LabelledTessellation labelled_act(const LabelledTessellation& lt, const FreeWord& w);
// flips the edge currently carrying the label
LabelledTessellation labelled_flip_label(const LabelledTessellation& lt, int label);
// permutation p with p(initial label) = final label, for a word fixing t
Permutation stabilizer_permutation(const MarkedTessellation& t, const FreeWord& w);
Permutation label_permutation(const LabelledTessellation& start, const LabelledTessellation& end);

struct CayleyBall {
  std::vector<std::size_t> sphere_sizes;
  std::vector<MarkedTessellation> vertices;  // BFS order
  std::vector<std::array<long, 4>> adjacency;  // images under A, A^3, B, B^2; -1 outside the ball
};
CayleyBall cayley_ball(int r);

std::string render_svg(const MarkedTessellation& t);

}  // namespace ptg
