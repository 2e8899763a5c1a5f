#include "ptg/io.hpp"

#include <json.hpp>

#include "ptg/error.hpp"
#include "ptg/thompson.hpp"

namespace ptg {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void syntax(std::size_t pos, const std::string& msg) {
  throw Error(ErrorKind::SyntaxError, msg + " at position " + std::to_string(pos));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    syntax(e.byte, "malformed JSON");
  }
}

Tree parse_tree(std::string_view bits, std::size_t pos) {
  std::string b(trim(bits));
  if (!Tree::valid(b)) syntax(pos, "invalid tree \"" + b + "\"");
  return Tree(b);
}

struct Compact {
  std::string_view target, source, coeff;
  std::size_t target_pos, source_pos, coeff_pos;
};

Compact split_compact(std::string_view text) {
  std::string_view s = trim(text);
  std::size_t offset = static_cast<std::size_t>(s.data() - text.data());
  if (s.empty() || s.front() != '[') syntax(offset, "expected '['");
  if (s.back() != ']') syntax(offset + s.size(), "expected ']'");
  std::size_t b1 = s.find('|');
  if (b1 == std::string_view::npos) syntax(offset + s.size() - 1, "expected '|'");
  std::size_t b2 = s.find('|', b1 + 1);
  if (b2 == std::string_view::npos) syntax(offset + s.size() - 1, "expected a second '|'");
  return {s.substr(1, b1 - 1), s.substr(b1 + 1, b2 - b1 - 1), s.substr(b2 + 1, s.size() - b2 - 2), offset + 1,
          offset + b1 + 1, offset + b2 + 1};
}

Permutation parse_perm_at(std::string_view text, std::size_t pos) {
  try {
    return Permutation::parse(text);
  } catch (const Error& e) {
    syntax(pos, std::string("bad permutation: ") + e.what());
  }
}

BraidWord parse_braid_at(std::string_view text, int strands, std::size_t pos) {
  std::string_view w = trim(text);
  if (w.empty() || w == "1" || w == "e") return BraidWord(strands, {});
  FreeWord f;
  try {
    f = FreeWord::parse(w, 's');
  } catch (const Error& e) {
    syntax(pos, std::string("bad braid word: ") + e.what());
  }
  for (const Letter& l : f.letters())
    if (l.gen >= strands)
      throw Error(ErrorKind::DegreeMismatch, "generator s" + std::to_string(l.gen) + " on " + std::to_string(strands) +
                                                 " strands");
  return BraidWord(strands, f.letters());
}

}  // namespace

VSymbol parse_element(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "alpha") return generators_T().alpha;
  if (s == "beta") return generators_T().beta;
  if (s == "id") return VSymbol();
  if (!s.empty() && s.front() == '{') {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("target") || !j.contains("source") || !j.contains("perm"))
      syntax(0, "expected keys target, source, perm");
    try {
      Tree t = parse_tree(j["target"].get<std::string>(), 0), src = parse_tree(j["source"].get<std::string>(), 0);
      Permutation p(j["perm"].get<std::vector<int>>());
      return VSymbol(t, src, p);
    } catch (const json::exception& e) {
      syntax(0, e.what());
    }
  }
  Compact c = split_compact(text);
  return VSymbol(parse_tree(c.target, c.target_pos), parse_tree(c.source, c.source_pos),
                 parse_perm_at(c.coeff, c.coeff_pos));
}

BVSymbol parse_bv_element(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "id") return BVSymbol();
  if (!s.empty() && s.front() == '{') {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("target") || !j.contains("source") || !j.contains("braid"))
      syntax(0, "expected keys target, source, braid");
    try {
      Tree t = parse_tree(j["target"].get<std::string>(), 0), src = parse_tree(j["source"].get<std::string>(), 0);
      return BVSymbol(t, src, parse_braid_at(j["braid"].get<std::string>(), src.leaves(), 0));
    } catch (const json::exception& e) {
      syntax(0, e.what());
    }
  }
  Compact c = split_compact(text);
  Tree t = parse_tree(c.target, c.target_pos), src = parse_tree(c.source, c.source_pos);
  return BVSymbol(t, src, parse_braid_at(c.coeff, src.leaves(), c.coeff_pos));
}

std::string format_element(const VSymbol& s) {
  std::string p = s.g.str();
  return "[" + s.target.bits() + "|" + s.source.bits() + "|" + p.substr(1, p.size() - 2) + "]";
}

std::string format_element(const BVSymbol& s) {
  return "[" + s.target.bits() + "|" + s.source.bits() + "|" + s.g.str() + "]";
}

std::string element_json(const VSymbol& s) {
  return json{{"target", s.target.bits()}, {"source", s.source.bits()}, {"perm", s.g.images()}}.dump();
}

std::string element_json(const BVSymbol& s) {
  return json{{"target", s.target.bits()}, {"source", s.source.bits()}, {"braid", s.g.str()}}.dump();
}

std::string tessellation_json(const MarkedTessellation& t) {
  json tri = json::array();
  for (const auto& tr : t.support) tri.push_back({tr.v[0].str(), tr.v[1].str(), tr.v[2].str()});
  return json{{"triangles", tri}, {"doe", {t.doe.tail.str(), t.doe.head.str()}}}.dump();
}

MarkedTessellation parse_tessellation_json(std::string_view text) {
  json j = parse_json(text);
  MarkedTessellation t;
  try {
    for (const auto& tr : j.at("triangles")) {
      auto v = tr.get<std::vector<std::string>>();
      if (v.size() != 3) syntax(0, "a triangle needs three vertices");
      t.support.insert(Triangle(Fraction::parse(v[0]), Fraction::parse(v[1]), Fraction::parse(v[2])));
    }
    auto d = j.at("doe").get<std::vector<std::string>>();
    if (d.size() != 2) syntax(0, "doe needs two endpoints");
    t.doe = {Fraction::parse(d[0]), Fraction::parse(d[1])};
  } catch (const json::exception& e) {
    syntax(0, e.what());
  }
  if (!is_valid(t) || !has_edge(t, t.doe.edge())) throw Error(ErrorKind::EdgeNotPresent, "not a marked tessellation");
  return t;
}

std::string seed_json(const Seed& s) {
  json rows = json::array();
  for (int i = 0; i < s.size(); ++i) {
    std::vector<int> row(s.size());
    for (int j = 0; j < s.size(); ++j) row[j] = s.eps(i, j);
    rows.push_back(row);
  }
  return json{{"edges", s.edges}, {"eps", rows}}.dump();
}

Seed parse_seed_json(std::string_view text) {
  json j = parse_json(text);
  Seed s;
  try {
    s.edges = j.at("edges").get<std::vector<std::string>>();
    auto rows = j.at("eps").get<std::vector<std::vector<int>>>();
    const int n = static_cast<int>(s.edges.size());
    if (static_cast<int>(rows.size()) != n) throw Error(ErrorKind::DegreeMismatch, "eps must be square over edges");
    s.eps.resize(n, n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n) throw Error(ErrorKind::DegreeMismatch, "eps must be square over edges");
      for (int k = 0; k < n; ++k) s.eps(i, k) = rows[i][k];
    }
  } catch (const json::exception& e) {
    syntax(0, e.what());
  }
  return s;
}

}  // namespace ptg
