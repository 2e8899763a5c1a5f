#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "ptg/braids.hpp"
#include "ptg/error.hpp"
#include "ptg/io.hpp"
#include "ptg/presentations.hpp"
#include "ptg/ptolemy.hpp"
#include "ptg/thompson.hpp"
#include "quant_suites.hpp"

using namespace ptg;
using nlohmann::json;

namespace {

bool as_json = false;
std::uint64_t seed = 20240917;

// 0 ok, 1 check failed
int report(bool ok, const std::string& text, const json& j) {
  if (as_json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text << "\n";
  return ok ? 0 : 1;
}

json element_value(const VSymbol& s) { return json::parse(element_json(s)); }
json element_value(const BVSymbol& s) { return json::parse(element_json(s)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

MarkedTessellation start_tessellation(const std::string& from) {
  return from.empty() ? base_tessellation() : parse_tessellation_json(read_file(from));
}

std::string tess_text(const MarkedTessellation& t) {
  std::string out = "doe " + t.doe.tail.str() + " -> " + t.doe.head.str();
  for (const auto& tr : t.support) out += "\n" + tr.v[0].str() + " " + tr.v[1].str() + " " + tr.v[2].str();
  return out;
}

Edge parse_edge(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::SyntaxError, "edge must read \"p,q\" at position 0");
  return Edge(Fraction::parse(s.substr(0, comma)), Fraction::parse(s.substr(comma + 1)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thompson groups, cosimplicial symbols, Ptolemy groupoid and quantum coordinates"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", as_json, "emit JSON reports");
  app.add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
  std::function<int()> action;

  // ---- el
  auto* el = app.add_subcommand("el", "elements of F, T, V as tree-pair symbols")->require_subcommand(1);
  static std::vector<std::string> el_compose, el_equal, bv_compose, bv_equal;
  static std::string el_reduce, el_eval, el_rot, el_order, bv_project;
  static std::string at;
  static int cap = 64;
  el->add_subcommand("compose", "product of symbols, left to right")->callback([&] {
    action = [] {
      VSymbol x = parse_element(el_compose.at(0));
      for (std::size_t k = 1; k < el_compose.size(); ++k) x = symbol_multiply(x, parse_element(el_compose[k]));
      return report(true, format_element(x), element_value(x));
    };
  })->add_option("elements", el_compose)->required()->expected(1, -1)->delimiter('\0');
  el->add_subcommand("reduce", "reduced representative")->callback([&] {
    action = [] {
      VSymbol x = symbol_reduce(parse_element(el_reduce));
      return report(true, format_element(x), element_value(x));
    };
  })->add_option("element", el_reduce)->required();
  {
    auto* ev = el->add_subcommand("eval", "piecewise-linear map, or its value at a point");
    ev->add_option("element", el_eval)->required();
    ev->add_option("--at", at, "point of [0,1)");
    ev->callback([&] {
      action = [] {
        PLMap m = to_plmap(parse_element(el_eval));
        if (!at.empty()) {
          Fraction y = eval(m, Fraction::parse(at));
          return report(true, y.str(), json{{"x", at}, {"y", y.str()}});
        }
        json rows = json::array();
        for (const auto& p : m.pieces)
          rows.push_back({{"start", p.start.str()}, {"end", p.end.str()}, {"slope_exp", p.slope_exp},
                          {"intercept", p.intercept.str()}});
        return report(true, m.str(), json{{"mode", m.str().substr(0, m.str().find('\n'))}, {"pieces", rows}});
      };
    });
  }
  el->add_subcommand("rot", "rotation number of an element of T")->callback([&] {
    action = [] {
      Fraction r = rotation_number(parse_element(el_rot));
      return report(true, r.str(), json{{"rotation", r.str()}});
    };
  })->add_option("element", el_rot)->required();
  {
    auto* ord = el->add_subcommand("order", "order, or infinite beyond --cap");
    ord->add_option("element", el_order)->required();
    ord->add_option("--cap", cap)->capture_default_str();
    ord->callback([&] {
      action = [] {
        auto o = element_order(parse_element(el_order), cap);
        return report(true, o ? std::to_string(*o) : "infinite", json{{"order", o ? json(*o) : json(nullptr)}});
      };
    });
  }
  el->add_subcommand("equal", "equality of two symbols")->callback([&] {
    action = [] {
      bool eq = symbol_equal(parse_element(el_equal.at(0)), parse_element(el_equal.at(1)));
      return report(eq, eq ? "true" : "false", json{{"equal", eq}});
    };
  })->add_option("elements", el_equal)->required()->expected(2)->delimiter('\0');

  // ---- braid
  auto* br = app.add_subcommand("braid", "braid words")->require_subcommand(1);
  static std::map<std::string, std::vector<std::string>> words;
  static int strands = 0, position = 0;
  static bool at_one = false;
  static std::string active;
  auto braid_args = [&](CLI::App* c, int count) {
    c->add_option("words", words[c->get_name()])->required()->expected(count)->delimiter('\0');
    c->add_option("-n,--strands", strands, "number of strands")->required()->check(CLI::PositiveNumber);
    c->preparse_callback([c](std::size_t) { active = c->get_name(); });
  };
  auto word = [](int k) { return BraidWord::parse(words[active].at(k), strands); };
  {
    auto* c = br->add_subcommand("equal", "word problem via the Artin action");
    braid_args(c, 2);
    c->callback([&] {
      action = [&] {
        bool eq = braid_equal(word(0), word(1));
        return report(eq, eq ? "true" : "false", json{{"equal", eq}});
      };
    });
  }
  {
    auto* c = br->add_subcommand("burau", "unreduced Burau matrix");
    braid_args(c, 1);
    c->add_flag("--at-one", at_one, "evaluate at t = 1");
    c->callback([&] {
      action = [&] {
        if (at_one) {
          Eigen::MatrixXi m = burau_at_one(word(0));
          json rows = json::array();
          std::ostringstream os;
          for (int r = 0; r < m.rows(); ++r) {
            std::vector<int> row(m.cols());
            for (int c2 = 0; c2 < m.cols(); ++c2) row[c2] = m(r, c2);
            rows.push_back(row);
          }
          os << m;
          return report(true, os.str(), rows);
        }
        LaurentMatrix m = burau(word(0));
        std::string text;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
          for (Eigen::Index c2 = 0; c2 < m.cols(); ++c2) text += (c2 ? " | " : "") + m(r, c2).str();
          if (r + 1 < m.rows()) text += "\n";
        }
        return report(true, text, json::parse(matrix_json(m)));
      };
    });
  }
  {
    auto* c = br->add_subcommand("double", "double strand i");
    braid_args(c, 1);
    c->add_option("--at", position, "strand to double")->required();
    c->callback([&] {
      action = [&] {
        BraidWord d = double_braid(word(0), position);
        return report(true, d.str(), json{{"braid", d.str()}, {"strands", d.strands()}});
      };
    });
  }
  {
    auto* c = br->add_subcommand("perm", "underlying permutation");
    braid_args(c, 1);
    c->callback([&] {
      action = [&] {
        Permutation p = perm_of(word(0));
        return report(true, p.str(), json{{"perm", p.images()}});
      };
    });
  }

  // ---- bv
  auto* bv = app.add_subcommand("bv", "braided Thompson symbols")->require_subcommand(1);
  bv->add_subcommand("compose", "product, left to right")->callback([&] {
    action = [] {
      BVSymbol x = parse_bv_element(bv_compose.at(0));
      for (std::size_t k = 1; k < bv_compose.size(); ++k) x = symbol_multiply(x, parse_bv_element(bv_compose[k]));
      return report(true, format_element(x), element_value(x));
    };
  })->add_option("elements", bv_compose)->required()->expected(1, -1)->delimiter('\0');
  bv->add_subcommand("equal", "equality of two symbols")->callback([&] {
    action = [] {
      bool eq = symbol_equal(parse_bv_element(bv_equal.at(0)), parse_bv_element(bv_equal.at(1)));
      return report(eq, eq ? "true" : "false", json{{"equal", eq}});
    };
  })->add_option("elements", bv_equal)->required()->expected(2)->delimiter('\0');
  bv->add_subcommand("project", "image in V")->callback([&] {
    action = [] {
      VSymbol v = project_to_V(parse_bv_element(bv_project));
      return report(true, format_element(v), element_value(v));
    };
  })->add_option("element", bv_project)->required();

  // ---- tess
  auto* ts = app.add_subcommand("tess", "marked Farey-type tessellations")->require_subcommand(1);
  static std::string move_word, from, edge, label, out;
  static int radius = 2;
  auto tess_args = [&](CLI::App* c) {
    c->add_option("--word", move_word, "word in A, B, a = A^-1, b = B^-1; rightmost acts first");
    c->add_option("--from", from, "start tessellation as a JSON file (default: base)");
  };
  auto emit_tess = [](const MarkedTessellation& t) {
    auto c = canonicalize(t);
    return report(true, tess_text(c), json::parse(tessellation_json(c)));
  };
  {
    auto* c = app.get_subcommand("tess")->add_subcommand("act", "act by a word of moves");
    tess_args(c);
    c->callback([&] { action = [&] { return emit_tess(act_word(start_tessellation(from), move_word)); }; });
  }
  {
    auto* c = ts->add_subcommand("flip", "flip an edge, given directly or by its rational label");
    tess_args(c);
    auto* e = c->add_option("--edge", edge, "edge as \"p,q\"");
    c->add_option("--label", label, "label q of the characteristic map")->excludes(e);
    c->callback([&] {
      action = [&] {
        auto t = act_word(start_tessellation(from), move_word);
        if (!edge.empty()) return emit_tess(flip(t, parse_edge(edge)));
        if (!label.empty()) return emit_tess(act_flip_label(t, Fraction::parse(label)));
        throw CLI::ValidationError("one of --edge, --label is required");
      };
    });
  }
  {
    auto* c = ts->add_subcommand("ball", "Cayley ball around the base tessellation");
    c->add_option("--radius", radius)->capture_default_str()->check(CLI::NonNegativeNumber);
    c->callback([&] {
      action = [&] {
        auto b = cayley_ball(radius);
        std::string text;
        for (std::size_t r = 0; r < b.sphere_sizes.size(); ++r)
          text += (r ? "\n" : "") + std::string("radius ") + std::to_string(r) + ": " + std::to_string(b.sphere_sizes[r]);
        return report(true, text,
                      json{{"radius", radius}, {"sphere_sizes", b.sphere_sizes}, {"vertices", b.vertices.size()},
                           {"adjacency", b.adjacency}});
      };
    });
  }
  {
    auto* c = ts->add_subcommand("render", "SVG of the disk picture");
    tess_args(c);
    c->add_option("--out", out, "output file (default: stdout)");
    c->callback([&] {
      action = [&] {
        std::string svg = render_svg(act_word(start_tessellation(from), move_word));
        if (out.empty()) {
          std::cout << svg;
        } else {
          std::ofstream(out) << svg;
          report(true, "wrote " + out, json{{"svg", out}});
        }
        return 0;
      };
    });
  }
  {
    auto* c = ts->add_subcommand("label", "label permutation of a word fixing the tessellation");
    tess_args(c);
    c->callback([&] {
      action = [&] {
        auto p = stabilizer_permutation(start_tessellation(from), parse_move_word(move_word));
        std::vector<int> moved;
        for (int i = 1; i <= p.size(); ++i)
          if (p(i) != i) moved.push_back(i);
        std::string text = p.str();
        return report(true, text, json{{"perm", p.images()}, {"moved", moved}});
      };
    });
  }

  // ---- quant
  auto* qt = app.add_subcommand("quant", "classical and quantum coordinate checks")->require_subcommand(1);
  static std::string suite, csv;
  static int samples = 50;
  {
    auto* c = qt->add_subcommand("check", "run a check suite");
    c->add_option("--suite", suite)->required()->check(CLI::IsMember(quant_suite_names()));
    c->add_option("--samples", samples, "random cases for the sampled suites")->capture_default_str();
    c->add_option("--csv", csv, "write residuals as CSV");
    c->callback([&] {
      action = [&] {
        auto rows = run_quant_suite(suite, seed, samples);
        bool ok = true;
        std::ostringstream text;
        json j = json::array();
        for (const auto& r : rows) {
          ok = ok && r.pass();
          text << (r.pass() ? "pass  " : "FAIL  ") << r.label << "  residual " << r.residual << " (tol " << r.tolerance
               << ")\n";
          j.push_back({{"case", r.label}, {"residual", r.residual}, {"tolerance", r.tolerance}, {"pass", r.pass()}});
        }
        text << (ok ? "all " : "failures among ") << rows.size() << " checks";
        if (!csv.empty()) {
          std::ofstream f(csv);
          f << "suite,case,residual,tolerance,pass\n";
          for (const auto& r : rows)
            f << r.suite << ",\"" << r.label << "\"," << r.residual << "," << r.tolerance << "," << (r.pass() ? 1 : 0)
              << "\n";
        }
        return report(ok, text.str(), json{{"suite", suite}, {"pass", ok}, {"results", j}});
      };
    });
  }

  // ---- presentation
  auto* pr = app.add_subcommand("presentation", "relator checks for group presentations")->require_subcommand(1);
  static std::string pname, target = "symbols";
  static int hn = 3;
  {
    auto* c = pr->add_subcommand("check", "evaluate every relator in a target model");
    c->add_option("name", pname, "T_LS, Tstar_ab, T_npqrs(n,p,q,r,s), BraidedHoughton")->required();
    c->add_option("--target", target)->capture_default_str()->check(CLI::IsMember({"symbols", "tessellation", "houghton"}));
    c->add_option("--n", hn, "rays of the Houghton model")->capture_default_str();
    c->callback([&] {
      action = [&] {
        std::string name = pname;
        if (name == "BraidedHoughton") name += "_" + std::to_string(hn);
        Presentation p = builtin_presentation(name);
        RelatorReport rep;
        if (name.starts_with("BraidedHoughton")) {
          if (target != "houghton" && target != "symbols") throw CLI::ValidationError("BraidedHoughton checks in --target houghton");
          int n = std::stoi(name.substr(name.find('_') + 1));
          rep = check_relators(p, houghton_images(n), HoughtonOracle{n});
        } else if (target == "houghton") {
          throw CLI::ValidationError("--target houghton needs BraidedHoughton");
        } else if (target == "symbols") {
          std::map<std::string, VSymbol> img{{"a", generators_T().alpha}, {"b", generators_T().beta}, {"z", VSymbol()}};
          rep = check_relators(p, img, SymbolOracle{});
        } else {
          std::map<std::string, FreeWord> img{{"a", parse_move_word("A")}, {"b", parse_move_word("B")}, {"z", FreeWord()}};
          rep = check_relators(p, img, TessellationOracle{});
        }
        std::string text = rep.presentation + "\n";
        json rows = json::array();
        for (const auto& r : rep.results) {
          text += (r.holds ? "pass  " : "FAIL  ") + r.relator + "\n";
          rows.push_back({{"relator", r.relator}, {"holds", r.holds}});
        }
        text += rep.pass() ? "all relators hold" : "some relators fail";
        return report(rep.pass(), text, json{{"presentation", rep.presentation}, {"pass", rep.pass()}, {"results", rows}});
      };
    });
  }
  pr->add_subcommand("list", "builtin presentations")->callback([&] {
    action = [] {
      std::string text;
      for (const auto& n : builtin_presentation_names()) text += n + "\n";
      text.pop_back();
      return report(true, text, json(builtin_presentation_names()));
    };
  });

  // CLI11 reads a bracketed argument as a list; a leading space keeps symbols whole
  std::vector<std::string> args;
  for (int k = argc - 1; k >= 1; --k) {
    std::string a = argv[k];
    if (a.size() > 1 && a.front() == '[' && a.back() == ']') a.insert(0, " ");
    args.push_back(a);
  }
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::SyntaxError:
      case ErrorKind::DegreeMismatch:
      case ErrorKind::MissingImage:
      case ErrorKind::IndexOutOfRange:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
