// thompson: command-line front end for the group and link library.
//
// Exit codes: 0 success, 1 domain errors (parse, arity, range, budget, usage),
// 2 internal inconsistency.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "thompson/thompson.hpp"

namespace {

using namespace thompson;

struct Input {
  std::string family = "f";
  std::string diagram;
  std::string file;
  unsigned threads = 1;
};

Arity family_arity(const std::string& family) {
  if (family == "f") return kBinary;
  if (family == "f3") return kTernary;
  if (family == "f4") return kQuaternary;
  throw ParseError("unknown family '" + family + "' (expected f, f3 or f4)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RangeError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw RangeError("cannot write '" + path + "'");
  out << text;
}

/// The element named by a positional word, --diagram or --file (in that order of precedence).
TreeDiagram element(const Input& in, const std::string& word) {
  const Arity arity = family_arity(in.family);
  if (!in.diagram.empty()) return parse_diagram(in.diagram, arity);
  if (!in.file.empty()) return word_to_diagram(parse_word(read_file(in.file), arity));
  return word_to_diagram(parse_word(word, arity));
}

std::string cycle_text(const std::vector<int>& cycle) {
  std::string out;
  for (int v : cycle) out += (out.empty() ? "v" : " v") + std::to_string(v);
  return out;
}

std::string negative_part(const NormalForm& nf) {
  std::vector<Letter> letters;
  for (std::size_t i = nf.negative.size(); i-- > 0;) {
    if (nf.negative[i] != 0) letters.push_back({'x', static_cast<int>(i), -nf.negative[i]});
  }
  return to_string(GeneratorWord(kBinary, std::move(letters)));
}

void member(const TreeDiagram& d, const std::string& set) {
  if (set == "oriented") {
    const auto result = oriented_membership(d);
    std::cout << (result.bipartite() ? "yes\n" : "no\nodd cycle: " + cycle_text(result.odd_cycle) + "\n");
  } else if (set == "3color") {
    const auto result = strip_three_color(d);
    if (result.colorable()) {
      std::cout << "yes\n";
    } else {
      std::cout << "no\ncolor conflict at region " << result.conflict_gap << " (top tree forces "
                << result.conflict_colors[0] << ", bottom tree forces " << result.conflict_colors[1] << ")\n";
    }
  } else if (set == "positive") {
    if (is_positive(d)) {
      std::cout << "yes\n";
    } else if (d.arity() == kBinary) {
      std::cout << "no\nnegative part: " << negative_part(normal_form(d)) << "\n";
    } else {
      std::cout << "no\nreduced bottom tree: " << to_string(reduce(d).bottom()) << "\n";
    }
  } else if (set.starts_with("rect:")) {
    const auto second = set.find(':', 5);
    if (second == std::string::npos) throw ParseError("expected rect:a:b");
    const int a = detail::parse_int(std::string_view(set).substr(5, second - 5), "rectangular parameter");
    const int b = detail::parse_int(std::string_view(set).substr(second + 1), "rectangular parameter");
    const auto pi = abelianization(d);
    std::cout << (in_rectangular(d, a, b) ? "yes\n"
                                          : "no\nabelianization: (" + std::to_string(pi.at_zero) + "," +
                                                std::to_string(pi.at_one) + ")\n");
  } else {
    throw ParseError("unknown set '" + set + "' (expected oriented, 3color, positive or rect:a:b)");
  }
}

/// The oriented link of a member of the oriented subgroup.
LinkDiagram oriented_link(const TreeDiagram& d) {
  const auto colouring = oriented_membership(d);
  if (!colouring.bipartite()) {
    throw RangeError("element is not in the oriented subgroup (odd cycle " + cycle_text(colouring.odd_cycle) + ")");
  }
  return orient_link(build_link(d), *colouring.colors);
}

/// Orientation used for writhe and Jones: the region orientation for oriented-subgroup
/// members, otherwise any orientation of a knot.
LinkDiagram link_for_jones(const TreeDiagram& d) {
  if (d.arity() != kQuaternary && is_oriented_member(d)) return oriented_link(d);
  const LinkDiagram l = build_link(d);
  if (components(l) != 1) throw RangeError("link with several components and no canonical orientation");
  return orient_by_tracing(l);
}

int run(int argc, char** argv) {
  CLI::App app{"Thompson groups, tree diagrams and the links they produce"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  Input in;
  app.add_option("--family", in.family, "group: f, f3 or f4")->check(CLI::IsMember({"f", "f3", "f4"}));
  app.add_option("--diagram", in.diagram, "element as a tree diagram \"top|bottom\"");
  app.add_option("--file", in.file, "read the element's word from a file");
  app.add_option("--threads", in.threads, "worker threads for the state sum")->check(CLI::PositiveNumber);
  bool version = false;
  app.add_flag("--version", version, "print the version");

  std::string word;
  std::string word2;
  std::string point;
  std::string set;

  auto* nf = app.add_subcommand("nf", "normal form of an element of F");
  nf->add_option("word", word);

  auto* mul = app.add_subcommand("mul", "reduced diagram of a product");
  mul->add_option("word", word)->required();
  mul->add_option("word2", word2)->required();

  auto* inv = app.add_subcommand("inv", "reduced diagram of an inverse");
  inv->add_option("word", word);

  auto* mem = app.add_subcommand("member", "subgroup membership with a witness");
  mem->add_option("word", word);
  mem->add_option("--in", set, "oriented, 3color, positive or rect:a:b")->required();

  auto* act = app.add_subcommand("act", "image of a point of (0,1)");
  act->add_option("word", word)->required();
  act->add_option("point", point, "0.<digits> or a/2^k, a/3^k")->required();

  std::string dot_path;
  auto* tait = app.add_subcommand("tait", "Tait graph in DOT form");
  tait->add_option("word", word);
  tait->add_option("--dot", dot_path, "output file (default stdout)");

  std::string pd_path;
  std::string svg_path;
  bool oriented = false;
  auto* link = app.add_subcommand("link", "link diagram as PD code and/or SVG");
  link->add_option("word", word);
  link->add_option("--pd", pd_path, "PD output file, - for stdout");
  link->add_option("--svg", svg_path, "SVG output file, - for stdout");
  link->add_flag("--oriented", oriented, "orient by region signs (oriented subgroup only)");

  auto* invariant = app.add_subcommand("invariant", "link invariants");
  invariant->add_option("word", word);
  auto* which = invariant->add_option_group("which")->require_option(1);
  bool want_components = false;
  bool want_bracket = false;
  bool want_jones = false;
  bool want_writhe = false;
  which->add_flag("--components", want_components);
  which->add_flag("--bracket", want_bracket);
  which->add_flag("--jones", want_jones);
  which->add_flag("--writhe", want_writhe);

  auto* map = app.add_subcommand("map", "image under a homomorphism");
  map->add_option("word", word);
  auto* maps = map->add_option_group("map")->require_option(1);
  bool m_iota = false;
  bool m_ren = false;
  bool m_phi = false;
  bool m_flip = false;
  bool m_left = false;
  bool m_right = false;
  maps->add_flag("--iota", m_iota);
  maps->add_flag("--ren", m_ren);
  maps->add_flag("--phi", m_phi);
  maps->add_flag("--flip", m_flip);
  maps->add_flag("--shift-l", m_left);
  maps->add_flag("--shift-r", m_right);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (version) {
    std::cout << kVersion << "\n";
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return 1;
  }

  if (*nf) {
    std::cout << to_string(normal_form(element(in, word))) << "\n";
  } else if (*mul) {
    const Arity arity = family_arity(in.family);
    std::cout << to_string(multiply(word_to_diagram(parse_word(word, arity)), word_to_diagram(parse_word(word2, arity)))) << "\n";
  } else if (*inv) {
    std::cout << to_string(invert(element(in, word))) << "\n";
  } else if (*mem) {
    member(element(in, word), set);
  } else if (*act) {
    const TreeDiagram d = element(in, word);
    std::cout << to_string(evaluate(d, parse_point(point, d.arity().value()))) << "\n";
  } else if (*tait) {
    const TreeDiagram d = element(in, word);
    const TaitGraph g = d.arity() == kBinary ? tait_graph_binary(d) : tait_graph_ternary(d);
    const auto colouring = two_color(g);
    write_output(dot_path.empty() ? "-" : dot_path, to_dot(g, colouring.bipartite() ? &*colouring.colors : nullptr));
  } else if (*link) {
    const TreeDiagram d = element(in, word);
    const LinkDiagram l = oriented ? oriented_link(d) : build_link(d);
    if (svg_path.empty() || !pd_path.empty()) write_output(pd_path.empty() ? "-" : pd_path, to_string(canonical_pd(l)));
    if (!svg_path.empty()) write_output(svg_path, render_svg(l));
  } else if (*invariant) {
    const TreeDiagram d = element(in, word);
    if (want_components) {
      std::cout << components(build_link(d)) << "\n";
    } else if (want_bracket) {
      const LinkDiagram l = build_link(d);
      const LaurentPoly states = kauffman_bracket_states(l, in.threads);
      if (l.crossing_count() <= 14 && states != kauffman_bracket_skein(l)) {
        throw InternalError("bracket algorithms disagree");
      }
      std::cout << to_string(states) << "\n";
    } else if (want_jones) {
      std::cout << to_string(jones_polynomial(link_for_jones(d), in.threads)) << "\n";
    } else {
      std::cout << writhe(link_for_jones(d)) << "\n";
    }
  } else if (*map) {
    const TreeDiagram d = element(in, word);
    const TreeDiagram image = m_iota ? iota(d)
                              : m_ren ? ren_embed(d)
                              : m_phi ? phi(d)
                              : m_flip ? flip(d)
                              : m_left ? shift_left(d)
                                       : shift_right(d);
    std::cout << to_string(image) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const thompson::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const thompson::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
