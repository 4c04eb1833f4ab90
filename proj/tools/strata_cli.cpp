#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "strata/classify.hpp"
#include "strata/diagram.hpp"
#include "strata/errors.hpp"
#include "strata/rauzy.hpp"
#include "strata/surface.hpp"

using namespace strata;

namespace {

ClassOptions options_from_env() {
  ClassOptions opt;
  if (const char* cap = std::getenv("STRATA_MEMBER_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(cap, &end, 10);
    if (end && *end == '\0' && v > 0) opt.member_cap = static_cast<std::size_t>(v);
  }
  return opt;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(errc::parse_error, "cannot write " + out_path);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

int exit_code(const Error& e) {
  switch (e.code()) {
    case errc::parse_error:
    case errc::not_a_bijection:
    case errc::empty_input:
    case errc::bad_parameters:
      return 1;
    case errc::member_cap_exceeded:
      return 3;
    default:
      return 2;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"connected components of strata of abelian differentials"};
  app.require_subcommand(1);

  std::string perm_text, out_path, in_path, kind = "H", format = "json", contains_text;
  int letters = 0, genus = 0, vertex = 0, sector_a = 0, sector_b = 0, pair_id = 0, steps = 0,
      edge_id = 0;
  bool extended = false, use_surface = false;

  auto* c_classify = app.add_subcommand("classify", "component label of a permutation");
  c_classify->add_option("--perm", perm_text, "images, e.g. \"4 3 2 1\"")->required();

  auto* c_census = app.add_subcommand("census", "extended class census over all permutations");
  c_census->add_option("--letters", letters, "alphabet size")->required()->check(CLI::Range(2, 12));
  c_census->add_option("--out", out_path, "write the table here instead of stdout");

  auto* c_class = app.add_subcommand("class", "enumerate one induction class");
  c_class->add_option("--perm", perm_text)->required();
  c_class->add_flag("--extended", extended, "also close under the reversing conjugation");
  c_class->add_option("--out", out_path);
  c_class->add_option("--contains", contains_text, "test membership of another permutation");

  auto* c_spin = app.add_subcommand("spin", "parity of the spin structure");
  c_spin->add_option("--perm", perm_text)->required();
  c_spin->add_flag("--surface", use_surface, "compute through the suspension instead");

  auto* c_suspend = app.add_subcommand("suspend", "square tiled suspension as JSON");
  c_suspend->add_option("--perm", perm_text)->required();
  c_suspend->add_option("--out", out_path);

  auto* c_diagram = app.add_subcommand("diagram", "separatrix diagram toolbox");
  c_diagram->require_subcommand(1);
  auto* d_make = c_diagram->add_subcommand("make", "one of the canonical families");
  d_make->add_option("--type", kind, "H, O or E")->required()->check(CLI::IsMember({"H", "O", "E"}));
  d_make->add_option("--genus", genus)->required();
  d_make->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  d_make->add_option("--out", out_path);
  auto* d_realize = c_diagram->add_subcommand("realize", "positive length witness or certificate");
  d_realize->add_option("--in", in_path)->required();
  auto* d_bubble = c_diagram->add_subcommand("bubble", "attach a handle by a petal pair");
  d_bubble->add_option("--in", in_path)->required();
  d_bubble->add_option("--vertex", vertex)->required();
  d_bubble->add_option("--sector-a", sector_a)->required();
  d_bubble->add_option("--sector-b", sector_b)->required();
  auto* d_erase = c_diagram->add_subcommand("erase", "remove a petal pair handle");
  d_erase->add_option("--in", in_path)->required();
  d_erase->add_option("--pair", pair_id)->required();
  auto* d_rotate = c_diagram->add_subcommand("rotate", "move a petal pair around its vertex");
  d_rotate->add_option("--in", in_path)->required();
  d_rotate->add_option("--pair", pair_id)->required();
  d_rotate->add_option("--steps", steps)->required();
  auto* d_contract = c_diagram->add_subcommand("contract", "shrink a saddle connection");
  d_contract->add_option("--in", in_path)->required();
  d_contract->add_option("--edge", edge_id)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1; // --help exits cleanly, everything else is usage
  }

  try {
    const ClassOptions opt = options_from_env();
    if (*c_classify) {
      emit("", classification_json(parse_permutation(perm_text)));
    } else if (*c_census) {
      const auto rows = census(letters, opt);
      const std::string table = census_tsv(rows);
      if (out_path.empty()) {
        emit("", table);
      } else {
        emit(out_path, table);
        int classes = 0;
        for (const auto& row : rows) classes += row.class_count;
        std::cout << letters << " letters: " << rows.size() << " strata, " << classes
                  << " classes\n";
      }
    } else if (*c_class) {
      const Permutation pi = parse_permutation(perm_text);
      const PermClass cls = extended ? extended_rauzy_class(pi, opt) : rauzy_class(pi, opt);
      if (!contains_text.empty()) {
        std::cout << (class_contains(cls, parse_permutation(contains_text)) ? "member\n"
                                                                            : "not a member\n");
      } else {
        std::ostringstream os;
        save_class(os, cls, suspension_profile(pi));
        emit(out_path, os.str());
      }
    } else if (*c_spin) {
      const Permutation pi = parse_permutation(perm_text);
      const int parity = use_surface ? spin_parity_surface(suspend(pi)) : spin_parity_perm(pi);
      std::cout << parity << "\n";
    } else if (*c_suspend) {
      emit(out_path, origami_json(suspend(parse_permutation(perm_text))));
    } else if (*c_diagram) {
      if (*d_make) {
        const CanonicalKind k = kind == "H"   ? CanonicalKind::H
                                : kind == "O" ? CanonicalKind::O
                                              : CanonicalKind::E;
        const SeparatrixDiagram d = make_canonical(k, genus);
        emit(out_path, format == "dot" ? diagram_dot(d) : diagram_json(d));
      } else if (*d_realize) {
        const auto r = realizability(diagram_from_json(slurp(in_path)));
        std::ostringstream os;
        os << (r.realizable ? "realizable" : "not realizable");
        const auto& values = r.realizable ? r.lengths : r.certificate;
        for (const auto& v : values) os << ' ' << v;
        emit("", os.str());
      } else {
        const SeparatrixDiagram d = diagram_from_json(slurp(in_path));
        SeparatrixDiagram out;
        if (*d_bubble) {
          out = bubble_handle(d, vertex, sector_a, sector_b);
        } else if (*d_erase) {
          const auto erased = erase_handle(d, pair_id);
          std::cerr << "sector angle " << erased.angle << "\n";
          out = erased.diagram;
        } else if (*d_rotate) {
          out = rotate_handle(d, pair_id, steps);
        } else {
          out = contract_saddle_connection(d, edge_id);
        }
        emit("", diagram_json(out));
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  }
  return 0;
}
