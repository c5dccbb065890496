// Command line interface for exact computations with BCFW cells of the
// nonnegative Grassmannian and the m=4 amplituhedron map. All randomness
// flows from one 64-bit seed through splitmix64, so identical invocations
// produce byte-identical output.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bcfw/ampl.hpp"
#include "bcfw/boundaries.hpp"
#include "bcfw/chords.hpp"
#include "bcfw/domino.hpp"
#include "bcfw/inverse.hpp"
#include "bcfw/prng.hpp"
#include "bcfw/separation.hpp"
#include "bcfw/verify.hpp"

namespace {

using nlohmann::json;

bcfw::ChordDiagram parse_diagram(const std::string& text) {
  if (!text.empty() && text.front() == '{') return bcfw::ChordDiagram::from_json(text);
  return bcfw::ChordDiagram::from_text(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json var_json(const bcfw::VarElement& v) {
  json j;
  j["name"] = v.str();
  j["chord"] = v.chord + 1;
  if (v.other >= 0) j["other"] = v.other + 1;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact BCFW cell and amplituhedron toolkit"};
  app.require_subcommand(1);

  int n = 6, k = 0;
  std::uint64_t seed = 0;
  int samples = 5, zs = 3, jobs = 1;
  std::string format = "json";

  // enumerate ----------------------------------------------------------
  auto* cmd_enumerate = app.add_subcommand("enumerate", "list all diagrams for (n, k)");
  cmd_enumerate->add_option("--n", n)->required();
  cmd_enumerate->add_option("--k", k)->required();
  cmd_enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  cmd_enumerate->callback([&]() {
    for (const auto& d : bcfw::enumerate_diagrams(n, k))
      std::cout << (format == "text" ? d.to_text() : d.to_json()) << "\n";
  });

  // convert ------------------------------------------------------------
  auto* cmd_convert = app.add_subcommand("convert", "map between the diagram encodings");
  std::string to, diagram_arg, walks_arg, input_file;
  cmd_convert->add_option("--to", to)->required()->check(
      CLI::IsMember({"perm", "walks", "oplus", "diagram"}));
  cmd_convert->add_option("--diagram", diagram_arg, "diagram as text or JSON");
  cmd_convert->add_option("--walks", walks_arg, "walk pair as JSON {\"n\",\"k\",\"A\",\"B\"}");
  cmd_convert->add_option("--in", input_file, "read the input from a file");
  cmd_convert->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  cmd_convert->callback([&]() {
    std::string input = diagram_arg.empty() ? walks_arg : diagram_arg;
    if (!input_file.empty()) input = read_file(input_file);
    if (to == "diagram") {
      json w = json::parse(input);
      bcfw::LatticeWalkPair pair{w.at("n").get<int>(), w.at("k").get<int>(),
                                 w.at("A").get<std::vector<int>>(),
                                 w.at("B").get<std::vector<int>>()};
      auto d = bcfw::walks_to_diagram(pair);
      std::cout << (format == "text" ? d.to_text() : d.to_json()) << "\n";
      return;
    }
    bcfw::ChordDiagram d = parse_diagram(input);
    if (to == "perm") {
      auto p = d.to_permutation();
      if (format == "text") {
        std::cout << p.two_line() << "\n";
      } else {
        json j;
        j["images"] = p.images();
        j["anti_excedances"] = p.anti_excedances();
        std::cout << j.dump() << "\n";
      }
    } else if (to == "walks") {
      auto w = bcfw::diagram_to_walks(d);
      json j;
      j["n"] = w.n;
      j["k"] = w.k;
      j["A"] = w.a_vertical;
      j["B"] = w.b_vertical;
      std::cout << j.dump() << "\n";
    } else {
      auto op = bcfw::diagram_to_oplus(d);
      if (format == "text") {
        std::cout << op.str();
      } else {
        json j;
        j["n"] = op.n;
        j["row_labels"] = op.row_labels;
        j["col_labels"] = op.col_labels;
        j["filling"] = op.filling;
        std::cout << j.dump() << "\n";
      }
    }
  });

  // sample -------------------------------------------------------------
  auto* cmd_sample = app.add_subcommand("sample", "seeded interior point of a cell");
  std::string sample_diagram;
  cmd_sample->add_option("--diagram", sample_diagram)->required();
  cmd_sample->add_option("--seed", seed);
  cmd_sample->callback([&]() {
    bcfw::ChordDiagram d = parse_diagram(sample_diagram);
    std::cout << bcfw::sample_cell(d, seed).to_json() << "\n";
  });

  // separate -----------------------------------------------------------
  auto* cmd_separate = app.add_subcommand("separate", "separating functionary of two cells");
  std::string a_arg, b_arg;
  bool do_verify = false;
  cmd_separate->add_option("--a", a_arg)->required();
  cmd_separate->add_option("--b", b_arg)->required();
  cmd_separate->add_flag("--verify", do_verify, "evaluate on seeded samples");
  cmd_separate->add_option("--samples", samples);
  cmd_separate->add_option("--zs", zs);
  cmd_separate->add_option("--seed", seed);
  cmd_separate->callback([&]() {
    bcfw::ChordDiagram da = parse_diagram(a_arg);
    bcfw::ChordDiagram db = parse_diagram(b_arg);
    bcfw::Separator sep = bcfw::separator(da, db);
    json j;
    j["functionary"] = sep.functionary.to_text();
    j["sign_a"] = sep.sign_a;
    j["sign_b"] = sep.sign_b;
    j["degree"] = sep.functionary.degree();
    if (do_verify) {
      auto chk = bcfw::verify_separator(da, db, sep, seed, samples, zs);
      j["verified"] = chk.ok;
      j["evaluations"] = chk.evaluations;
      if (!chk.ok) j["failure"] = chk.failure;
      std::cout << j.dump() << "\n";
      if (!chk.ok) throw CLI::RuntimeError(3);
      return;
    }
    std::cout << j.dump() << "\n";
  });

  // invert -------------------------------------------------------------
  auto* cmd_invert = app.add_subcommand("invert", "identify the cell of an image point");
  std::string y_file, z_file;
  cmd_invert->add_option("--y", y_file, "Y matrix JSON file")->required();
  cmd_invert->add_option("--z", z_file, "Z matrix JSON file")->required();
  cmd_invert->add_option("--n", n)->required();
  cmd_invert->add_option("--k", k)->required();
  cmd_invert->callback([&]() {
    bcfw::RationalMatrix y = bcfw::RationalMatrix::from_json(read_file(y_file));
    bcfw::RationalMatrix zm = bcfw::RationalMatrix::from_json(read_file(z_file));
    bcfw::PositiveZ z(n, k, zm);
    auto hit = bcfw::identify_cell(y, z, n, k);
    json j;
    if (hit) {
      j["diagram"] = json::parse(hit->to_json());
      j["matrix"] = json::parse(bcfw::invert_point(*hit, y, z).to_json());
    } else {
      j["diagram"] = nullptr;
      j["note"] = "no cell accepts this point (boundary or outside)";
    }
    std::cout << j.dump() << "\n";
  });

  // boundaries ---------------------------------------------------------
  auto* cmd_boundaries = app.add_subcommand("boundaries", "Var classification tables");
  cmd_boundaries->add_option("--n", n)->required();
  cmd_boundaries->add_option("--k", k)->required();
  cmd_boundaries->callback([&]() {
    for (const auto& d : bcfw::enumerate_diagrams(n, k)) {
      json j;
      j["diagram"] = json::parse(d.to_json());
      json table = json::array();
      for (const auto& bc : bcfw::pair_boundaries(d)) {
        json row;
        row["star"] = var_json(bc.star);
        row["rule"] = bc.rule;
        if (bc.is_sa) {
          row["class"] = "S_dA";
        } else {
          row["class"] = "paired";
          row["partner"] = json::parse(bc.partner->to_json());
          row["partner_star"] = var_json(*bc.partner_star);
        }
        table.push_back(std::move(row));
      }
      j["boundaries"] = std::move(table);
      std::cout << j.dump() << "\n";
    }
  });

  // verify -------------------------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify", "run the verification suites");
  bcfw::VerifyConfig cfg;
  cmd_verify->add_option("--n", cfg.n)->required();
  cmd_verify->add_option("--k", cfg.k, "restrict to one k (-1: all)");
  cmd_verify->add_option("--seed", cfg.seed);
  cmd_verify->add_option("--samples", cfg.samples);
  cmd_verify->add_option("--zs", cfg.zs);
  cmd_verify->add_option("--points", cfg.surjectivity_points);
  cmd_verify->add_option("--jobs", cfg.jobs);
  cmd_verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  cmd_verify->callback([&]() {
    bool all_ok = true;
    for (const auto& suite : bcfw::verify::run_all(cfg)) {
      all_ok = all_ok && suite.ok;
      if (format == "text") {
        std::cout << (suite.ok ? "PASS " : "FAIL ") << suite.name << " (" << suite.checks
                  << " checks)\n";
        for (const auto& f : suite.failures) std::cout << "  " << f << "\n";
      } else {
        json j;
        j["suite"] = suite.name;
        j["ok"] = suite.ok;
        j["checks"] = suite.checks;
        j["failures"] = suite.failures;
        std::cout << j.dump() << "\n";
      }
    }
    if (!all_ok) throw CLI::RuntimeError(2);
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}
