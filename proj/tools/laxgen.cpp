// laxgen: familial representability and lax generic factorizations for
// finite categorical data.
//
// Verbs: familial1d, familial, factor, spectrum, spec-factor, pra-check,
// fixtures, verify. Exit codes: 0 yes, 1 no (with counterexample),
// 2 bound exceeded, 3 invalid input.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "laxgen/builtin_fixtures.hpp"
#include "laxgen/witness.hpp"

using namespace laxgen;

namespace {

std::optional<json> load_input(const std::string& path) {
  if (auto doc = builtin_document(path)) return doc;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    std::cerr << "parse error in " << path << ": " << e.what() << "\n";
    return std::nullopt;
  }
  return j;
}

int emit(const RunResult& r, const RunOptions& opt,
         std::chrono::steady_clock::time_point start,
         const std::string& out_path) {
  json w = r.witness;
  if (opt.timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    w["timing_ms"] = ms;
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << w.dump(2) << "\n";
  } else {
    std::cout << w.dump(2) << "\n";
  }
  return r.exit_code;
}

std::optional<PseudoInstance> load_pseudo(const std::string& path, json& doc) {
  if (auto pi = builtin_pseudo_instance(path)) {
    doc = pseudo_instance_to_json(*pi);
    return pi;
  }
  auto j = load_input(path);
  if (!j) return std::nullopt;
  doc = *j;
  try {
    return pseudo_instance_from_json(*j);
  } catch (const std::exception& e) {
    std::cerr << "schema error in " << path << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"familial representability for finite categorical data"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  RunOptions opt;
  std::string out_path;
  std::string verify_path;
  app.add_option("--bound-objects", opt.bound_objects,
                 "maximum number of objects accepted per (bi)category");
  app.add_option("--bound-hom", opt.bound_hom,
                 "maximum number of 1-cells accepted per hom");
  app.add_flag("--all-witnesses", opt.all_witnesses,
               "force full enumeration instead of early exit");
  uint64_t seed_val = 0;
  auto* seed_opt = app.add_option("--seed", seed_val, "seed recorded in witnesses");
  app.add_flag("--timing", opt.timing, "include timing_ms in the witness");
  app.add_option("-o,--out", out_path, "write the witness to a file");
  app.add_option("--verify", verify_path, "replay a witness file and exit");

  std::string in_path, cell, target, fixture_name;
  auto* c1 = app.add_subcommand("familial1d",
                                "decide 1-dimensional familiality of a functor");
  c1->add_option("input", in_path)->required();
  auto* c2 = app.add_subcommand("familial",
                                "decide lax familiality of a pseudofunctor");
  c2->add_option("input", in_path)->required();
  auto* c3 = app.add_subcommand("factor", "lax generic factorization of a 1-cell");
  c3->add_option("input", in_path)->required();
  c3->add_option("--cell", cell, "the 1-cell to factor")->required();
  c3->add_option("--target", target, "the domain object whose image receives it")
      ->required();
  auto* c4 = app.add_subcommand("spectrum", "compute the spectrum");
  c4->add_option("input", in_path)->required();
  auto* c5 = app.add_subcommand("spec-factor",
                                "factor through the elements of the spectrum");
  c5->add_option("input", in_path)->required();
  auto* c6 = app.add_subcommand("pra-check",
                                "terminal-object characterization via oplax slices");
  c6->add_option("input", in_path)->required();
  auto* c7 = app.add_subcommand("fixtures", "list or emit built-in fixtures");
  c7->add_option("name", fixture_name);
  auto* c8 = app.add_subcommand("verify", "replay a witness");
  std::string verify_arg;
  c8->add_option("witness", verify_arg)->required();
  auto* c9 = app.add_subcommand("schema", "print the JSON schema meta-document");

  CLI11_PARSE(app, argc, argv);
  if (*seed_opt) opt.seed = seed_val;
  auto start = std::chrono::steady_clock::now();

  if (!verify_path.empty() || c8->parsed()) {
    std::string path = c8->parsed() ? verify_arg : verify_path;
    auto w = load_input(path);
    if (!w) return 3;
    int code = verify_witness(*w, load_input);
    std::cout << (code == 0 ? "verified" : "mismatch") << "\n";
    return code;
  }

  if (c7->parsed()) {
    if (fixture_name.empty()) {
      for (const auto& n : builtin_fixture_names()) std::cout << n << "\n";
      return 0;
    }
    auto doc = builtin_document(fixture_name);
    if (!doc) {
      std::cerr << "unknown fixture: " << fixture_name << "\n";
      return 3;
    }
    std::cout << doc->dump(2) << "\n";
    return 0;
  }

  if (c9->parsed()) {
    std::cout << schema_document().dump(2) << "\n";
    return 0;
  }

  if (c1->parsed()) {
    auto j = load_input(in_path);
    if (!j) return 3;
    FunctorInstance fi;
    try {
      fi = functor_instance_from_json(*j);
    } catch (const std::exception& e) {
      std::cerr << "schema error: " << e.what() << "\n";
      return 3;
    }
    return emit(run_familial1d(in_path, fi, opt), opt, start, out_path);
  }

  json doc;
  if (c2->parsed()) {
    auto pi = load_pseudo(in_path, doc);
    if (!pi) return 3;
    return emit(run_familial(in_path, *pi, opt), opt, start, out_path);
  }
  if (c3->parsed()) {
    auto pi = load_pseudo(in_path, doc);
    if (!pi) return 3;
    return emit(run_factor(in_path, *pi, cell, target, opt), opt, start,
                out_path);
  }
  if (c4->parsed()) {
    auto pi = load_pseudo(in_path, doc);
    if (!pi) return 3;
    return emit(run_spectrum(in_path, *pi, opt), opt, start, out_path);
  }
  if (c5->parsed()) {
    auto pi = load_pseudo(in_path, doc);
    if (!pi) return 3;
    return emit(run_specfactor(in_path, *pi, opt), opt, start, out_path);
  }
  if (c6->parsed()) {
    auto pi = load_pseudo(in_path, doc);
    if (!pi) return 3;
    return emit(run_pra(in_path, *pi, opt), opt, start, out_path);
  }
  std::cout << app.help() << "\n";
  return 0;
}
