#pragma once

// Witness documents: every decision verb emits a replayable JSON record of
// its verdict and certificates. `verify` re-checks the recorded choices by
// direct law evaluation (bounded enumeration, no candidate search); negative
// verdicts are re-derived.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <thread>

#include "laxgen/constructions.hpp"
#include "laxgen/gen.hpp"
#include "laxgen/json_io.hpp"
#include "laxgen/specfactor.hpp"

namespace laxgen {

struct RunOptions {
  size_t bound_objects = 8;
  size_t bound_hom = 24;
  bool all_witnesses = false;
  std::optional<uint64_t> seed;
  bool timing = false;
};

struct RunResult {
  int exit_code = 0;
  json witness;
};

inline json witness_header(const std::string& verb,
                           const std::vector<std::pair<std::string, json>>& inputs,
                           const RunOptions& opt) {
  json w;
  w["schema"] = "laxgen.witness/1";
  w["verb"] = verb;
  json ins = json::array();
  for (const auto& [path, doc] : inputs)
    ins.push_back({{"path", path}, {"digest", digest_json(doc)}});
  w["inputs"] = ins;
  w["bounds"] = {{"objects", opt.bound_objects}, {"hom", opt.bound_hom}};
  if (opt.seed)
    w["seed"] = *opt.seed;
  else
    w["seed"] = nullptr;
  return w;
}

// --------------------------------------------------------------------------
// bounds

inline bool cat_within_bounds(const FinCat& c, const RunOptions& opt) {
  if (c.objects.size() > opt.bound_objects) return false;
  for (const auto& a : c.objects)
    for (const auto& b : c.objects)
      if (c.hom_size(a, b) > opt.bound_hom) return false;
  return true;
}

inline bool bicat_within_bounds(const FinBicat& b, const RunOptions& opt) {
  if (b.objects.size() > opt.bound_objects) return false;
  for (const auto& [ab, H] : b.homs)
    if (H.objects.size() > opt.bound_hom) return false;
  return true;
}

// --------------------------------------------------------------------------
// familial1d

inline json decomposition_to_json(const Decomposition1& d) {
  json j;
  j["index"] = d.index;
  j["family"] = d.family;
  j["generic_element"] = d.generic_element;
  json w = json::object();
  for (const auto& [b, mw] : d.witness)
    w[b] = json::array({mw.first, mw.second});
  j["witness"] = w;
  return j;
}

// Parallelism cap from the environment; 1 when unset or malformed.
inline unsigned laxfam_threads() {
  const char* env = std::getenv("LAXFAM_THREADS");
  if (!env) return 1;
  long v = std::strtol(env, nullptr, 10);
  if (v < 1) return 1;
  unsigned hw = std::thread::hardware_concurrency();
  return static_cast<unsigned>(std::min<long>(v, hw == 0 ? 8 : hw));
}

inline RunResult run_familial1d(const std::string& path,
                                const FunctorInstance& fi,
                                const RunOptions& opt) {
  RunResult r;
  json w = witness_header("familial1d", {{path, functor_instance_to_json(fi)}},
                          opt);
  if (!cat_within_bounds(fi.domain, opt) || !cat_within_bounds(fi.codomain, opt)) {
    w["verdict"] = "bound-exceeded";
    r.exit_code = 2;
    r.witness = w;
    return r;
  }
  Diags ds = check_category(fi.domain);
  auto d2 = check_category(fi.codomain);
  ds.insert(ds.end(), d2.begin(), d2.end());
  auto d3 = check_functor(fi.functor, fi.domain, fi.codomain);
  ds.insert(ds.end(), d3.begin(), d3.end());
  if (!ds.empty()) {
    w["verdict"] = "invalid";
    json diag = json::array();
    for (const auto& d : ds) diag.push_back({{"code", d.code}, {"detail", d.detail}});
    w["diagnostics"] = diag;
    r.exit_code = 3;
    r.witness = w;
    return r;
  }

  // the per-object checks are independent; results are assembled in the
  // canonical object order regardless of scheduling
  const std::vector<Id>& objs = fi.codomain.objects;
  std::vector<DecomposeOutcome> results(objs.size());
  unsigned nthreads = std::min<size_t>(laxfam_threads(), objs.size());
  if (nthreads > 1) {
    std::vector<std::thread> pool;
    std::atomic<size_t> cursor{0};
    for (unsigned t = 0; t < nthreads; ++t)
      pool.emplace_back([&, fi]() {
        for (size_t i = cursor.fetch_add(1); i < objs.size();
             i = cursor.fetch_add(1)) {
          auto F =
              hom_copresheaf_1d(fi.functor, fi.domain, fi.codomain, objs[i]);
          results[i] = decompose_coproduct(F);
        }
      });
    for (auto& th : pool) th.join();
  } else {
    for (size_t i = 0; i < objs.size(); ++i) {
      auto F = hom_copresheaf_1d(fi.functor, fi.domain, fi.codomain, objs[i]);
      results[i] = decompose_coproduct(F);
      if (!results[i].decomposition && !opt.all_witnesses) break;
    }
  }

  json per = json::array();
  bool ok = true;
  json counter;
  json all_counters = json::array();
  for (size_t i = 0; i < objs.size(); ++i) {
    const auto& out = results[i];
    if (out.decomposition) {
      per.push_back({{"X", objs[i]},
                     {"decomposition", decomposition_to_json(*out.decomposition)}});
    } else if (!out.components_without_initial.empty()) {
      json c = {{"kind", "NotFamilial"},
                {"X", objs[i]},
                {"components_without_initial", out.components_without_initial}};
      if (ok) counter = c;
      ok = false;
      all_counters.push_back(c);
      if (!opt.all_witnesses) break;
    } else {
      break;  // early exit left the remaining slots empty
    }
  }
  w["verdict"] = ok ? "yes" : "no";
  if (ok) {
    w["certificates"] = {{"per_object", per}};
  } else {
    w["counterexample"] = counter;
    if (opt.all_witnesses) w["all_counterexamples"] = all_counters;
  }
  r.exit_code = ok ? 0 : 1;
  r.witness = w;
  return r;
}

// --------------------------------------------------------------------------
// familial / factor / spectrum / spec-factor / pra-check

inline json square_record(const Square& sq, const UFactor& uf) {
  return {{"Bo", sq.Bo}, {"z", sq.z},       {"f", sq.f},
          {"g", sq.g},   {"alpha", sq.alpha}, {"h", uf.h},
          {"gamma", uf.gamma}, {"nu", uf.nu}};
}

inline json generic_cert_to_json(const LaxGenericCert& c) {
  json j;
  j["mid"] = c.delta.first;
  j["delta"] = c.delta.second;
  json sq = json::array();
  for (const auto& [s, uf] : c.squares) sq.push_back(square_record(s, uf));
  j["squares"] = sq;
  return j;
}

inline RunResult run_familial(const std::string& path, const PseudoInstance& pi,
                              const RunOptions& opt) {
  RunResult r;
  json w = witness_header("familial", {{path, pseudo_instance_to_json(pi)}}, opt);
  if (!bicat_within_bounds(pi.domain, opt) ||
      !bicat_within_bounds(pi.codomain, opt) || !pi.codomain.total) {
    // a declared fragment cannot support the global quantification
    w["verdict"] = "bound-exceeded";
    r.exit_code = 2;
    r.witness = w;
    return r;
  }
  Diags ds = check_bicategory(pi.domain);
  auto d2 = check_bicategory(pi.codomain);
  ds.insert(ds.end(), d2.begin(), d2.end());
  auto d3 = check_pseudofunctor(pi.pseudofunctor, pi.domain, pi.codomain);
  ds.insert(ds.end(), d3.begin(), d3.end());
  if (!ds.empty()) {
    w["verdict"] = "invalid";
    json diag = json::array();
    for (const auto& d : ds) diag.push_back({{"code", d.code}, {"detail", d.detail}});
    w["diagnostics"] = diag;
    r.exit_code = 3;
    r.witness = w;
    return r;
  }
  LaxContext ctx(pi.domain, pi.codomain, pi.pseudofunctor);
  auto rep = is_lax_familial(ctx);
  w["verdict"] = rep.familial ? "yes" : "no";
  if (!rep.familial) {
    w["counterexample"] = {{"kind", rep.error_kind},
                           {"witness1", rep.witness1},
                           {"witness2", rep.witness2}};
    r.exit_code = 1;
    r.witness = w;
    return r;
  }
  // certificates: factorizations of every 1-cell into a T-image, plus the
  // genericity certificates of every generic used
  json facts = json::array();
  std::set<Gen1> used;
  for (const auto& X : pi.codomain.objects)
    for (const auto& Co : pi.domain.objects)
      for (const auto& y : pi.codomain.onecells(X, pi.pseudofunctor.ob(Co))) {
        auto gf = ctx.lax_generic_factorization(y, Co);
        facts.push_back({{"y", y},
                         {"target", Co},
                         {"mid", gf->mid},
                         {"delta", gf->delta},
                         {"fbar", gf->fbar},
                         {"compare", gf->compare}});
        used.insert({gf->mid, gf->delta});
      }
  json gens = json::array();
  for (const auto& d : used) gens.push_back(generic_cert_to_json(ctx.is_lax_generic(d)));

  // the indexing categories M_X, and, when the domain is locally discrete,
  // the explicit equivalences M_X = E/X that the slice comparison yields
  json mx = json::object();
  json slices = json::object();
  {
    CellReps reps(ctx);
    auto spv = spectrum(ctx, reps, false);
    if (std::holds_alternative<Spectrum>(spv)) {
      const auto& sp = std::get<Spectrum>(spv);
      for (const auto& [X, M] : sp.m_x) mx[X] = cat_to_json(M);
      bool locally_discrete_domain = true;
      for (const auto& [ab, H] : pi.domain.homs)
        for (const auto& [m, mm] : H.morphisms)
          if (mm.dom != mm.cod) locally_discrete_domain = false;
      if (locally_discrete_domain) {
        FinCat E;
        E.objects = pi.domain.objects;
        for (const auto& [f, ab] : pi.domain.home1)
          E.add_mor(f, ab.first, ab.second);
        E.identities = pi.domain.unit1;
        for (const auto& [p, gf] : pi.domain.hc1) E.comp[p] = gf;
        for (const auto& [X, M] : sp.m_x) {
          if (!E.has_object(X)) continue;
          auto sl = slice(E, X);
          auto eq = find_equivalence(sl.cat, M);
          if (eq.outcome == SearchOutcome::Found)
            slices[X] = {{"slice", cat_to_json(sl.cat)},
                         {"equivalence", functor_to_json(eq.witness->fwd)}};
        }
      }
    }
  }
  w["certificates"] = {{"factorizations", facts},
                       {"generics", gens},
                       {"m_x", mx},
                       {"slice_equivalences", slices},
                       {"pastings_checked", rep.pastings_checked}};
  r.exit_code = 0;
  r.witness = w;
  return r;
}

inline RunResult run_factor(const std::string& path, const PseudoInstance& pi,
                            const Id& cell, const Id& target,
                            const RunOptions& opt) {
  RunResult r;
  json w = witness_header("factor", {{path, pseudo_instance_to_json(pi)}}, opt);
  w["cell"] = cell;
  w["target"] = target;
  if (!bicat_within_bounds(pi.domain, opt) ||
      !bicat_within_bounds(pi.codomain, opt)) {
    w["verdict"] = "bound-exceeded";
    r.exit_code = 2;
    r.witness = w;
    return r;
  }
  if (!pi.codomain.home1.count(cell) ||
      std::find(pi.domain.objects.begin(), pi.domain.objects.end(), target) ==
          pi.domain.objects.end() ||
      pi.codomain.dst1(cell) != pi.pseudofunctor.ob(target)) {
    w["verdict"] = "invalid";
    r.exit_code = 3;
    r.witness = w;
    return r;
  }
  LaxContext ctx(pi.domain, pi.codomain, pi.pseudofunctor);
  auto gf = ctx.lax_generic_factorization(cell, target);
  if (!gf) {
    w["verdict"] = "no";
    w["counterexample"] = {{"kind", "NoFactorization"}, {"y", cell}};
    r.exit_code = 1;
    r.witness = w;
    return r;
  }
  w["verdict"] = "yes";
  w["certificates"] = {{"mid", gf->mid},
                       {"delta", gf->delta},
                       {"fbar", gf->fbar},
                       {"compare", gf->compare},
                       {"generic", generic_cert_to_json(
                                       ctx.is_lax_generic({gf->mid, gf->delta}))}};
  r.exit_code = 0;
  r.witness = w;
  return r;
}

inline RunResult run_spectrum(const std::string& path, const PseudoInstance& pi,
                              const RunOptions& opt) {
  RunResult r;
  json w = witness_header("spectrum", {{path, pseudo_instance_to_json(pi)}}, opt);
  if (!bicat_within_bounds(pi.domain, opt) ||
      !bicat_within_bounds(pi.codomain, opt) ||
      !pi.codomain.total) {
    w["verdict"] = "bound-exceeded";
    r.exit_code = 2;
    r.witness = w;
    return r;
  }
  LaxContext ctx(pi.domain, pi.codomain, pi.pseudofunctor);
  CellReps reps(ctx);
  auto spv = spectrum(ctx, reps);
  if (std::holds_alternative<SpectrumError>(spv)) {
    const auto& e = std::get<SpectrumError>(spv);
    w["verdict"] = "no";
    w["counterexample"] = {{"kind", e.kind}, {"witness", e.witness}};
    r.exit_code = 1;
    r.witness = w;
    return r;
  }
  const auto& sp = std::get<Spectrum>(spv);
  json mx = json::object();
  for (const auto& [X, M] : sp.m_x) mx[X] = cat_to_json(M);
  json obd = json::object();
  for (const auto& [o, d] : sp.ob_data) obd[o] = json::array({d.first, d.second});
  json cd = json::object();
  for (const auto& [m, hg] : sp.cell_data)
    cd[m] = json::array({hg.first, hg.second});
  json re = json::object();
  for (const auto& [f, Mf] : sp.reindex) re[f] = functor_to_json(Mf);
  json ui = json::object();
  for (const auto& [X, n] : sp.unit_iso) ui[X] = nat_to_json(n);
  json ci = json::array();
  for (const auto& [fe, n] : sp.comp_iso)
    ci.push_back(json::array({fe.first, fe.second, nat_to_json(n)}));
  json ti = json::object();
  for (const auto& [X, F] : sp.terminal_iso) ti[X] = functor_to_json(F);
  w["verdict"] = "yes";
  w["certificates"] = {
      {"m_x", mx},   {"ob_data", obd},     {"cell_data", cd},
      {"reindex", re}, {"unit_iso", ui},   {"comp_iso", ci},
      {"terminal", sp.terminal ? json(*sp.terminal) : json(nullptr)},
      {"terminal_iso", ti}};
  r.exit_code = 0;
  r.witness = w;
  return r;
}

inline RunResult run_specfactor(const std::string& path,
                                const PseudoInstance& pi,
                                const RunOptions& opt) {
  RunResult r;
  json w = witness_header("spec-factor", {{path, pseudo_instance_to_json(pi)}},
                          opt);
  if (!bicat_within_bounds(pi.domain, opt) ||
      !bicat_within_bounds(pi.codomain, opt) ||
      !pi.codomain.total) {
    w["verdict"] = "bound-exceeded";
    r.exit_code = 2;
    r.witness = w;
    return r;
  }
  LaxContext ctx(pi.domain, pi.codomain, pi.pseudofunctor);
  auto v = spectrum_factorization(ctx);
  if (std::holds_alternative<SpecFactorError>(v)) {
    const auto& e = std::get<SpecFactorError>(v);
    w["verdict"] = "no";
    w["counterexample"] = {{"kind", e.kind}, {"witness", e.witness}};
    r.exit_code = 1;
    r.witness = w;
    return r;
  }
  const auto& f = std::get<SpecFactorization>(v);
  json checks = {{"el_valid", f.el_valid},
                 {"g_valid", f.g_valid},
                 {"vg_equals_t", f.vg_equals_t},
                 {"fibration", f.fibration_ok},
                 {"cartesian_classification", f.cartesian_classification_ok},
                 {"arrows", f.arrows_ok},
                 {"composites", f.composites_ok}};
  json arrows = json::object();
  for (const auto& [m, a] : f.arrows) {
    json pairs = json::array();
    for (const auto& [key, up] : a.pairs)
      pairs.push_back({{"target", key.first},
                       {"f", key.second},
                       {"fbar", up.fbar},
                       {"gamma", up.gamma}});
    arrows[m] = {{"W", a.W}, {"eta", a.eta}, {"pairs", pairs}};
  }
  w["verdict"] = f.all_ok() ? "yes" : "no";
  w["certificates"] = {{"checks", checks},
                       {"tight", std::vector<Id>(f.tight.begin(), f.tight.end())},
                       {"G", pseudofunctor_to_json(f.G)},
                       {"arrows", arrows}};
  r.exit_code = f.all_ok() ? 0 : 1;
  r.witness = w;
  return r;
}

inline RunResult run_pra(const std::string& path, const PseudoInstance& pi,
                         const RunOptions& opt) {
  RunResult r;
  json w = witness_header("pra-check", {{path, pseudo_instance_to_json(pi)}}, opt);
  if (!bicat_within_bounds(pi.domain, opt) ||
      !bicat_within_bounds(pi.codomain, opt) ||
      !pi.codomain.total) {
    w["verdict"] = "bound-exceeded";
    r.exit_code = 2;
    r.witness = w;
    return r;
  }
  LaxContext ctx(pi.domain, pi.codomain, pi.pseudofunctor);
  auto rep = pra_check(ctx);
  if (!rep.has_terminal) {
    w["verdict"] = "invalid";
    w["counterexample"] = {{"kind", "NoTerminalObject"}};
    r.exit_code = 3;
    r.witness = w;
    return r;
  }
  // emit the oplax slices used, marking the tight (pseudo) morphisms
  auto slice_doc = [](const OplaxSlice& S) {
    json cells = json::array();
    for (const auto& [c, data] : S.onecell_data)
      cells.push_back({{"id", c}, {"tight", S.tight.count(c) != 0}});
    return json{{"bicat", bicat_to_json(S.bicat)}, {"onecells", cells}};
  };
  auto term = find_terminal(pi.domain);
  auto SA = oplax_slice(pi.domain, *term);
  auto SB = oplax_slice(pi.codomain, pi.pseudofunctor.ob(*term));
  w["verdict"] = rep.verdict ? "yes" : "no";
  w["certificates"] = {{"t1_valid", rep.t1_valid},
                       {"detail", rep.detail},
                       {"domain_slice", slice_doc(SA)},
                       {"codomain_slice", slice_doc(SB)}};
  r.exit_code = rep.verdict ? 0 : 1;
  r.witness = w;
  return r;
}

// The versioned schema meta-document published by the CLI.
inline json schema_document() {
  json s;
  s["schema"] = "laxgen.schema/1";
  s["documents"] = {
      {"category",
       {{"objects", "array of ids"},
        {"morphisms", "array of {id, dom, cod}"},
        {"identities", "object id -> morphism id"},
        {"compose", "array of [g, f, g.f]"}}},
      {"functor-instance",
       {{"domain", "category"},
        {"codomain", "category"},
        {"functor", "{on_objects, on_morphisms}"}}},
      {"copresheaf",
       {{"base", "category"},
        {"sets", "object -> array of element ids"},
        {"actions", "morphism -> {element: element}"}}},
      {"bicategory",
       {{"objects", "array of ids"},
        {"homs", "object -> object -> category"},
        {"units", "object -> 1-cell"},
        {"hcomp_1", "array of [g, f, g.f]"},
        {"hcomp_2", "array of [beta, alpha, beta*alpha]"},
        {"associators", "array of [h, g, f, cell]"},
        {"left_unitors", "1-cell -> cell"},
        {"right_unitors", "1-cell -> cell"},
        {"total", "bool; false for declared fragments"}}},
      {"pseudofunctor-instance",
       {{"domain", "bicategory"},
        {"codomain", "bicategory"},
        {"pseudofunctor",
         "{on_objects, on_1cells, on_2cells, comp_cells, unit_cells}"}}},
      {"witness",
       {{"schema", "laxgen.witness/1"},
        {"verb", "familial1d|familial|factor|spectrum|spec-factor|pra-check"},
        {"inputs", "array of {path, digest}"},
        {"bounds", "{objects, hom}"},
        {"seed", "integer or null"},
        {"verdict", "yes|no|bound-exceeded|invalid"},
        {"certificates", "verb-specific replayable records"}}}};
  s["exit_codes"] = {{"0", "yes"},
                     {"1", "no, with counterexample"},
                     {"2", "bound exceeded"},
                     {"3", "invalid input"}};
  return s;
}

// --------------------------------------------------------------------------
// verify: re-check a witness against re-loaded inputs

using InputLoader = std::function<std::optional<json>(const std::string&)>;

namespace verifydetail {

inline bool verify_familial1d(const json& w, const json& input) {
  auto fi = functor_instance_from_json(input);
  const std::string verdict = w.at("verdict").get<std::string>();
  if (verdict == "no") {
    // re-derive the counterexample
    const auto& c = w.at("counterexample");
    auto F = hom_copresheaf_1d(fi.functor, fi.domain, fi.codomain,
                               c.at("X").get<Id>());
    auto out = decompose_coproduct(F);
    return !out.decomposition.has_value();
  }
  if (verdict != "yes") return true;
  std::set<Id> seen;
  for (const auto& entry : w.at("certificates").at("per_object")) {
    const Id X = entry.at("X").get<Id>();
    seen.insert(X);
    auto F = hom_copresheaf_1d(fi.functor, fi.domain, fi.codomain, X);
    auto el = category_of_elements(F);
    const auto& d = entry.at("decomposition");
    // the index lists exactly the chosen generic elements, and the family
    // records their base objects
    std::set<Id> index(d.at("index").begin(), d.at("index").end());
    if (index.size() != d.at("generic_element").size()) return false;
    for (auto it = d.at("generic_element").begin();
         it != d.at("generic_element").end(); ++it) {
      if (!index.count(it.key())) return false;
      const Id gen = it.value().get<Id>();
      if (!el.cat.has_object(gen)) return false;
      if (d.at("family").at(it.key()).get<Id>() != split_id(gen)[0])
        return false;
    }
    // every el object covered exactly once by a recorded unique witness
    std::set<Id> covered;
    for (auto it = d.at("witness").begin(); it != d.at("witness").end(); ++it) {
      const Id b = it.key();
      const Id m = it.value().at(0).get<Id>();
      const Id mor = it.value().at(1).get<Id>();
      if (!el.cat.has_object(b) || !el.cat.has_mor(mor)) return false;
      const Id gen = d.at("generic_element").at(m).get<Id>();
      if (el.cat.dom(mor) != gen || el.cat.cod(mor) != b) return false;
      if (el.cat.hom_size(gen, b) != 1) return false;
      covered.insert(b);
    }
    if (covered.size() != el.cat.objects.size()) return false;
  }
  for (const auto& X : fi.codomain.objects)
    if (!seen.count(X)) return false;
  return true;
}

inline bool verify_generic_cert(const LaxContext& ctx, const json& g) {
  Gen1 d{g.at("mid").get<Id>(), g.at("delta").get<Id>()};
  // completeness: the recorded squares must cover every square
  std::set<std::tuple<Id, Id, Id, Id, Id>> recorded;
  for (const auto& s : g.at("squares"))
    recorded.insert({s.at("Bo").get<Id>(), s.at("z").get<Id>(),
                     s.at("f").get<Id>(), s.at("g").get<Id>(),
                     s.at("alpha").get<Id>()});
  const FinBicat& A = ctx.A;
  const FinBicat& B = ctx.B;
  const Id X = B.src1(d.second);
  for (const auto& Bo : A.objects)
    for (const auto& z : B.onecells(X, ctx.T.ob(Bo)))
      for (const auto& Co : A.objects)
        for (const auto& f : A.onecells(d.first, Co))
          for (const auto& gg : A.onecells(Bo, Co)) {
            const Id Tf = ctx.T.c1(f), Tg = ctx.T.c1(gg);
            if (!B.has_hc1(Tf, d.second) || !B.has_hc1(Tg, z)) continue;
            for (const auto& alpha :
                 B.twocells(B.c1(Tf, d.second), B.c1(Tg, z)))
              if (!recorded.count({Bo, z, f, gg, alpha})) return false;
          }
  // each recorded factorization re-checked by law evaluation
  for (const auto& s : g.at("squares")) {
    Square sq{s.at("Bo").get<Id>(), s.at("z").get<Id>(), s.at("f").get<Id>(),
              s.at("g").get<Id>(), s.at("alpha").get<Id>()};
    UFactor uf;
    uf.h = s.at("h").get<Id>();
    uf.gamma = s.at("gamma").get<Id>();
    uf.nu = s.at("nu").get<Id>();
    auto paste = ctx.paste_factorization(d.second, sq, uf.h, uf.gamma, uf.nu);
    if (!paste || *paste != sq.alpha) return false;
    if (!ctx.condition1(d.second, d.first, sq.Bo, uf.h, uf.gamma)) return false;
    if (!ctx.condition2(d, sq, uf)) return false;
    if (B.invertible2(sq.alpha) &&
        (!B.invertible2(uf.gamma) || !A.invertible2(uf.nu)))
      return false;
  }
  return true;
}

inline bool verify_familial(const json& w, const json& input) {
  auto pi = pseudo_instance_from_json(input);
  LaxContext ctx(pi.domain, pi.codomain, pi.pseudofunctor);
  const std::string verdict = w.at("verdict").get<std::string>();
  if (verdict == "no") return !is_lax_familial(ctx).familial;
  if (verdict != "yes") return true;
  const auto& certs = w.at("certificates");
  for (const auto& g : certs.at("generics"))
    if (!verify_generic_cert(ctx, g)) return false;
  std::set<std::pair<Id, Id>> covered;
  for (const auto& fr : certs.at("factorizations")) {
    const Id y = fr.at("y").get<Id>();
    const Id fbar = fr.at("fbar").get<Id>();
    const Id delta = fr.at("delta").get<Id>();
    const Id cmp = fr.at("compare").get<Id>();
    const Id Tf = ctx.T.c1(fbar);
    if (!ctx.B.has_hc1(Tf, delta)) return false;
    if (ctx.B.src2(cmp) != ctx.B.c1(Tf, delta) || ctx.B.dst2(cmp) != y)
      return false;
    if (!ctx.B.invertible2(cmp)) return false;
    covered.insert({y, fr.at("target").get<Id>()});
  }
  for (const auto& X : ctx.B.objects)
    for (const auto& Co : ctx.A.objects)
      for (const auto& y : ctx.B.onecells(X, ctx.T.ob(Co)))
        if (!covered.count({y, Co})) return false;
  // the recorded indexing categories: valid tables whose objects decode to
  // verified generics and whose morphisms decode to verified generic cells
  if (certs.contains("m_x")) {
    for (auto it = certs.at("m_x").begin(); it != certs.at("m_x").end(); ++it) {
      FinCat M = cat_from_json(it.value());
      if (!check_category(M).empty()) return false;
      for (const auto& o : M.objects) {
        auto parts = split_id(o);
        if (parts.size() != 2) return false;
        if (!ctx.is_lax_generic({parts[0], parts[1]}).generic) return false;
      }
      for (const auto& [mid, mm] : M.morphisms) {
        auto parts = split_id(mid);
        if (parts.size() != 4) return false;
        auto src = split_id(mm.dom);
        if (!ctx.is_generic_cell({src[0], src[1]}, parts[0], parts[1]))
          return false;
      }
    }
  }
  // slice equivalences: the recorded functor must be fully faithful and
  // essentially surjective from the recorded slice onto M_X
  if (certs.contains("slice_equivalences")) {
    for (auto it = certs.at("slice_equivalences").begin();
         it != certs.at("slice_equivalences").end(); ++it) {
      if (!certs.at("m_x").contains(it.key())) return false;
      FinCat M = cat_from_json(certs.at("m_x").at(it.key()));
      FinCat S = cat_from_json(it.value().at("slice"));
      FinFunctor Q = functor_from_json(it.value().at("equivalence"));
      if (!check_functor(Q, S, M).empty()) return false;
      if (!detail::functor_fully_faithful(Q, S, M)) return false;
      for (const auto& o : M.objects) {
        bool hit = false;
        for (const auto& s : S.objects)
          for (const auto& iso : M.hom(Q.ob(s), o))
            if (M.is_iso(iso)) hit = true;
        if (!hit) return false;
      }
    }
  }
  return true;
}

inline bool verify_factor(const json& w, const json& input) {
  auto pi = pseudo_instance_from_json(input);
  LaxContext ctx(pi.domain, pi.codomain, pi.pseudofunctor);
  const std::string verdict = w.at("verdict").get<std::string>();
  const Id cell = w.at("cell").get<Id>();
  if (verdict == "no")
    return !ctx.lax_generic_factorization(cell, w.at("target").get<Id>());
  if (verdict != "yes") return true;
  const auto& c = w.at("certificates");
  if (!verify_generic_cert(ctx, c.at("generic"))) return false;
  const Id delta = c.at("delta").get<Id>();
  const Id fbar = c.at("fbar").get<Id>();
  const Id cmp = c.at("compare").get<Id>();
  const Id Tf = ctx.T.c1(fbar);
  return ctx.B.has_hc1(Tf, delta) &&
         ctx.B.src2(cmp) == ctx.B.c1(Tf, delta) && ctx.B.dst2(cmp) == cell &&
         ctx.B.invertible2(cmp);
}

inline bool verify_spectrum(const json& w, const json& input) {
  auto pi = pseudo_instance_from_json(input);
  LaxContext ctx(pi.domain, pi.codomain, pi.pseudofunctor);
  const std::string verdict = w.at("verdict").get<std::string>();
  if (verdict != "yes") {
    CellReps reps(ctx);
    return std::holds_alternative<SpectrumError>(spectrum(ctx, reps));
  }
  const auto& c = w.at("certificates");
  std::map<Id, FinCat> mx;
  for (auto it = c.at("m_x").begin(); it != c.at("m_x").end(); ++it) {
    mx[it.key()] = cat_from_json(it.value());
    if (!check_category(mx[it.key()]).empty()) return false;
  }
  // every recorded cell is a generic cell out of its recorded source
  std::map<Id, Gen1> obd;
  for (auto it = c.at("ob_data").begin(); it != c.at("ob_data").end(); ++it)
    obd[it.key()] = {it.value().at(0).get<Id>(), it.value().at(1).get<Id>()};
  for (auto it = c.at("cell_data").begin(); it != c.at("cell_data").end();
       ++it) {
    const Id h = it.value().at(0).get<Id>();
    const Id gamma = it.value().at(1).get<Id>();
    // find the source object of this morphism in some M_X
    bool found = false;
    for (const auto& [X, M] : mx)
      if (M.has_mor(it.key())) {
        const Gen1& d = obd.at(M.dom(it.key()));
        if (!ctx.is_generic_cell(d, h, gamma)) return false;
        found = true;
      }
    if (!found) return false;
  }
  // reindexing functors and comparison isos re-checked as laws
  for (auto it = c.at("reindex").begin(); it != c.at("reindex").end(); ++it) {
    const Id f = it.key();
    auto Mf = functor_from_json(it.value());
    const Id Y = ctx.B.src1(f), X = ctx.B.dst1(f);
    if (!check_functor(Mf, mx.at(X), mx.at(Y)).empty()) return false;
  }
  for (auto it = c.at("unit_iso").begin(); it != c.at("unit_iso").end(); ++it) {
    auto n = nat_from_json(it.value());
    const Id X = it.key();
    auto Mf = functor_from_json(c.at("reindex").at(ctx.B.unit1.at(X)));
    if (!check_nat(n, identity_functor(mx.at(X)), Mf, mx.at(X), mx.at(X))
             .empty())
      return false;
    for (const auto& [o, m] : n.components)
      if (!mx.at(X).is_iso(m)) return false;
  }
  // binary comparisons: natural isomorphisms M_e . M_f => M_{f.e}
  for (const auto& t : c.at("comp_iso")) {
    const Id f = t.at(0).get<Id>(), e = t.at(1).get<Id>();
    auto n = nat_from_json(t.at(2));
    const Id X = ctx.B.dst1(f), Z = ctx.B.src1(e);
    auto Mf = functor_from_json(c.at("reindex").at(f));
    auto Me = functor_from_json(c.at("reindex").at(e));
    auto Mfe = functor_from_json(c.at("reindex").at(ctx.B.c1(f, e)));
    auto comp = compose_functors(Me, Mf);
    if (!check_nat(n, comp, Mfe, mx.at(X), mx.at(Z)).empty()) return false;
    for (const auto& [o, m] : n.components)
      if (!mx.at(Z).is_iso(m)) return false;
  }
  // terminal form: the recorded functor must be an isomorphism of tables
  if (!c.at("terminal").is_null()) {
    for (auto it = c.at("terminal_iso").begin(); it != c.at("terminal_iso").end();
         ++it) {
      const Id X = it.key();
      auto Phi = functor_from_json(it.value());
      const Id one = c.at("terminal").get<Id>();
      FinCat HX = ctx.B.hom(X, ctx.T.ob(one));
      if (!check_functor(Phi, mx.at(X), HX).empty()) return false;
      std::set<Id> obim, morim;
      for (const auto& [a, b] : Phi.on_objects) obim.insert(b);
      for (const auto& [a, b] : Phi.on_morphisms) morim.insert(b);
      if (obim.size() != mx.at(X).objects.size() ||
          obim.size() != HX.objects.size() ||
          morim.size() != mx.at(X).morphisms.size() ||
          morim.size() != HX.morphisms.size())
        return false;
    }
  }
  return true;
}

inline bool verify_specfactor(const json& w, const json& input) {
  auto pi = pseudo_instance_from_json(input);
  LaxContext ctx(pi.domain, pi.codomain, pi.pseudofunctor);
  const std::string verdict = w.at("verdict").get<std::string>();
  auto v = spectrum_factorization(ctx);
  if (verdict != "yes")
    return std::holds_alternative<SpecFactorError>(v) ||
           !std::get<SpecFactorization>(v).all_ok();
  if (!std::holds_alternative<SpecFactorization>(v)) return false;
  const auto& f = std::get<SpecFactorization>(v);
  if (!f.all_ok()) return false;
  // the recorded functor, tight marking and check flags must match the
  // deterministic rebuild
  const auto& certs = w.at("certificates");
  if (certs.at("G") != pseudofunctor_to_json(f.G)) return false;
  if (certs.at("tight") !=
      json(std::vector<Id>(f.tight.begin(), f.tight.end())))
    return false;
  for (auto it = certs.at("checks").begin(); it != certs.at("checks").end();
       ++it)
    if (it.value() != json(true)) return false;
  // re-check each recorded universal pair by direct evaluation
  const auto& arrows = w.at("certificates").at("arrows");
  std::set<Id> tightA;
  for (const auto& [ff, ab] : ctx.A.home1) tightA.insert(ff);
  for (auto it = arrows.begin(); it != arrows.end(); ++it) {
    const Id W = it.value().at("W").get<Id>();
    const Id eta = it.value().at("eta").get<Id>();
    if (!f.tight.count(eta)) return false;
    for (const auto& p : it.value().at("pairs")) {
      if (!detail::universal_pair_check(
              ctx.A, f.el.bicat, f.G, eta, W, p.at("target").get<Id>(),
              p.at("f").get<Id>(), p.at("fbar").get<Id>(),
              p.at("gamma").get<Id>()))
        return false;
    }
  }
  return true;
}

inline bool verify_pra(const json& w, const json& input) {
  auto pi = pseudo_instance_from_json(input);
  LaxContext ctx(pi.domain, pi.codomain, pi.pseudofunctor);
  auto rep = pra_check(ctx);
  const std::string verdict = w.at("verdict").get<std::string>();
  if (verdict == "yes") return rep.has_terminal && rep.verdict;
  if (verdict == "no") return rep.has_terminal && !rep.verdict;
  return !rep.has_terminal;
}

}  // namespace verifydetail

// Returns the exit code of the verify verb: 0 pass, 1 certificate mismatch,
// 3 digest mismatch / unreadable input.
inline int verify_witness(const json& w, const InputLoader& load) {
  if (!w.contains("schema") || w.at("schema") != "laxgen.witness/1") return 3;
  std::vector<json> inputs;
  for (const auto& in : w.at("inputs")) {
    auto doc = load(in.at("path").get<std::string>());
    if (!doc) return 3;
    if (digest_json(*doc) != in.at("digest").get<std::string>()) return 3;
    inputs.push_back(*doc);
  }
  const std::string verb = w.at("verb").get<std::string>();
  bool ok = false;
  try {
    if (verb == "familial1d")
      ok = verifydetail::verify_familial1d(w, inputs.at(0));
    else if (verb == "familial")
      ok = verifydetail::verify_familial(w, inputs.at(0));
    else if (verb == "factor")
      ok = verifydetail::verify_factor(w, inputs.at(0));
    else if (verb == "spectrum")
      ok = verifydetail::verify_spectrum(w, inputs.at(0));
    else if (verb == "spec-factor")
      ok = verifydetail::verify_specfactor(w, inputs.at(0));
    else if (verb == "pra-check")
      ok = verifydetail::verify_pra(w, inputs.at(0));
    else
      return 3;
  } catch (const std::exception&) {
    return 1;
  }
  return ok ? 0 : 1;
}

}  // namespace laxgen
