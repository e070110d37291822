#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "laxgen/builtin_fixtures.hpp"
#include "laxgen/witness.hpp"

using namespace laxgen;

namespace {

FunctorInstance identity_instance() {
  FunctorInstance fi;
  fi.domain = fx::square_poset();
  fi.codomain = fi.domain;
  fi.functor = identity_functor(fi.domain);
  return fi;
}

InputLoader loader_for(const std::map<std::string, json>& docs) {
  return [docs](const std::string& path) -> std::optional<json> {
    auto it = docs.find(path);
    if (it == docs.end()) {
      if (auto b = builtin_document(path)) return b;
      return std::nullopt;
    }
    return it->second;
  };
}

}  // namespace

TEST_CASE("category and bicategory JSON round trips") {
  FinCat c = fx::square_poset();
  FinCat c2 = cat_from_json(cat_to_json(c));
  CHECK(c2.objects == c.objects);
  CHECK(c2.identities == c.identities);
  CHECK(c2.comp == c.comp);
  CHECK(c2.morphisms.size() == c.morphisms.size());

  auto built = span_bicategory(fx::bz2());
  const auto& sf = std::get<SpanFixture>(built);
  FinBicat b2 = bicat_from_json(bicat_to_json(sf.bicat));
  CHECK(b2.objects == sf.bicat.objects);
  CHECK(b2.hc1 == sf.bicat.hc1);
  CHECK(b2.hc2 == sf.bicat.hc2);
  CHECK(b2.assoc == sf.bicat.assoc);
  CHECK(check_bicategory(b2).empty());

  PseudoFunctor t2 = pseudofunctor_from_json(pseudofunctor_to_json(sf.inclusion));
  CHECK(t2.on_1cells == sf.inclusion.on_1cells);
  CHECK(t2.comp_cell == sf.inclusion.comp_cell);
}

TEST_CASE("copresheaf JSON round trip") {
  SetCopresheaf F = representable(fx::square_poset(), "a");
  SetCopresheaf F2 = copresheaf_from_json(copresheaf_to_json(F));
  CHECK(F2.sets == F.sets);
  CHECK(F2.actions == F.actions);
  CHECK(check_copresheaf(F2).empty());
}

TEST_CASE("witnesses are deterministic") {
  RunOptions opt;
  auto fi = identity_instance();
  auto r1 = run_familial1d("in", fi, opt);
  auto r2 = run_familial1d("in", fi, opt);
  CHECK(r1.witness.dump() == r2.witness.dump());
  CHECK(r1.exit_code == 0);
}

TEST_CASE("familial1d witness verifies and mutations fail") {
  RunOptions opt;
  auto fi = identity_instance();
  json doc = functor_instance_to_json(fi);
  auto r = run_familial1d("in", fi, opt);
  REQUIRE(r.exit_code == 0);
  auto loader = loader_for({{"in", doc}});
  CHECK(verify_witness(r.witness, loader) == 0);

  // digest mismatch is exit 3
  json bad_digest = r.witness;
  bad_digest["inputs"][0]["digest"] = "0000000000000000";
  CHECK(verify_witness(bad_digest, loader) == 3);

  // flipped verdict: "no" is re-derived and fails
  json flipped = r.witness;
  flipped["verdict"] = "no";
  flipped["counterexample"] = {{"kind", "NotFamilial"}, {"X", "a"}};
  CHECK(verify_witness(flipped, loader) == 1);

  // corrupt one witness morphism
  json mut = r.witness;
  auto& per = mut["certificates"]["per_object"];
  for (auto& entry : per) {
    for (auto& [k, v] : entry["decomposition"]["witness"].items()) {
      v[1] = "nonsense";
      break;
    }
    break;
  }
  CHECK(verify_witness(mut, loader) == 1);
}

TEST_CASE("2d witnesses verify and a batch of mutations all fail") {
  RunOptions opt;
  auto pi = *builtin_pseudo_instance("span-bz2");
  json doc = pseudo_instance_to_json(pi);
  auto loader = loader_for({{"span-bz2", doc}});

  auto wf = run_familial("span-bz2", pi, opt);
  REQUIRE(wf.exit_code == 0);
  REQUIRE(verify_witness(wf.witness, loader) == 0);

  auto wfac = run_factor("span-bz2", pi, "sp|s|s", "*", opt);
  REQUIRE(wfac.exit_code == 0);
  REQUIRE(verify_witness(wfac.witness, loader) == 0);

  auto wpra = run_pra("span-bz2", pi, opt);  // no terminal: exit 3
  CHECK(wpra.exit_code == 3);

  auto psq = *builtin_pseudo_instance("span-square-poset");
  json docsq = pseudo_instance_to_json(psq);
  auto loader2 = loader_for({{"span-square-poset", docsq}});
  auto wsp = run_spectrum("span-square-poset", psq, opt);
  REQUIRE(wsp.exit_code == 0);
  REQUIRE(verify_witness(wsp.witness, loader2) == 0);
  auto wpra2 = run_pra("span-square-poset", psq, opt);
  REQUIRE(wpra2.exit_code == 0);
  REQUIRE(verify_witness(wpra2.witness, loader2) == 0);

  int failing = 0;
  auto expect_fail = [&](json w, const InputLoader& ld) {
    if (verify_witness(w, ld) != 0) ++failing;
  };

  // 1-6: factorization record corruptions
  for (const char* field : {"fbar", "delta", "compare"}) {
    json m = wf.witness;
    m["certificates"]["factorizations"][0][field] = "nonsense";
    expect_fail(m, loader);
    json m2 = wfac.witness;
    m2["certificates"][field] = "nonsense";
    expect_fail(m2, loader);
  }
  // 7-10: generic certificate corruptions
  for (const char* field : {"h", "gamma", "nu", "alpha"}) {
    json m = wf.witness;
    m["certificates"]["generics"][0]["squares"][0][field] = "nonsense";
    expect_fail(m, loader);
  }
  // 11: drop a recorded square (completeness fails)
  {
    json m = wf.witness;
    auto& sq = m["certificates"]["generics"][0]["squares"];
    sq.erase(sq.begin());
    expect_fail(m, loader);
  }
  // 12: drop a factorization record (coverage fails)
  {
    json m = wf.witness;
    auto& fr = m["certificates"]["factorizations"];
    fr.erase(fr.begin());
    expect_fail(m, loader);
  }
  // 13: flip the familial verdict
  {
    json m = wf.witness;
    m["verdict"] = "no";
    expect_fail(m, loader);
  }
  // 14: digest mismatch
  {
    json m = wf.witness;
    m["inputs"][0]["digest"] = "ffffffffffffffff";
    expect_fail(m, loader);
  }
  // 15-17: spectrum corruptions
  {
    json m = wsp.witness;
    m["certificates"]["cell_data"].begin().value()[1] = "nonsense";
    expect_fail(m, loader2);
    json m2 = wsp.witness;
    auto it = m2["certificates"]["unit_iso"].begin();
    it.value()["components"].begin().value() = "nonsense";
    expect_fail(m2, loader2);
    json m3 = wsp.witness;
    auto rit = m3["certificates"]["reindex"].begin();
    rit.value()["on_objects"].begin().value() = "nonsense";
    expect_fail(m3, loader2);
  }
  // 18: pra verdict flip
  {
    json m = wpra2.witness;
    m["verdict"] = "no";
    expect_fail(m, loader2);
  }
  // 19-20: wrong verb / wrong schema
  {
    json m = wf.witness;
    m["verb"] = "unknown-verb";
    expect_fail(m, loader);
    json m2 = wf.witness;
    m2["schema"] = "other";
    expect_fail(m2, loader);
  }
  CHECK(failing >= 20);
}

TEST_CASE("bound exceeded is exit 2") {
  RunOptions opt;
  opt.bound_objects = 1;
  auto fi = identity_instance();
  auto r = run_familial1d("in", fi, opt);
  CHECK(r.exit_code == 2);
  CHECK(r.witness["verdict"] == "bound-exceeded");
}

TEST_CASE("invalid input is exit 3 with diagnostics") {
  RunOptions opt;
  auto fi = identity_instance();
  fi.functor.on_morphisms["ab"] = "cd";  // boundary broken
  auto r = run_familial1d("in", fi, opt);
  CHECK(r.exit_code == 3);
  CHECK(r.witness["verdict"] == "invalid");
  CHECK(r.witness.contains("diagnostics"));
}

TEST_CASE("cat copresheaf JSON round trip") {
  auto B = locally_discrete(fx::square_poset());
  auto F = representable_cat(B, "a");
  auto F2 = catcopresheaf_from_json(catcopresheaf_to_json(F));
  CHECK(check_cat_copresheaf(F2).empty());
  CHECK(F2.on_objects.size() == F.on_objects.size());
  for (const auto& [a, K] : F.on_objects)
    CHECK(F2.fiber(a).objects == K.objects);
  for (const auto& [c, n] : F.on_2cells)
    CHECK(F2.f2(c).components == n.components);
}

TEST_CASE("familial witness carries the M_X tables and slice equivalences") {
  RunOptions opt;
  auto pi = *builtin_pseudo_instance("span-square-poset");
  auto r = run_familial("span-square-poset", pi, opt);
  REQUIRE(r.exit_code == 0);
  const auto& certs = r.witness["certificates"];
  CHECK(certs.contains("m_x"));
  CHECK(certs["m_x"].size() == 4);
  // the slice equivalences are found for every object
  CHECK(certs["slice_equivalences"].size() == 4);
}

TEST_CASE("m_x and slice-equivalence tampering is detected") {
  RunOptions opt;
  auto pi = *builtin_pseudo_instance("span-square-poset");
  json doc = pseudo_instance_to_json(pi);
  auto loader = loader_for({{"span-square-poset", doc}});
  auto r = run_familial("span-square-poset", pi, opt);
  REQUIRE(r.exit_code == 0);
  REQUIRE(verify_witness(r.witness, loader) == 0);

  json m1 = r.witness;
  // swap a morphism id inside one M_X table for a non-generic one
  auto& mx = m1["certificates"]["m_x"];
  auto it = mx.begin();
  it.value()["objects"][0] = "bogus|object";
  CHECK(verify_witness(m1, loader) == 1);

  json m2 = r.witness;
  auto& se = m2["certificates"]["slice_equivalences"];
  se.begin().value()["equivalence"]["on_objects"].begin().value() = "zz";
  CHECK(verify_witness(m2, loader) == 1);
}

TEST_CASE("spectrum and spec-factor deep fields are tamper-checked") {
  RunOptions opt;
  auto psq = *builtin_pseudo_instance("span-square-poset");
  json docsq = pseudo_instance_to_json(psq);
  auto loader = loader_for({{"span-square-poset", docsq}});

  auto wsp = run_spectrum("span-square-poset", psq, opt);
  REQUIRE(verify_witness(wsp.witness, loader) == 0);
  {
    json m = wsp.witness;
    m["certificates"]["comp_iso"][0][2]["components"].begin().value() = "zz";
    CHECK(verify_witness(m, loader) == 1);
  }
  {
    json m = wsp.witness;
    auto it = m["certificates"]["terminal_iso"].begin();
    it.value()["on_objects"].begin().value() = "zz";
    CHECK(verify_witness(m, loader) == 1);
  }

  auto pbz = *builtin_pseudo_instance("span-bz2");
  json docbz = pseudo_instance_to_json(pbz);
  auto loader2 = loader_for({{"span-bz2", docbz}});
  auto wsf = run_specfactor("span-bz2", pbz, opt);
  REQUIRE(verify_witness(wsf.witness, loader2) == 0);
  {
    json m = wsf.witness;
    m["certificates"]["G"]["on_objects"].begin().value() = "zz";
    CHECK(verify_witness(m, loader2) == 1);
  }
  {
    json m = wsf.witness;
    m["certificates"]["tight"].erase(0);
    CHECK(verify_witness(m, loader2) == 1);
  }

  auto fid = identity_instance();
  json dfi = functor_instance_to_json(fid);
  auto loader3 = loader_for({{"in", dfi}});
  auto w1 = run_familial1d("in", fid, opt);
  REQUIRE(verify_witness(w1.witness, loader3) == 0);
  {
    json m = w1.witness;
    auto& d =
        m["certificates"]["per_object"][0]["decomposition"]["family"];
    d.begin().value() = "zz";
    CHECK(verify_witness(m, loader3) == 1);
  }
}
