#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "laxgen/bicat.hpp"
#include "laxgen/constructions.hpp"

using namespace laxgen;

TEST_CASE("locally discrete bicategories") {
  FinBicat t = locally_discrete(fx::terminal_cat());
  CHECK(t.objects.size() == 1);
  CHECK(t.hom("*", "*").objects.size() == 1);
  CHECK(t.hom("*", "*").morphisms.size() == 1);
  CHECK(check_bicategory(t).empty());

  CHECK(check_bicategory(locally_discrete(fx::square_poset())).empty());
  CHECK(check_bicategory(locally_discrete(fx::bz2())).empty());
  CHECK(check_bicategory(locally_discrete(fx::walking_cospan())).empty());
}

TEST_CASE("duals are involutions on tables") {
  for (const FinCat& c : {fx::walking_arrow(), fx::bz2()}) {
    FinBicat B = locally_discrete(c);
    FinBicat opop = dual_op(dual_op(B));
    CHECK(opop.objects == B.objects);
    CHECK(opop.hc1 == B.hc1);
    CHECK(opop.hc2 == B.hc2);
    CHECK(opop.assoc == B.assoc);
    CHECK(opop.lun == B.lun);
    CHECK(opop.run == B.run);
    FinBicat coco = dual_co(dual_co(B));
    CHECK(coco.hc1 == B.hc1);
    CHECK(coco.assoc == B.assoc);
    for (const auto& [ab, H] : coco.homs) {
      CHECK(H.morphisms.size() == B.homs.at(ab).morphisms.size());
      for (const auto& [m, mm] : H.morphisms) {
        CHECK(B.homs.at(ab).dom(m) == mm.dom);
        CHECK(B.homs.at(ab).cod(m) == mm.cod);
      }
    }
    CHECK(check_bicategory(dual_op(B)).empty());
    CHECK(check_bicategory(dual_co(B)).empty());
  }
}

TEST_CASE("span bicategory over the square poset validates exhaustively") {
  auto built = span_bicategory(fx::square_poset());
  REQUIRE(std::holds_alternative<SpanFixture>(built));
  const auto& fx_ = std::get<SpanFixture>(built);
  auto ds = check_bicategory(fx_.bicat);
  for (const auto& d : ds) MESSAGE(d.code, ": ", d.detail);
  CHECK(ds.empty());
  // hom(a,d) has exactly one span (apex a)
  CHECK(fx_.bicat.hom("a", "d").objects.size() == 1);
  // hom(d,d) has one span per object (poset: both legs forced)
  CHECK(fx_.bicat.hom("d", "d").objects.size() == 4);
}

TEST_CASE("span bicategory over B(Z2) validates; homs are as enumerated") {
  auto built = span_bicategory(fx::bz2());
  REQUIRE(std::holds_alternative<SpanFixture>(built));
  const auto& fx_ = std::get<SpanFixture>(built);
  auto ds = check_bicategory(fx_.bicat);
  for (const auto& d : ds) MESSAGE(d.code, ": ", d.detail);
  CHECK(ds.empty());
  // 4 spans; 8 span morphisms
  CHECK(fx_.bicat.hom("*", "*").objects.size() == 4);
  CHECK(fx_.bicat.hom("*", "*").morphisms.size() == 8);
  int nonid = 0;
  for (const auto& [m, mm] : fx_.bicat.hom("*", "*").morphisms)
    if (!fx_.bicat.hom("*", "*").is_identity(m)) ++nonid;
  CHECK(nonid == 4);
}

TEST_CASE("independent pentagon oracle on the poset span bicategory") {
  auto built = span_bicategory(fx::square_poset());
  const auto& B = std::get<SpanFixture>(built).bicat;
  int instances = 0;
  for (const auto& a : B.objects)
    for (const auto& b : B.objects)
      for (const auto& c : B.objects)
        for (const auto& d : B.objects)
          for (const auto& e : B.objects)
            for (const auto& f : B.onecells(a, b))
              for (const auto& g : B.onecells(b, c))
                for (const auto& h : B.onecells(c, d))
                  for (const auto& k : B.onecells(d, e)) {
                    Id kh = B.c1(k, h), hg = B.c1(h, g), gf = B.c1(g, f);
                    Id p1 = B.vcomp(B.assoc.at({k, h, gf}),
                                    B.assoc.at({kh, g, f}));
                    Id p2 = B.vcomp(
                        B.c2(B.id2(k), B.assoc.at({h, g, f})),
                        B.vcomp(B.assoc.at({k, hg, f}),
                                B.c2(B.assoc.at({k, h, g}), B.id2(f))));
                    CHECK(p1 == p2);
                    ++instances;
                  }
  CHECK(instances > 0);
}

TEST_CASE("corrupting an associator component breaks the pentagon") {
  REQUIRE(check_bicategory(fx::sigma_z2()).empty());
  FinBicat B = fx::sigma2_z2();
  REQUIRE(check_bicategory(B).empty());
  // replace the associator by the other invertible parallel 2-cell
  B.assoc[{"v", "v", "v"}] = "sv";
  auto ds = check_bicategory(B);
  REQUIRE(!ds.empty());
  bool pentagon = false;
  for (const auto& d : ds) {
    if (d.code == "PentagonViolation") pentagon = true;
    CHECK(d.code != "TriangleViolation");
  }
  CHECK(pentagon);
}

TEST_CASE("pseudofunctor validation") {
  FinBicat B = locally_discrete(fx::square_poset());
  CHECK(check_pseudofunctor(identity_pseudofunctor(B), B, B).empty());

  auto built = span_bicategory(fx::square_poset());
  const auto& fx_ = std::get<SpanFixture>(built);
  auto ds = check_pseudofunctor(fx_.inclusion, fx_.domain, fx_.bicat);
  for (const auto& d : ds) MESSAGE(d.code, ": ", d.detail);
  CHECK(ds.empty());

  auto built2 = span_bicategory(fx::bz2());
  const auto& fx2 = std::get<SpanFixture>(built2);
  CHECK(check_pseudofunctor(fx2.inclusion, fx2.domain, fx2.bicat).empty());

  // corrupting one comp cell must be caught
  FinBicat Z = fx::sigma_z2();
  PseudoFunctor bad = identity_pseudofunctor(Z);
  REQUIRE(check_pseudofunctor(bad, Z, Z).empty());
  bad.comp_cell[{"u", "u"}] = "s";
  auto ds2 = check_pseudofunctor(bad, Z, Z);
  REQUIRE(!ds2.empty());
  bool coherence = false;
  for (const auto& d : ds2)
    if (d.code == "CoherenceViolation") coherence = true;
  CHECK(coherence);
}

TEST_CASE("oplax slice of the locally discrete walking arrow over b") {
  FinBicat B = locally_discrete(fx::walking_arrow());
  auto S = oplax_slice(B, "b");
  CHECK(S.bicat.objects.size() == 2);  // f and 1b
  auto ds = check_bicategory(S.bicat);
  for (const auto& d : ds) MESSAGE(d.code, ": ", d.detail);
  CHECK(ds.empty());
  // direct enumeration of (m, alpha) pairs:
  // f -> 1b : one; f -> f : identity; 1b -> 1b : identity; 1b -> f : none
  size_t total_onecells = 0;
  for (const auto& [ab, H] : S.bicat.homs) total_onecells += H.objects.size();
  CHECK(total_onecells == 3);
  CHECK(S.tight.size() == 3);
}

TEST_CASE("oplax slice over a genuinely 2-dimensional base") {
  auto built = span_bicategory(fx::bz2());
  const auto& fx_ = std::get<SpanFixture>(built);
  auto S = oplax_slice(fx_.bicat, "*");
  auto ds = check_bicategory(S.bicat);
  for (const auto& d : ds) MESSAGE(d.code, ": ", d.detail);
  CHECK(ds.empty());
  for (const auto& [id, data] : S.onecell_data) {
    bool inv = fx_.bicat.invertible2(data.second);
    CHECK(inv == (S.tight.count(id) != 0));
  }
}

TEST_CASE("mixed left liftings in a locally discrete bicategory") {
  FinBicat B = locally_discrete(fx::square_poset());
  auto out = mixed_left_lifting(B, "ad", "bd");
  REQUIRE(out.witness.has_value());
  CHECK(out.witness->h == "ab");
  CHECK(out.witness->strong);

  FinBicat C = locally_discrete(fx::walking_cospan());
  auto out2 = mixed_left_lifting(C, "f", "g");
  CHECK(!out2.witness.has_value());
  CHECK(out2.error == LiftError::NoLifting);
}

TEST_CASE("duals of a genuinely 2-dimensional bicategory validate") {
  auto built = span_bicategory(fx::bz2());
  const auto& B = std::get<SpanFixture>(built).bicat;
  FinBicat op = dual_op(B);
  FinBicat co = dual_co(B);
  auto d1 = check_bicategory(op);
  for (const auto& d : d1) MESSAGE(d.code, ": ", d.detail);
  CHECK(d1.empty());
  auto d2 = check_bicategory(co);
  for (const auto& d : d2) MESSAGE(d.code, ": ", d.detail);
  CHECK(d2.empty());
  // involutions on the nose
  FinBicat opop = dual_op(op);
  CHECK(opop.hc1 == B.hc1);
  CHECK(opop.hc2 == B.hc2);
  CHECK(opop.assoc == B.assoc);
  CHECK(opop.lun == B.lun);
  CHECK(opop.run == B.run);
  FinBicat coco = dual_co(co);
  CHECK(coco.assoc == B.assoc);
  CHECK(coco.lun == B.lun);
  CHECK(coco.run == B.run);
  for (const auto& [ab, H] : coco.homs) {
    CHECK(H.comp == B.homs.at(ab).comp);
    for (const auto& [m, mm] : H.morphisms) {
      CHECK(B.homs.at(ab).dom(m) == mm.dom);
      CHECK(B.homs.at(ab).cod(m) == mm.cod);
    }
  }
}
