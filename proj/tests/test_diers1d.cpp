#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "laxgen/diers1d.hpp"
#include "oracles.hpp"

using namespace laxgen;

namespace {

// F on the walking arrow: F(a) = {x}, F(b) = {y, z}, F f(x) = y.
SetCopresheaf arrow_copresheaf() {
  SetCopresheaf F;
  F.base = fx::walking_arrow();
  F.sets["a"] = {"x"};
  F.sets["b"] = {"y", "z"};
  F.actions["1a"] = {{"x", "x"}};
  F.actions["1b"] = {{"y", "y"}, {"z", "z"}};
  F.actions["f"] = {{"x", "y"}};
  return F;
}

}  // namespace

TEST_CASE("copresheaf validation") {
  CHECK(check_copresheaf(arrow_copresheaf()).empty());
  CHECK(check_copresheaf(representable(fx::square_poset(), "a")).empty());
  CHECK(check_copresheaf(constant_singleton(fx::walking_cospan())).empty());

  SetCopresheaf bad = arrow_copresheaf();
  bad.actions["f"]["x"] = "x";  // out of range
  CHECK(!check_copresheaf(bad).empty());
}

TEST_CASE("category of elements") {
  // constant singleton: el F isomorphic to the base
  SetCopresheaf c1 = constant_singleton(fx::square_poset());
  auto el1 = category_of_elements(c1);
  CHECK(check_category(el1.cat).empty());
  CHECK(find_cat_iso(el1.cat, fx::square_poset()).has_value());

  // representable: (P, id) has exactly one morphism to every object
  FinCat sq = fx::square_poset();
  auto el2 = category_of_elements(representable(sq, "a"));
  CHECK(check_category(el2.cat).empty());
  Id pid = el_ob("a", "1a");
  for (const auto& o : el2.cat.objects) CHECK(el2.cat.hom_size(pid, o) == 1);

  // walking-arrow example: 3 objects, one non-identity morphism
  auto el3 = category_of_elements(arrow_copresheaf());
  CHECK(el3.cat.objects.size() == 3);
  int nonid = 0;
  for (const auto& [id, m] : el3.cat.morphisms)
    if (!el3.cat.is_identity(id)) ++nonid;
  CHECK(nonid == 1);
  CHECK(el3.cat.hom_size(el_ob("a", "x"), el_ob("b", "y")) == 1);
  CHECK(el3.cat.hom_size(el_ob("a", "x"), el_ob("b", "z")) == 0);
  CHECK(check_functor(el3.projection, el3.cat, fx::walking_arrow()).empty());
}

TEST_CASE("el-generic objects in dimension one") {
  FinCat sq = fx::square_poset();
  auto g1 = el_generics_1d(representable(sq, "b"));
  CHECK(g1 == std::vector<Id>{el_ob("b", "1b")});

  auto g2 = el_generics_1d(arrow_copresheaf());
  CHECK(g2 == std::vector<Id>{el_ob("a", "x"), el_ob("b", "z")});

  auto g3 = el_generics_1d(constant_singleton(fx::walking_cospan()));
  CHECK(g3.empty());
}

TEST_CASE("decompose_coproduct with verification") {
  auto d1 = decompose_coproduct(representable(fx::square_poset(), "c"));
  REQUIRE(d1.decomposition.has_value());
  CHECK(d1.decomposition->index.size() == 1);
  CHECK(verify_decomposition(representable(fx::square_poset(), "c"),
                             *d1.decomposition));

  auto d2 = decompose_coproduct(arrow_copresheaf());
  REQUIRE(d2.decomposition.has_value());
  CHECK(d2.decomposition->index.size() == 2);
  std::set<Id> family;
  for (const auto& [m, p] : d2.decomposition->family) family.insert(p);
  CHECK(family == std::set<Id>{"a", "b"});
  CHECK(verify_decomposition(arrow_copresheaf(), *d2.decomposition));

  auto d3 = decompose_coproduct(constant_singleton(fx::walking_cospan()));
  CHECK(!d3.decomposition.has_value());
  CHECK(d3.components_without_initial.size() == 1);
}

TEST_CASE("decompose agrees with the brute-force oracle on fixtures") {
  std::vector<SetCopresheaf> cases = {
      arrow_copresheaf(),
      representable(fx::square_poset(), "a"),
      representable(fx::bz2(), "*"),
      constant_singleton(fx::walking_cospan()),
      constant_singleton(fx::square_poset()),
      constant_singleton(fx::parallel_pair()),
  };
  for (const auto& F : cases) {
    bool ours = decompose_coproduct(F).decomposition.has_value();
    bool oracle = oracles::decompose_brute_force(F).has_value();
    CHECK(ours == oracle);
  }
}

TEST_CASE("decompose success iff generics meet every component") {
  std::vector<SetCopresheaf> cases = {
      arrow_copresheaf(), representable(fx::square_poset(), "d"),
      constant_singleton(fx::walking_cospan()),
      constant_singleton(fx::bz2())};
  for (const auto& F : cases) {
    auto el = category_of_elements(F);
    auto rep = components_and_initials(el.cat);
    auto gens = el_generics_1d(F);
    std::set<Id> gen_set(gens.begin(), gens.end());
    bool every_component_met = true;
    for (const auto& comp : rep.components) {
      bool met = false;
      for (const auto& o : comp)
        if (gen_set.count(o)) met = true;
      if (!met) every_component_met = false;
    }
    CHECK(decompose_coproduct(F).decomposition.has_value() ==
          every_component_met);
  }
}

TEST_CASE("el-generic morphisms between generics are invertible and unique") {
  std::vector<SetCopresheaf> cases = {arrow_copresheaf(),
                                      representable(fx::bz2(), "*"),
                                      representable(fx::square_poset(), "a")};
  for (const auto& F : cases) {
    auto el = category_of_elements(F);
    auto gens = el_generics_1d(F);
    for (const auto& g1 : gens)
      for (const auto& g2 : gens) {
        auto h = el.cat.hom(g1, g2);
        CHECK(h.size() <= 1);
        for (const auto& m : h) CHECK(el.cat.is_iso(m));
      }
  }
}

TEST_CASE("generic factorizations for functors") {
  FinCat sq = fx::square_poset();
  FinFunctor idf = identity_functor(sq);

  // identity functor: every morphism factors with delta = id
  auto f1 = generic_factorization_1d(idf, sq, sq, "ad", "d");
  REQUIRE(f1.has_value());
  CHECK(f1->generic == "1a");
  CHECK(f1->fbar == "ad");
  CHECK(is_generic_1d(idf, sq, sq, "1a", "a"));

  // non-invertible morphisms are not generic for the identity functor
  CHECK(!is_generic_1d(idf, sq, sq, "ad", "d"));
}

TEST_CASE("familiality verdicts") {
  FinCat sq = fx::square_poset();
  FinFunctor idf = identity_functor(sq);
  CHECK(is_familial_1d(idf, sq, sq).familial);

  // constant functor from the walking cospan: B(x, T-) is a constant
  // singleton on the cospan, hence not familial
  FinCat wc = fx::walking_cospan();
  FinCat wa = fx::walking_arrow();
  FinFunctor cnst;
  for (const auto& o : wc.objects) cnst.on_objects[o] = "b";
  for (const auto& [id, m] : wc.morphisms) cnst.on_morphisms[id] = "1b";
  REQUIRE(check_functor(cnst, wc, wa).empty());
  auto v = is_familial_1d(cnst, wc, wa);
  CHECK(!v.familial);
  CHECK(v.failing_object == "a");
}

TEST_CASE("Diers factorization for the identity functor") {
  FinCat wa = fx::walking_arrow();
  FinFunctor idf = identity_functor(wa);
  auto d = diers_factorization(idf, wa, wa);
  REQUIRE(d.has_value());
  CHECK(check_category(d->mid).empty());
  CHECK(check_functor(d->G, wa, d->mid).empty());
  CHECK(check_functor(d->V, d->mid, wa).empty());
  // V . G == T on the nose
  auto VG = compose_functors(d->V, d->G);
  CHECK(VG.on_objects == idf.on_objects);
  CHECK(VG.on_morphisms == idf.on_morphisms);
  // M is isomorphic to the base for the identity functor
  CHECK(find_cat_iso(d->mid, wa).has_value());
  CHECK(verify_discrete_fibration_1d(*d, wa));
}

TEST_CASE("Diers factorization fails for the constant-cospan functor") {
  FinCat wc = fx::walking_cospan();
  FinCat wa = fx::walking_arrow();
  FinFunctor cnst;
  for (const auto& o : wc.objects) cnst.on_objects[o] = "b";
  for (const auto& [id, m] : wc.morphisms) cnst.on_morphisms[id] = "1b";
  CHECK(!diers_factorization(cnst, wc, wa).has_value());
}

TEST_CASE("unit components are universal arrows") {
  FinCat sq = fx::square_poset();
  FinFunctor idf = identity_functor(sq);
  auto d = diers_factorization(idf, sq, sq);
  REQUIRE(d.has_value());
  for (const auto& m : d->mid.objects) {
    REQUIRE(d->unit.count(m));
    const Id& u = d->unit.at(m);
    CHECK(d->mid.dom(u) == m);
    // the recorded universality tables re-check by direct evaluation
    for (const auto& [target_mor, ell] : d->universality.at(m))
      CHECK(d->mid.compose(d->G.mo(ell), u) == target_mor);
  }
}

#include "laxgen/gen.hpp"

TEST_CASE("seeded corpus: decompose iff generics meet every component") {
  Rng rng(0xd1e25u);
  int cases = 0;
  while (cases < 40) {
    FinCat base = gen_thin_category(rng, 5);
    auto F = gen_copresheaf_thin(rng, base, 3);
    if (!check_copresheaf(F).empty()) continue;
    ++cases;
    auto el = category_of_elements(F);
    CHECK(check_functor(el.projection, el.cat, F.base).empty());
    auto rep = components_and_initials(el.cat);
    auto gens = el_generics_1d(F);
    std::set<Id> gen_set(gens.begin(), gens.end());
    bool all_met = true;
    for (const auto& comp : rep.components) {
      bool met = false;
      for (const auto& o : comp)
        if (gen_set.count(o)) met = true;
      if (!met) all_met = false;
    }
    auto out = decompose_coproduct(F);
    CHECK(out.decomposition.has_value() == all_met);
    if (out.decomposition) CHECK(verify_decomposition(F, *out.decomposition));
  }
  for (int i = 0; i < 15; ++i) {
    auto F = gen_copresheaf_z2(rng, fx::bz2(), 4);
    auto out = decompose_coproduct(F);
    if (out.decomposition) CHECK(verify_decomposition(F, *out.decomposition));
    // generic elements are exactly the non-fixed points of the involution,
    // one per orbit; cross-check against initial-object search
    auto el = category_of_elements(F);
    auto repc = components_and_initials(el.cat);
    auto gens = el_generics_1d(F);
    std::set<Id> gen_set(gens.begin(), gens.end());
    for (size_t k = 0; k < repc.components.size(); ++k)
      for (const auto& o : repc.components[k]) {
        bool initial = std::find(repc.initials[k].begin(),
                                 repc.initials[k].end(),
                                 o) != repc.initials[k].end();
        CHECK(initial == (gen_set.count(o) != 0));
      }
  }
}

TEST_CASE("seeded corpus: generic factorizations re-check") {
  Rng rng(0xfac7u);
  int cases = 0;
  while (cases < 12) {
    FinCat base = gen_thin_category(rng, 4);
    ++cases;
    FinFunctor idf = identity_functor(base);
    for (const auto& [fid, m] : base.morphisms) {
      auto gf = generic_factorization_1d(idf, base, base, fid, m.cod);
      REQUIRE(gf.has_value());
      CHECK(base.compose(idf.mo(gf->fbar), gf->generic) == fid);
      CHECK(is_generic_1d(idf, base, base, gf->generic, gf->mid));
    }
  }
}
