#pragma once

// Cat-valued copresheaves on a finite bicategory, their bicategories of
// elements, strong mixed left liftings, lax el-generic objects and
// morphisms, the indexing category M^F with its reindexing assignment,
// the Lambda embeddings, and the lax-conical-colimit-of-representables
// decision procedure.

#include <optional>

#include "laxgen/bicat.hpp"
#include "laxgen/diers1d.hpp"

namespace laxgen {

// ---------------------------------------------------------------------------
// CatCopresheaf

struct CatCopresheaf {
  FinBicat base;
  std::map<Id, FinCat> on_objects;
  std::map<Id, FinFunctor> on_1cells;
  std::map<Id, NatTrans> on_2cells;
  std::map<std::pair<Id, Id>, NatTrans> comp_iso;  // (g,f): Fg.Ff => F(gf)
  std::map<Id, NatTrans> unit_iso;                 // A: Id => F(1_A)

  const FinCat& fiber(const Id& a) const { return on_objects.at(a); }
  const FinFunctor& f1(const Id& f) const { return on_1cells.at(f); }
  const NatTrans& f2(const Id& c) const { return on_2cells.at(c); }
};

inline Diags check_cat_copresheaf(const CatCopresheaf& F) {
  Diags ds = check_bicategory(F.base);
  if (!ds.empty()) return ds;
  const FinBicat& B = F.base;
  for (const auto& a : B.objects) {
    if (!F.on_objects.count(a)) {
      ds.push_back({"MissingFiber", a});
      continue;
    }
    auto dd = check_category(F.fiber(a));
    for (auto& d : dd) ds.push_back({d.code, "fiber " + a + ": " + d.detail});
  }
  if (!ds.empty()) return ds;
  for (const auto& [f, ab] : B.home1) {
    if (!F.on_1cells.count(f)) {
      ds.push_back({"MissingFunctor", f});
      continue;
    }
    auto dd = check_functor(F.f1(f), F.fiber(ab.first), F.fiber(ab.second));
    for (auto& d : dd) ds.push_back({d.code, "F(" + f + "): " + d.detail});
  }
  if (!ds.empty()) return ds;
  for (const auto& [c, ab] : B.home2) {
    if (!F.on_2cells.count(c)) {
      ds.push_back({"MissingNat", c});
      continue;
    }
    auto dd = check_nat(F.f2(c), F.f1(B.src2(c)), F.f1(B.dst2(c)),
                        F.fiber(ab.first), F.fiber(ab.second));
    for (auto& d : dd) ds.push_back({d.code, "F(" + c + "): " + d.detail});
  }
  if (!ds.empty()) return ds;

  // local functoriality of the hom actions
  for (const auto& [ab, H] : B.homs) {
    const FinCat& D = F.fiber(ab.second);
    const FinCat& C0 = F.fiber(ab.first);
    for (const auto& f : H.objects) {
      NatTrans idn = identity_nat(F.f1(f), C0, D);
      if (F.f2(H.id_of(f)).components != idn.components)
        ds.push_back({"LocalIdentityNotPreserved", f});
    }
    for (const auto& [c2, m2] : H.morphisms)
      for (const auto& [c1, m1] : H.morphisms) {
        if (m2.dom != m1.cod) continue;
        NatTrans lhs = F.f2(H.compose(c2, c1));
        NatTrans rhs = nat_vcomp(F.f2(c2), F.f2(c1), C0, D);
        if (lhs.components != rhs.components)
          ds.push_back({"LocalCompositionNotPreserved", c2 + "." + c1});
      }
  }
  if (!ds.empty()) return ds;

  // comparison isos: presence, invertibility, naturality, coherence
  for (const auto& [p, gf] : B.hc1) {
    const auto& [g, f] = p;
    auto it = F.comp_iso.find(p);
    if (it == F.comp_iso.end()) {
      ds.push_back({"MissingCompIso", g + "," + f});
      continue;
    }
    const FinCat& C0 = F.fiber(B.src1(f));
    const FinCat& D = F.fiber(B.dst1(g));
    auto GF = compose_functors(F.f1(g), F.f1(f));
    auto dd = check_nat(it->second, GF, F.f1(gf), C0, D);
    for (auto& d : dd) ds.push_back({d.code, "comp(" + g + "," + f + "): " + d.detail});
    if (!nat_inverse(it->second, C0, D))
      ds.push_back({"NonInvertibleConstraint", "comp(" + g + "," + f + ")"});
  }
  for (const auto& a : B.objects) {
    auto it = F.unit_iso.find(a);
    if (it == F.unit_iso.end()) {
      ds.push_back({"MissingUnitIso", a});
      continue;
    }
    const FinCat& C0 = F.fiber(a);
    auto dd = check_nat(it->second, identity_functor(C0), F.f1(B.unit1.at(a)),
                        C0, C0);
    for (auto& d : dd) ds.push_back({d.code, "unit(" + a + "): " + d.detail});
    if (!nat_inverse(it->second, C0, C0))
      ds.push_back({"NonInvertibleConstraint", "unit(" + a + ")"});
  }
  if (!ds.empty()) return ds;

  // naturality of comp_iso in both 2-cell arguments:
  // F(mu * nu) . comp(g,f) = comp(g',f') . (Fmu hcomp Fnu)
  for (const auto& [mu, hmu] : B.home2)
    for (const auto& [nu, hnu] : B.home2) {
      if (hmu.first != hnu.second) continue;
      const Id g = B.src2(mu), g2 = B.dst2(mu);
      const Id f = B.src2(nu), f2 = B.dst2(nu);
      if (!B.has_hc2(mu, nu)) continue;
      const FinCat& C0 = F.fiber(hnu.first);
      const FinCat& D = F.fiber(hmu.second);
      NatTrans lhs = nat_vcomp(F.f2(B.c2(mu, nu)), F.comp_iso.at({g, f}), C0, D);
      NatTrans hh = nat_hcomp(F.f2(mu), F.f1(g2), F.f2(nu), F.f1(f), C0, D);
      NatTrans rhs = nat_vcomp(F.comp_iso.at({g2, f2}), hh, C0, D);
      if (lhs.components != rhs.components)
        ds.push_back({"CoherenceViolation", "comp naturality " + mu + "," + nu});
    }
  if (!ds.empty()) return ds;

  // associativity coherence (the target is strict):
  // F(a_{h,g,f}) . comp(hg,f) . (comp(h,g) pre-whiskered by Ff)
  //   = comp(h,gf) . (Fh post-whiskered comp(g,f))
  for (const auto& [t, aA] : B.assoc) {
    const auto& [h, g, f] = t;
    if (!B.has_hc1(h, g) || !B.has_hc1(g, f)) continue;
    const Id hg = B.c1(h, g), gf = B.c1(g, f);
    const FinCat& C0 = F.fiber(B.src1(f));
    const FinCat& D = F.fiber(B.dst1(h));
    NatTrans lhs = nat_vcomp(
        F.f2(aA),
        nat_vcomp(F.comp_iso.at({hg, f}),
                  nat_whisker_pre(F.comp_iso.at({h, g}), F.f1(f), C0), C0, D),
        C0, D);
    NatTrans rhs = nat_vcomp(
        F.comp_iso.at({h, gf}),
        nat_whisker_post(F.f1(h), F.comp_iso.at({g, f}), C0), C0, D);
    if (lhs.components != rhs.components)
      ds.push_back({"CoherenceViolation", "hexagon (" + h + "," + g + "," + f + ")"});
  }
  if (!ds.empty()) return ds;

  // unit coherence
  for (const auto& [f, ab] : B.home1) {
    const Id ia = B.unit1.at(ab.first), ib = B.unit1.at(ab.second);
    const FinCat& C0 = F.fiber(ab.first);
    const FinCat& D = F.fiber(ab.second);
    if (B.lun.count(f) && F.comp_iso.count({ib, f})) {
      NatTrans lhs = nat_vcomp(
          F.f2(B.lun.at(f)),
          nat_vcomp(F.comp_iso.at({ib, f}),
                    nat_whisker_pre(F.unit_iso.at(ab.second), F.f1(f), C0), C0,
                    D),
          C0, D);
      NatTrans idn = identity_nat(F.f1(f), C0, D);
      if (lhs.components != idn.components)
        ds.push_back({"CoherenceViolation", "left unit at " + f});
    }
    if (B.run.count(f) && F.comp_iso.count({f, ia})) {
      NatTrans rhs = nat_vcomp(
          F.f2(B.run.at(f)),
          nat_vcomp(F.comp_iso.at({f, ia}),
                    nat_whisker_post(F.f1(f), F.unit_iso.at(ab.first), C0), C0,
                    D),
          C0, D);
      NatTrans idn = identity_nat(F.f1(f), C0, D);
      if (rhs.components != idn.components)
        ds.push_back({"CoherenceViolation", "right unit at " + f});
    }
  }
  return ds;
}

// A Set-copresheaf as a Cat-copresheaf with discrete fibers over the
// locally discrete base.
inline CatCopresheaf to_cat_copresheaf(const SetCopresheaf& F0) {
  CatCopresheaf F;
  F.base = locally_discrete(F0.base);
  for (const auto& a : F0.base.objects) {
    FinCat K;
    for (const auto& x : F0.fiber(a)) {
      K.add_object(x);
      K.add_mor(join_id({"i", x}), x, x);
      K.identities[x] = join_id({"i", x});
      K.comp[{join_id({"i", x}), join_id({"i", x})}] = join_id({"i", x});
    }
    F.on_objects[a] = K;
  }
  for (const auto& [fid, m] : F0.base.morphisms) {
    FinFunctor G;
    for (const auto& x : F0.fiber(m.dom)) {
      G.on_objects[x] = F0.act(fid, x);
      G.on_morphisms[join_id({"i", x})] = join_id({"i", F0.act(fid, x)});
    }
    F.on_1cells[fid] = G;
    F.on_2cells[ld_twocell(fid)] =
        identity_nat(G, F.fiber(m.dom), F.fiber(m.cod));
  }
  for (const auto& [p, gf] : F.base.hc1) {
    const auto& [g, f] = p;
    auto GF = compose_functors(F.f1(g), F.f1(f));
    F.comp_iso[p] = identity_nat(GF, F.fiber(F.base.src1(f)),
                                 F.fiber(F.base.dst1(g)));
  }
  for (const auto& a : F0.base.objects)
    F.unit_iso[a] = identity_nat(identity_functor(F.fiber(a)), F.fiber(a),
                                 F.fiber(a));
  return F;
}

// Constant copresheaf at a category K.
inline CatCopresheaf constant_cat_copresheaf(const FinBicat& B, const FinCat& K) {
  CatCopresheaf F;
  F.base = B;
  for (const auto& a : B.objects) F.on_objects[a] = K;
  FinFunctor idk = identity_functor(K);
  for (const auto& [f, ab] : B.home1) F.on_1cells[f] = idk;
  for (const auto& [c, ab] : B.home2)
    F.on_2cells[c] = identity_nat(idk, K, K);
  for (const auto& [p, gf] : B.hc1)
    F.comp_iso[p] = identity_nat(idk, K, K);
  for (const auto& a : B.objects) F.unit_iso[a] = identity_nat(idk, K, K);
  return F;
}

// ---------------------------------------------------------------------------
// Bicategory of elements

struct ElBicat {
  FinBicat bicat;
  PseudoFunctor projection;
  std::map<Id, std::pair<Id, Id>> ob_data;   // el object -> (A, x)
  std::map<Id, std::pair<Id, Id>> one_data;  // el 1-cell -> (f, alpha)
  std::map<Id, Id> two_data;                 // el 2-cell -> nu

  bool opcartesian(const CatCopresheaf& F, const Id& el1) const {
    const auto& [f, alpha] = one_data.at(el1);
    const FinCat& fib = F.fiber(F.base.dst1(f));
    return fib.is_iso(alpha);
  }
};

inline Id elb_ob(const Id& A, const Id& x) { return join_id({A, x}); }

inline ElBicat el_bicategory(const CatCopresheaf& F) {
  ElBicat el;
  const FinBicat& B = F.base;
  FinBicat& E = el.bicat;
  E.total = B.total;

  for (const auto& A : B.objects)
    for (const auto& x : F.fiber(A).objects) {
      Id o = elb_ob(A, x);
      E.objects.push_back(o);
      el.ob_data[o] = {A, x};
      el.projection.on_objects[o] = A;
    }
  std::sort(E.objects.begin(), E.objects.end());

  // cell ids are assigned sequentially per hom (deterministic order);
  // lookup of a cell by its content goes through a side index
  size_t onecount = 0, twocount = 0;
  std::map<std::tuple<Id, Id, Id>, Id> one_index;  // (f, alpha, x) -> id
  std::map<std::tuple<Id, Id, Id>, Id> two_index;  // (nu, src, tgt) -> id
  auto elb_one = [&](const Id& f, const Id& alpha, const Id& x) -> Id {
    return one_index.at({f, alpha, x});
  };
  auto elb_two = [&](const Id& nu, const Id& src, const Id& tgt) -> Id {
    return two_index.at({nu, src, tgt});
  };

  // hom categories
  for (const auto& o1 : E.objects)
    for (const auto& o2 : E.objects) {
      const auto& [A, x] = el.ob_data[o1];
      const auto& [Bo, y] = el.ob_data[o2];
      FinCat H;
      for (const auto& f : B.onecells(A, Bo)) {
        const FinCat& fib = F.fiber(Bo);
        for (const auto& alpha : fib.hom(F.f1(f).ob(x), y)) {
          Id c = "c" + std::to_string(onecount++);
          one_index[{f, alpha, x}] = c;
          H.add_object(c);
          el.one_data[c] = {f, alpha};
          el.projection.on_1cells[c] = f;
        }
      }
      // 2-cells: nu : f => g with beta . (F nu)_x = alpha
      for (const auto& c1 : H.objects)
        for (const auto& c2 : H.objects) {
          const auto& [f, alpha] = el.one_data[c1];
          const auto& [g, beta] = el.one_data[c2];
          const FinCat& fib = F.fiber(Bo);
          for (const auto& nu : B.twocells(f, g)) {
            if (fib.compose(beta, F.f2(nu).at(x)) != alpha) continue;
            Id t = "t" + std::to_string(twocount++);
            two_index[{nu, c1, c2}] = t;
            H.add_mor(t, c1, c2);
            el.two_data[t] = nu;
            el.projection.on_2cells[t] = nu;
          }
        }
      for (const auto& c : H.objects) {
        const auto& [f, alpha] = el.one_data[c];
        H.identities[c] = elb_two(B.id2(f), c, c);
      }
      for (const auto& [t2, m2] : H.morphisms)
        for (const auto& [t1, m1] : H.morphisms) {
          if (m2.dom != m1.cod) continue;
          Id nu = B.vcomp(el.two_data[t2], el.two_data[t1]);
          H.comp[{t2, t1}] = elb_two(nu, m1.dom, m2.cod);
        }
      E.homs[{o1, o2}] = H;
    }

  // units
  for (const auto& o : E.objects) {
    const auto& [A, x] = el.ob_data[o];
    const FinCat& fib = F.fiber(A);
    Id alpha = *fib.inverse(F.unit_iso.at(A).at(x));
    E.unit1[o] = elb_one(B.unit1.at(A), alpha, x);
  }
  E.seal();

  // horizontal composition of 1-cells
  for (const auto& o1 : E.objects)
    for (const auto& o2 : E.objects)
      for (const auto& o3 : E.objects) {
        const auto& H1 = E.homs.at({o1, o2});
        const auto& H2 = E.homs.at({o2, o3});
        const auto& [A, x] = el.ob_data[o1];
        const auto& [Co, z] = el.ob_data[o3];
        const FinCat& fib = F.fiber(Co);
        for (const auto& c2 : H2.objects)
          for (const auto& c1 : H1.objects) {
            const auto& [g, beta] = el.one_data[c2];
            const auto& [f, alpha] = el.one_data[c1];
            if (!B.has_hc1(g, f)) continue;
            Id gf = B.c1(g, f);
            // beta . Fg(alpha) . comp_iso(g,f)^{-1}_x : F(gf)(x) -> z
            Id mid = F.f1(g).mo(alpha);
            Id inv = *fib.inverse(F.comp_iso.at({g, f}).at(x));
            Id ap = fib.compose(beta, fib.compose(mid, inv));
            E.hc1[{c2, c1}] = elb_one(gf, ap, x);
          }
      }

  // horizontal composition of 2-cells
  for (const auto& o1 : E.objects)
    for (const auto& o2 : E.objects)
      for (const auto& o3 : E.objects) {
        const auto& H1 = E.homs.at({o1, o2});
        const auto& H2 = E.homs.at({o2, o3});
        for (const auto& [t2, m2] : H2.morphisms)
          for (const auto& [t1, m1] : H1.morphisms) {
            if (!E.hc1.count({m2.dom, m1.dom}) ||
                !E.hc1.count({m2.cod, m1.cod}))
              continue;
            Id nu = B.c2(el.two_data[t2], el.two_data[t1]);
            E.hc2[{t2, t1}] = elb_two(nu, E.hc1.at({m2.dom, m1.dom}),
                                      E.hc1.at({m2.cod, m1.cod}));
          }
      }

  // associators and unitors inherited from the base
  for (const auto& o1 : E.objects)
    for (const auto& o2 : E.objects)
      for (const auto& o3 : E.objects)
        for (const auto& o4 : E.objects) {
          const auto& H1 = E.homs.at({o1, o2});
          const auto& H2 = E.homs.at({o2, o3});
          const auto& H3 = E.homs.at({o3, o4});
          for (const auto& c3 : H3.objects)
            for (const auto& c2 : H2.objects)
              for (const auto& c1 : H1.objects) {
                if (!E.hc1.count({c3, c2}) || !E.hc1.count({c2, c1})) continue;
                Id hg = E.hc1.at({c3, c2}), gf = E.hc1.at({c2, c1});
                if (!E.hc1.count({hg, c1}) || !E.hc1.count({c3, gf})) continue;
                const auto& [h, gm] = el.one_data[c3];
                const auto& [g, bm] = el.one_data[c2];
                const auto& [f, am] = el.one_data[c1];
                Id a = B.assoc.at({h, g, f});
                E.assoc[{c3, c2, c1}] =
                    elb_two(a, E.hc1.at({hg, c1}), E.hc1.at({c3, gf}));
              }
        }
  for (const auto& [c, od] : el.one_data) {
    const Id src = E.home1.at(c).first, tgt = E.home1.at(c).second;
    const auto& [f, alpha] = od;
    if (E.hc1.count({E.unit1.at(tgt), c}))
      E.lun[c] = elb_two(B.lun.at(f), E.hc1.at({E.unit1.at(tgt), c}), c);
    if (E.hc1.count({c, E.unit1.at(src)}))
      E.run[c] = elb_two(B.run.at(f), E.hc1.at({c, E.unit1.at(src)}), c);
  }
  E.seal();

  // projection comparison cells (strict)
  for (const auto& [p, gf] : E.hc1) {
    const auto& [c2, c1] = p;
    Id g = el.one_data[c2].first, f = el.one_data[c1].first;
    el.projection.comp_cell[p] = B.id2(B.c1(g, f));
  }
  for (const auto& o : E.objects)
    el.projection.unit_cell[o] = B.id2(B.unit1.at(el.ob_data[o].first));
  return el;
}

// ---------------------------------------------------------------------------
// Lax el-generic objects and el-generic morphisms

struct CospanLift {
  Id f, g;      // the cospan out of (A,x) and into its codomain
  Id h, nu;     // the strong mixed lifting
  bool gamma_invertible = false;
  bool nu_invertible = false;
};

struct LaxGenObjCert {
  Id object;
  bool generic = false;
  std::vector<CospanLift> lifts;
  // on failure: the offending cospan and error kind
  Id bad_f, bad_g;
  std::string reason;
};

inline LaxGenObjCert is_lax_el_generic(const CatCopresheaf& F, const ElBicat& el,
                                       const Id& obj) {
  LaxGenObjCert cert;
  cert.object = obj;
  const FinBicat& E = el.bicat;
  for (const auto& ob2 : E.objects)     // (B,y)
    for (const auto& ob3 : E.objects) { // (C,z)
      for (const auto& f : E.onecells(obj, ob2))
        for (const auto& g : E.onecells(ob3, ob2)) {
          if (!el.opcartesian(F, g)) continue;  // beta must be invertible
          auto out = mixed_left_lifting(E, f, g);
          if (!out.witness) {
            cert.generic = false;
            cert.bad_f = f;
            cert.bad_g = g;
            cert.reason = out.error == LiftError::NoLifting
                              ? "NoLifting"
                              : "LiftingNotStrong";
            return cert;
          }
          CospanLift cl;
          cl.f = f;
          cl.g = g;
          cl.h = out.witness->h;
          cl.nu = out.witness->nu;
          const auto& [hu, gamma] = el.one_data.at(cl.h);
          const FinCat& fib = F.fiber(F.base.dst1(hu));
          cl.gamma_invertible = fib.is_iso(gamma);
          cl.nu_invertible = E.hom_of2(cl.nu).is_iso(cl.nu);
          // condition 2: alpha invertible forces gamma and nu invertible
          if (el.opcartesian(F, f) && !(cl.gamma_invertible && cl.nu_invertible)) {
            cert.generic = false;
            cert.bad_f = f;
            cert.bad_g = g;
            cert.reason = "OpcartesianLiftNotInvertible";
            return cert;
          }
          cert.lifts.push_back(cl);
        }
    }
  cert.generic = true;
  return cert;
}

// The defining property of an el-generic morphism: (m, lun^{-1}) is the
// strong mixed left lifting of m through the identity 1-cell of its target.
inline bool el_generic_morphism_property(const ElBicat& el, const Id& m) {
  const FinBicat& E = el.bicat;
  const Id tgt = E.home1.at(m).second;
  const Id g = E.unit1.at(tgt);
  if (!E.lun.count(m)) return false;
  auto nu0 = E.invert2(E.lun.at(m));
  if (!nu0) return false;
  // subterminality of m in its hom category
  const Id src = E.home1.at(m).first;
  for (const auto& t : E.onecells(src, tgt))
    if (E.twocells(t, m).size() > 1) return false;
  // universality: every (k, psi : m => 1.k) factors via a unique lambda
  for (const auto& k : E.onecells(src, tgt)) {
    if (!E.has_hc1(g, k)) continue;
    Id gk = E.c1(g, k);
    for (const auto& psi : E.twocells(m, gk)) {
      int count = 0;
      for (const auto& lambda : E.twocells(k, m))
        if (E.vcomp(E.wl(g, lambda), psi) == *nu0) ++count;
      if (count != 1) return false;
    }
  }
  return true;
}

enum class GenMorError { SourceNotGeneric, NotGeneric };

inline std::variant<bool, GenMorError> is_el_generic_morphism(
    const CatCopresheaf&, const ElBicat& el, const Id& m,
    const std::set<Id>& known_generics) {
  const Id src = el.bicat.home1.at(m).first;
  if (!known_generics.count(src)) return GenMorError::SourceNotGeneric;
  return el_generic_morphism_property(el, m);
}

inline std::vector<Id> lax_el_generic_objects(const CatCopresheaf& F,
                                              const ElBicat& el) {
  std::vector<Id> out;
  for (const auto& o : el.bicat.objects)
    if (is_lax_el_generic(F, el, o).generic) out.push_back(o);
  return out;
}

// ---------------------------------------------------------------------------
// The indexing category M^F

struct GenericsIndex {
  FinCat m;                      // objects: lax el-generic el-objects;
                                 // morphisms: representative el-generics
  std::map<Id, Id> P_ob;         // M^F object -> base object
  std::map<Id, Id> P_mor;        // M^F morphism -> base 1-cell
  std::map<Id, Id> rep_of;       // el-generic morphism -> its representative
  // comparison el-2-cells: for composable reps (r2, r1), an invertible
  // el-2-cell  el-composite(r2,r1) => chosen representative
  std::map<std::pair<Id, Id>, Id> comp_comparison;
  std::map<Id, Id> unit_comparison;  // gen object -> el-2-cell unit => rep
};

struct GenericsIndexError {
  std::string kind;  // "GenericsDoNotCompose"
  Id m1, m2;         // offending composable pair
};

inline std::variant<GenericsIndex, GenericsIndexError> generics_index(
    const CatCopresheaf& F, const ElBicat& el) {
  GenericsIndex gi;
  const FinBicat& E = el.bicat;
  auto gens = lax_el_generic_objects(F, el);
  std::set<Id> gen_set(gens.begin(), gens.end());

  // all el-generic morphisms between generics
  std::vector<Id> gm;
  for (const auto& g1 : gens)
    for (const auto& g2 : gens)
      for (const auto& m : E.onecells(g1, g2))
        if (el_generic_morphism_property(el, m)) gm.push_back(m);
  std::sort(gm.begin(), gm.end());

  // isomorphism classes under invertible el-2-cells
  std::map<Id, Id> parent;
  for (const auto& m : gm) parent[m] = m;
  std::function<Id(Id)> find = [&](Id x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  auto unite = [&](const Id& a, const Id& b) {
    Id ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  };
  for (const auto& m1 : gm)
    for (const auto& m2 : gm) {
      if (E.home1.at(m1) != E.home1.at(m2)) continue;
      for (const auto& c : E.twocells(m1, m2))
        if (E.invertible2(c)) unite(m1, m2);
    }
  for (const auto& m : gm) gi.rep_of[m] = find(m);

  // build the category
  for (const auto& g : gens) {
    gi.m.add_object(g);
    gi.P_ob[g] = el.ob_data.at(g).first;
  }
  std::set<Id> reps;
  for (const auto& m : gm) reps.insert(find(m));
  for (const auto& r : reps) {
    gi.m.add_mor(r, E.home1.at(r).first, E.home1.at(r).second);
    gi.P_mor[r] = el.one_data.at(r).first;
  }
  // identities: representative of the class of the el unit
  for (const auto& g : gens) {
    Id u = E.unit1.at(g);
    if (!gi.rep_of.count(u))
      return GenericsIndexError{"GenericsDoNotCompose", u, u};
    gi.m.identities[g] = gi.rep_of.at(u);
    // comparison unit => rep
    Id rep = gi.rep_of.at(u);
    for (const auto& c : E.twocells(u, rep))
      if (E.invertible2(c)) {
        gi.unit_comparison[g] = c;
        break;
      }
  }
  // composition: compose in el, check genericity, re-represent
  for (const auto& r2 : reps)
    for (const auto& r1 : reps) {
      if (E.home1.at(r2).first != E.home1.at(r1).second) continue;
      if (!E.has_hc1(r2, r1))
        return GenericsIndexError{"GenericsDoNotCompose", r1, r2};
      Id c = E.c1(r2, r1);
      if (!el_generic_morphism_property(el, c))
        return GenericsIndexError{"GenericsDoNotCompose", r1, r2};
      // find the representative isomorphic to c
      std::optional<Id> rep;
      Id cmp;
      for (const auto& r : reps) {
        if (E.home1.at(r) != E.home1.at(c)) continue;
        for (const auto& cc : E.twocells(c, r))
          if (E.invertible2(cc)) {
            rep = r;
            cmp = cc;
            break;
          }
        if (rep) break;
      }
      if (!rep) return GenericsIndexError{"GenericsDoNotCompose", r1, r2};
      gi.m.comp[{r2, r1}] = *rep;
      gi.comp_comparison[{r2, r1}] = cmp;
    }
  return gi;
}

// ---------------------------------------------------------------------------
// Lambda embedding

struct LambdaResult {
  FinCat domain;       // int_{m in M^F} base(P_m, T)
  FinFunctor functor;  // into F(T)
  bool fully_faithful = false;
  bool essentially_surjective = false;
  // per F(T)-object: covering (gen object, f, alpha) if found
  std::map<Id, std::optional<std::tuple<Id, Id, Id>>> eso_report;
  // decode: domain object -> (gen object, f)
  std::map<Id, std::pair<Id, Id>> ob_data;
};

inline Id lam_ob(const Id& m, const Id& f) { return join_id({m, f}); }
inline Id lam_mor(const Id& u, const Id& nu, const Id& src, const Id& tgt) {
  return join_id({u, nu, src, tgt});
}

inline LambdaResult lambda_embedding(const CatCopresheaf& F, const ElBicat& el,
                                     const GenericsIndex& gi, const Id& T) {
  LambdaResult r;
  const FinBicat& B = F.base;
  const FinCat& FT = F.fiber(T);

  for (const auto& m : gi.m.objects) {
    const Id A = gi.P_ob.at(m);
    for (const auto& f : B.onecells(A, T)) {
      Id o = lam_ob(m, f);
      r.domain.add_object(o);
      r.ob_data[o] = {m, f};
      const Id x = el.ob_data.at(m).second;
      r.functor.on_objects[o] = F.f1(f).ob(x);
    }
  }
  // morphisms: (u : m -> n in M^F, nu : f => g . P_u)
  for (const auto& o1 : r.domain.objects)
    for (const auto& o2 : r.domain.objects) {
      const auto& [m, f] = r.ob_data[o1];
      const auto& [n, g] = r.ob_data[o2];
      for (const auto& [uid, um] : gi.m.morphisms) {
        if (um.dom != m || um.cod != n) continue;
        const Id s = gi.P_mor.at(uid);
        if (!B.has_hc1(g, s)) continue;
        for (const auto& nu : B.twocells(f, B.c1(g, s))) {
          Id mo = lam_mor(uid, nu, o1, o2);
          r.domain.add_mor(mo, o1, o2);
          // Lambda on morphisms: Fg(phi) . comp^{-1}_x . (F nu)_x
          const auto& [A, x] = el.ob_data.at(m);
          const Id phi = el.one_data.at(uid).second;  // F s (x) -> y
          Id inv = *FT.inverse(F.comp_iso.at({g, s}).at(x));
          Id val = FT.compose(F.f1(g).mo(phi), FT.compose(inv, F.f2(nu).at(x)));
          r.functor.on_morphisms[mo] = val;
        }
      }
    }
  // identities
  for (const auto& o : r.domain.objects) {
    const auto& [m, f] = r.ob_data[o];
    Id urep = gi.m.id_of(m);
    const Id iota = gi.P_mor.at(urep);
    // nu0 : f => f . iota using the unit comparison
    Id mu = el.two_data.at(gi.unit_comparison.at(m));  // 1_A => iota (base)
    Id nu0 = B.vcomp(B.c2(B.id2(f), mu), *B.invert2(B.run.at(f)));
    r.domain.identities[o] = lam_mor(urep, nu0, o, o);
  }
  // composition
  for (const auto& [m2id, m2] : r.domain.morphisms)
    for (const auto& [m1id, m1] : r.domain.morphisms) {
      if (m2.dom != m1.cod) continue;
      auto p2 = split_id(m2id);
      auto p1 = split_id(m1id);
      const Id v = p2[0], mu = p2[1];
      const Id u = p1[0], nu = p1[1];
      Id w = gi.m.compose(v, u);
      const Id s = gi.P_mor.at(u), t = gi.P_mor.at(v);
      const Id h = r.ob_data[m2.cod].second;
      // f => g.s => (h.t).s => h.(t.s) => h.P(w)
      Id k = el.two_data.at(gi.comp_comparison.at({v, u}));  // t.s => P(w)
      Id cell = B.vcomp(
          B.c2(B.id2(h), k),
          B.vcomp(B.assoc.at({h, t, s}), B.vcomp(B.c2(mu, B.id2(s)), nu)));
      r.domain.comp[{m2id, m1id}] = lam_mor(w, cell, m1.dom, m2.cod);
    }

  // verify full faithfulness by enumeration
  r.fully_faithful = true;
  for (const auto& o1 : r.domain.objects)
    for (const auto& o2 : r.domain.objects) {
      auto dh = r.domain.hom(o1, o2);
      auto th = FT.hom(r.functor.ob(o1), r.functor.ob(o2));
      std::set<Id> images;
      for (const auto& m : dh) images.insert(r.functor.mo(m));
      if (images.size() != dh.size() || images.size() != th.size()) {
        r.fully_faithful = false;
      }
    }
  // essential surjectivity: per element an opcartesian cover from a generic
  r.essentially_surjective = true;
  for (const auto& t : FT.objects) {
    std::optional<std::tuple<Id, Id, Id>> found;
    for (const auto& m : gi.m.objects) {
      const auto& [A, x] = el.ob_data.at(m);
      for (const auto& f : B.onecells(A, T)) {
        for (const auto& alpha : FT.hom(F.f1(f).ob(x), t))
          if (FT.is_iso(alpha)) {
            found = {m, f, alpha};
            break;
          }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) r.essentially_surjective = false;
    r.eso_report[t] = found;
  }
  return r;
}

// ---------------------------------------------------------------------------
// decide_lax_colimit_of_reps

struct LaxColimitDecision {
  bool yes = false;
  std::string error_kind;  // NoGenericCover | GenericsDoNotCompose
  Id witness1, witness2;
  std::optional<GenericsIndex> index;
  std::map<Id, LambdaResult> lambdas;  // per base object
};

inline LaxColimitDecision decide_lax_colimit_of_reps(const CatCopresheaf& F,
                                                     const ElBicat& el) {
  LaxColimitDecision d;
  auto gens = lax_el_generic_objects(F, el);
  std::set<Id> gen_set(gens.begin(), gens.end());
  // (a) every element admits an opcartesian morphism from a generic
  for (const auto& o : el.bicat.objects) {
    bool covered = false;
    for (const auto& g : gens) {
      for (const auto& m : el.bicat.onecells(g, o))
        if (el.opcartesian(F, m)) {
          covered = true;
          break;
        }
      if (covered) break;
    }
    if (!covered) {
      d.error_kind = "NoGenericCover";
      d.witness1 = o;
      return d;
    }
  }
  // (b) generics compose
  auto gi = generics_index(F, el);
  if (std::holds_alternative<GenericsIndexError>(gi)) {
    const auto& e = std::get<GenericsIndexError>(gi);
    d.error_kind = e.kind;
    d.witness1 = e.m1;
    d.witness2 = e.m2;
    return d;
  }
  d.index = std::get<GenericsIndex>(gi);
  // produce and re-verify the Lambda equivalences
  for (const auto& T : F.base.objects) {
    auto lam = lambda_embedding(F, el, *d.index, T);
    if (!lam.fully_faithful || !lam.essentially_surjective) {
      d.error_kind = "LambdaNotEquivalence";
      d.witness1 = T;
      return d;
    }
    d.lambdas.emplace(T, std::move(lam));
  }
  d.yes = true;
  return d;
}

// ---------------------------------------------------------------------------
// The lax colimit of representables over (M, P) with P : M -> base a strict
// assignment (P must preserve composition and identities on the nose).

struct IndexedFamily {
  FinCat M;
  std::map<Id, Id> P_ob;
  std::map<Id, Id> P_mor;
};

inline Id fam_el_ob(const Id& m, const Id& x) { return join_id({m, x}); }
inline Id fam_el_mor(const Id& u, const Id& phi, const Id& src, const Id& tgt) {
  return join_id({u, phi, src, tgt});
}

inline CatCopresheaf colimit_of_representables(const FinBicat& B,
                                               const IndexedFamily& fam) {
  CatCopresheaf F;
  F.base = B;
  // fibers
  for (const auto& A : B.objects) {
    FinCat K;
    std::map<Id, std::pair<Id, Id>> obd;
    for (const auto& m : fam.M.objects)
      for (const auto& x : B.onecells(fam.P_ob.at(m), A)) {
        Id o = fam_el_ob(m, x);
        K.add_object(o);
        obd[o] = {m, x};
      }
    for (const auto& o1 : K.objects)
      for (const auto& o2 : K.objects) {
        const auto& [m, x] = obd[o1];
        const auto& [n, y] = obd[o2];
        for (const auto& [uid, um] : fam.M.morphisms) {
          if (um.dom != m || um.cod != n) continue;
          const Id pu = fam.P_mor.at(uid);
          if (!B.has_hc1(y, pu)) continue;
          for (const auto& phi : B.twocells(x, B.c1(y, pu)))
            K.add_mor(fam_el_mor(uid, phi, o1, o2), o1, o2);
        }
      }
    for (const auto& o : K.objects) {
      const auto& [m, x] = obd[o];
      Id idm = fam.M.id_of(m);
      // phi0 : x => x . P(id_m) = x . 1 (P strict on identities)
      Id phi0 = *B.invert2(B.run.at(x));
      K.identities[o] = fam_el_mor(idm, phi0, o, o);
    }
    for (const auto& [c2, m2] : K.morphisms)
      for (const auto& [c1, m1] : K.morphisms) {
        if (m2.dom != m1.cod) continue;
        auto p2 = split_id(c2);
        auto p1 = split_id(c1);
        const Id v = p2[0], psi = p2[1];
        const Id u = p1[0], phi = p1[1];
        const Id z = obd[m2.cod].second;
        Id w = fam.M.compose(v, u);
        // x => y.Pu => (z.Pv).Pu => z.(Pv.Pu) = z.P(vu)
        Id cell = B.vcomp(
            B.assoc.at({z, fam.P_mor.at(v), fam.P_mor.at(u)}),
            B.vcomp(B.c2(psi, B.id2(fam.P_mor.at(u))), phi));
        K.comp[{c2, c1}] = fam_el_mor(w, cell, m1.dom, m2.cod);
      }
    F.on_objects[A] = K;
  }
  // on 1-cells: postcompose
  for (const auto& [f, ab] : B.home1) {
    FinFunctor G;
    const FinCat& src = F.fiber(ab.first);
    for (const auto& o : src.objects) {
      auto p = split_id(o);
      const Id m = p[0], x = p[1];
      G.on_objects[o] = fam_el_ob(m, B.c1(f, x));
    }
    for (const auto& [cid, cm] : src.morphisms) {
      auto p = split_id(cid);
      const Id u = p[0], phi = p[1];
      auto ps = split_id(cm.dom);
      auto pt = split_id(cm.cod);
      const Id x = ps[1], y = pt[1];
      const Id pu = fam.P_mor.at(u);
      // f.x => f.(y.Pu) => (f.y).Pu
      Id cell = B.vcomp(*B.invert2(B.assoc.at({f, y, pu})), B.c2(B.id2(f), phi));
      G.on_morphisms[cid] =
          fam_el_mor(u, cell, G.on_objects[cm.dom], G.on_objects[cm.cod]);
    }
    F.on_1cells[f] = G;
  }
  // on 2-cells: whisker
  for (const auto& [c, ab] : B.home2) {
    NatTrans n;
    const Id f = B.src2(c), g = B.dst2(c);
    const FinCat& src = F.fiber(ab.first);
    for (const auto& o : src.objects) {
      auto p = split_id(o);
      const Id m = p[0], x = p[1];
      Id idm = fam.M.id_of(m);
      Id gx = B.c1(g, x);
      // f.x => g.x => (g.x).P(id) = (g.x).1
      Id cell = B.vcomp(*B.invert2(B.run.at(gx)), B.c2(c, B.id2(x)));
      n.components[o] = fam_el_mor(idm, cell, F.f1(f).ob(o), F.f1(g).ob(o));
    }
    F.on_2cells[c] = n;
  }
  // comparisons
  for (const auto& [p, gf] : B.hc1) {
    const auto& [g, f] = p;
    NatTrans n;
    const FinCat& src = F.fiber(B.src1(f));
    for (const auto& o : src.objects) {
      auto q = split_id(o);
      const Id m = q[0], x = q[1];
      Id idm = fam.M.id_of(m);
      Id gfx = B.c1(gf, x);
      // g.(f.x) => (g.f).x => ((g.f).x).1
      Id cell = B.vcomp(*B.invert2(B.run.at(gfx)),
                        *B.invert2(B.assoc.at({g, f, x})));
      Id from = F.f1(g).ob(F.f1(f).ob(o));
      n.components[o] = fam_el_mor(idm, cell, from, F.f1(gf).ob(o));
    }
    F.comp_iso[p] = n;
  }
  for (const auto& A : B.objects) {
    NatTrans n;
    const FinCat& src = F.fiber(A);
    const Id iA = B.unit1.at(A);
    for (const auto& o : src.objects) {
      auto q = split_id(o);
      const Id m = q[0], x = q[1];
      Id idm = fam.M.id_of(m);
      Id ix = B.c1(iA, x);
      // x => 1.x => (1.x).1
      Id cell = B.vcomp(*B.invert2(B.run.at(ix)), *B.invert2(B.lun.at(x)));
      n.components[o] = fam_el_mor(idm, cell, o, F.f1(iA).ob(o));
    }
    F.unit_iso[A] = n;
  }
  return F;
}

// The representable copresheaf base(P, -) as a Cat-copresheaf.
inline CatCopresheaf representable_cat(const FinBicat& B, const Id& P) {
  IndexedFamily fam;
  fam.M = FinCat{};
  fam.M.add_object("*");
  fam.M.add_mor("1", "*", "*");
  fam.M.identities["*"] = "1";
  fam.M.comp[{"1", "1"}] = "1";
  fam.P_ob["*"] = P;
  fam.P_mor["1"] = B.unit1.at(P);
  return colimit_of_representables(B, fam);
}

}  // namespace laxgen
