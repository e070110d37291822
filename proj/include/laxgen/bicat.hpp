#pragma once

// Finite bicategories with explicit coherence data. Bicategories are stored
// non-strict with explicit associators even when strict; strictness is a
// derived predicate, not a flag. Hom-categories may be empty. 1-cell and
// 2-cell identifiers are globally unique across homs.
//
// A FinBicat may be a fragment (total == false): horizontal composition is
// then a partial table and coherence is checked on declared instances only.

#include <optional>
#include <tuple>

#include "laxgen/fincat.hpp"

namespace laxgen {

struct FinBicat {
  std::vector<Id> objects;
  std::map<std::pair<Id, Id>, FinCat> homs;   // (a,b) -> hom category
  std::map<Id, Id> unit1;                     // object -> identity 1-cell
  std::map<std::pair<Id, Id>, Id> hc1;        // (g,f) -> g.f on 1-cells
  std::map<std::pair<Id, Id>, Id> hc2;        // (beta,alpha) -> beta*alpha
  std::map<std::tuple<Id, Id, Id>, Id> assoc; // (h,g,f) -> (hg)f => h(gf)
  std::map<Id, Id> lun;                       // f -> 1_b . f => f
  std::map<Id, Id> run;                       // f -> f . 1_a => f
  bool total = true;

  // derived indices, rebuilt by seal()
  std::map<Id, std::pair<Id, Id>> home1;      // 1-cell -> (a,b)
  std::map<Id, std::pair<Id, Id>> home2;      // 2-cell -> (a,b)

  void seal() {
    home1.clear();
    home2.clear();
    for (const auto& [ab, H] : homs) {
      for (const auto& o : H.objects) home1[o] = ab;
      for (const auto& [m, mm] : H.morphisms) home2[m] = ab;
    }
  }

  const FinCat& hom(const Id& a, const Id& b) const { return homs.at({a, b}); }
  const FinCat& hom_of1(const Id& f) const { return homs.at(home1.at(f)); }
  const FinCat& hom_of2(const Id& c) const { return homs.at(home2.at(c)); }
  const Id& src1(const Id& f) const { return home1.at(f).first; }
  const Id& dst1(const Id& f) const { return home1.at(f).second; }
  // source / target 1-cells of a 2-cell
  const Id& src2(const Id& c) const { return hom_of2(c).dom(c); }
  const Id& dst2(const Id& c) const { return hom_of2(c).cod(c); }
  Id id2(const Id& f) const { return hom_of1(f).id_of(f); }
  Id vcomp(const Id& b, const Id& a) const { return hom_of2(a).compose(b, a); }

  bool has_hc1(const Id& g, const Id& f) const { return hc1.count({g, f}); }
  const Id& c1(const Id& g, const Id& f) const { return hc1.at({g, f}); }
  const Id& c2(const Id& b, const Id& a) const { return hc2.at({b, a}); }
  bool has_hc2(const Id& b, const Id& a) const { return hc2.count({b, a}); }

  // whiskers; g * alpha and beta * f
  Id wl(const Id& g, const Id& alpha) const { return c2(id2(g), alpha); }
  Id wr(const Id& beta, const Id& f) const { return c2(beta, id2(f)); }

  std::optional<Id> invert2(const Id& c) const {
    return hom_of2(c).inverse(c);
  }
  bool invertible2(const Id& c) const { return invert2(c).has_value(); }

  std::vector<Id> onecells(const Id& a, const Id& b) const {
    auto it = homs.find({a, b});
    if (it == homs.end()) return {};
    return it->second.objects;
  }
  // 2-cells f => g within one hom category
  std::vector<Id> twocells(const Id& f, const Id& g) const {
    return hom_of1(f).hom(f, g);
  }
};

// ---------------------------------------------------------------------------
// validate_bicategory

inline Diags check_bicategory(const FinBicat& B) {
  Diags ds;
  std::set<Id> objset(B.objects.begin(), B.objects.end());
  if (objset.size() != B.objects.size())
    ds.push_back({"DuplicateObject", "object list"});
  std::set<Id> ones, twos;
  for (const auto& [ab, H] : B.homs) {
    if (!objset.count(ab.first) || !objset.count(ab.second))
      ds.push_back({"UnknownObject", "hom(" + ab.first + "," + ab.second + ")"});
    auto hd = check_category(H);
    for (auto& d : hd)
      ds.push_back({d.code, "hom(" + ab.first + "," + ab.second + "): " + d.detail});
    for (const auto& o : H.objects)
      if (!ones.insert(o).second)
        ds.push_back({"DuplicateOneCell", o});
    for (const auto& [m, mm] : H.morphisms)
      if (!twos.insert(m).second)
        ds.push_back({"DuplicateTwoCell", m});
  }
  for (const auto& a : B.objects)
    for (const auto& b : B.objects)
      if (!B.homs.count({a, b}))
        ds.push_back({"MissingHom", "(" + a + "," + b + ")"});
  if (!ds.empty()) return ds;

  for (const auto& a : B.objects) {
    auto it = B.unit1.find(a);
    if (it == B.unit1.end())
      ds.push_back({"MissingUnit", a});
    else if (!B.home1.count(it->second) || B.home1.at(it->second) != std::make_pair(a, a))
      ds.push_back({"UnitBoundary", a});
  }
  if (!ds.empty()) return ds;

  // hcomp totality (unless a fragment) and boundaries
  for (const auto& a : B.objects)
    for (const auto& b : B.objects)
      for (const auto& c : B.objects)
        for (const auto& g : B.onecells(b, c))
          for (const auto& f : B.onecells(a, b)) {
            if (!B.has_hc1(g, f)) {
              if (B.total) ds.push_back({"MissingComposite1", g + " . " + f});
              continue;
            }
            const Id& gf = B.c1(g, f);
            if (!B.home1.count(gf) || B.home1.at(gf) != std::make_pair(a, c))
              ds.push_back({"CompositeBoundary1", g + " . " + f});
          }
  if (!ds.empty()) return ds;

  // hc2 totality on pairs whose boundary composites are declared
  auto hc2_expected = [&](const Id& beta, const Id& alpha) {
    return B.has_hc1(B.src2(beta), B.src2(alpha)) &&
           B.has_hc1(B.dst2(beta), B.dst2(alpha));
  };
  for (const auto& [bc, H2] : B.homs)
    for (const auto& [ab, H1] : B.homs) {
      if (ab.second != bc.first) continue;
      for (const auto& [beta, bm] : H2.morphisms)
        for (const auto& [alpha, am] : H1.morphisms) {
          if (!hc2_expected(beta, alpha)) continue;
          if (!B.has_hc2(beta, alpha)) {
            ds.push_back({"MissingComposite2", beta + " * " + alpha});
            continue;
          }
          const Id& c = B.c2(beta, alpha);
          if (B.src2(c) != B.c1(bm.dom, am.dom) ||
              B.dst2(c) != B.c1(bm.cod, am.cod))
            ds.push_back({"CompositeBoundary2", beta + " * " + alpha});
        }
    }
  if (!ds.empty()) return ds;

  // hcomp functoriality: identities and interchange
  for (const auto& [pair, gf] : B.hc1) {
    const auto& [g, f] = pair;
    if (B.c2(B.id2(g), B.id2(f)) != B.id2(gf))
      ds.push_back({"HcompIdentity", g + " . " + f});
  }
  for (const auto& [bc, H2] : B.homs)
    for (const auto& [ab, H1] : B.homs) {
      if (ab.second != bc.first) continue;
      for (const auto& [b2, bm2] : H2.morphisms)
        for (const auto& [b1, bm1] : H2.morphisms) {
          if (bm2.dom != bm1.cod) continue;
          for (const auto& [a2, am2] : H1.morphisms)
            for (const auto& [a1, am1] : H1.morphisms) {
              if (am2.dom != am1.cod) continue;
              if (!B.has_hc2(b1, a1) || !B.has_hc2(b2, a2)) continue;
              if (!B.has_hc2(H2.compose(b2, b1), H1.compose(a2, a1))) continue;
              Id lhs = B.c2(H2.compose(b2, b1), H1.compose(a2, a1));
              Id rhs = B.vcomp(B.c2(b2, a2), B.c2(b1, a1));
              if (lhs != rhs)
                ds.push_back({"InterchangeViolation",
                              "(" + b2 + "," + b1 + ")*(" + a2 + "," + a1 + ")"});
            }
        }
    }
  if (!ds.empty()) return ds;

  // unitors: boundaries, invertibility, naturality
  for (const auto& [f, ab] : B.home1) {
    auto lit = B.lun.find(f);
    auto rit = B.run.find(f);
    bool l_ok = B.has_hc1(B.unit1.at(ab.second), f);
    bool r_ok = B.has_hc1(f, B.unit1.at(ab.first));
    if (lit == B.lun.end()) {
      if (l_ok) ds.push_back({"MissingUnitor", "left of " + f});
    } else if (l_ok) {
      if (B.src2(lit->second) != B.c1(B.unit1.at(ab.second), f) ||
          B.dst2(lit->second) != f)
        ds.push_back({"UnitorBoundary", "left of " + f});
      else if (!B.invertible2(lit->second))
        ds.push_back({"NonInvertibleConstraint", "left unitor of " + f});
    }
    if (rit == B.run.end()) {
      if (r_ok) ds.push_back({"MissingUnitor", "right of " + f});
    } else if (r_ok) {
      if (B.src2(rit->second) != B.c1(f, B.unit1.at(ab.first)) ||
          B.dst2(rit->second) != f)
        ds.push_back({"UnitorBoundary", "right of " + f});
      else if (!B.invertible2(rit->second))
        ds.push_back({"NonInvertibleConstraint", "right unitor of " + f});
    }
  }
  if (!ds.empty()) return ds;

  // unitor naturality: for alpha : f => f', lun(f') . (1 * alpha) = alpha . lun(f)
  for (const auto& [c, ab] : B.home2) {
    const Id f = B.src2(c), f2 = B.dst2(c);
    const Id ib = B.unit1.at(ab.second), ia = B.unit1.at(ab.first);
    if (B.lun.count(f) && B.lun.count(f2) && B.has_hc2(B.id2(ib), c)) {
      if (B.vcomp(B.lun.at(f2), B.c2(B.id2(ib), c)) != B.vcomp(c, B.lun.at(f)))
        ds.push_back({"UnitorNaturality", "left at " + c});
    }
    if (B.run.count(f) && B.run.count(f2) && B.has_hc2(c, B.id2(ia))) {
      if (B.vcomp(B.run.at(f2), B.c2(c, B.id2(ia))) != B.vcomp(c, B.run.at(f)))
        ds.push_back({"UnitorNaturality", "right at " + c});
    }
  }
  if (!ds.empty()) return ds;

  // associators: boundaries, invertibility
  auto assoc_expected = [&](const Id& h, const Id& g, const Id& f) {
    return B.has_hc1(h, g) && B.has_hc1(g, f) && B.has_hc1(B.c1(h, g), f) &&
           B.has_hc1(h, B.c1(g, f));
  };
  for (const auto& a : B.objects)
    for (const auto& b : B.objects)
      for (const auto& c : B.objects)
        for (const auto& d : B.objects)
          for (const auto& h : B.onecells(c, d))
            for (const auto& g : B.onecells(b, c))
              for (const auto& f : B.onecells(a, b)) {
                if (!assoc_expected(h, g, f)) continue;
                auto it = B.assoc.find({h, g, f});
                if (it == B.assoc.end()) {
                  ds.push_back({"MissingAssociator",
                                "(" + h + "," + g + "," + f + ")"});
                  continue;
                }
                const Id& A = it->second;
                if (B.src2(A) != B.c1(B.c1(h, g), f) ||
                    B.dst2(A) != B.c1(h, B.c1(g, f)))
                  ds.push_back({"AssociatorBoundary",
                                "(" + h + "," + g + "," + f + ")"});
                else if (!B.invertible2(A))
                  ds.push_back({"NonInvertibleConstraint",
                                "associator (" + h + "," + g + "," + f + ")"});
              }
  if (!ds.empty()) return ds;

  // associator naturality in all three variables
  for (const auto& [phi, hp] : B.home2)
    for (const auto& [psi, hq] : B.home2) {
      if (hp.first != hq.second) continue;
      for (const auto& [chi, hr] : B.home2) {
        if (hq.first != hr.second) continue;
        const Id h = B.src2(phi), h2 = B.dst2(phi);
        const Id g = B.src2(psi), g2 = B.dst2(psi);
        const Id f = B.src2(chi), f2 = B.dst2(chi);
        if (!B.assoc.count({h, g, f}) || !B.assoc.count({h2, g2, f2})) continue;
        if (!B.has_hc2(phi, psi) || !B.has_hc2(psi, chi)) continue;
        if (!B.has_hc2(B.c2(phi, psi), chi) || !B.has_hc2(phi, B.c2(psi, chi)))
          continue;
        Id lhs = B.vcomp(B.assoc.at({h2, g2, f2}), B.c2(B.c2(phi, psi), chi));
        Id rhs = B.vcomp(B.c2(phi, B.c2(psi, chi)), B.assoc.at({h, g, f}));
        if (lhs != rhs)
          ds.push_back({"AssociatorNaturality",
                        "(" + phi + "," + psi + "," + chi + ")"});
      }
    }
  if (!ds.empty()) return ds;

  // triangle: for f : a -> b, g : b -> c
  for (const auto& [ab, H1] : B.homs)
    for (const auto& f : H1.objects) {
      const Id b = ab.second;
      for (const auto& [bc, H2] : B.homs) {
        if (bc.first != b) continue;
        for (const auto& g : H2.objects) {
          const Id ib = B.unit1.at(b);
          if (!B.assoc.count({g, ib, f})) continue;
          if (!B.lun.count(f) || !B.run.count(g)) continue;
          if (!B.has_hc2(B.id2(g), B.lun.at(f)) ||
              !B.has_hc2(B.run.at(g), B.id2(f)))
            continue;
          Id lhs = B.vcomp(B.c2(B.id2(g), B.lun.at(f)), B.assoc.at({g, ib, f}));
          Id rhs = B.c2(B.run.at(g), B.id2(f));
          if (lhs != rhs)
            ds.push_back({"TriangleViolation", "(" + f + "," + g + ")"});
        }
      }
    }
  if (!ds.empty()) return ds;

  // pentagon on every composable quadruple
  for (const auto& [ab, Hf] : B.homs)
    for (const auto& f : Hf.objects)
      for (const auto& [bc, Hg] : B.homs) {
        if (bc.first != ab.second) continue;
        for (const auto& g : Hg.objects)
          for (const auto& [cd, Hh] : B.homs) {
            if (cd.first != bc.second) continue;
            for (const auto& h : Hh.objects)
              for (const auto& [de, Hk] : B.homs) {
                if (de.first != cd.second) continue;
                for (const auto& k : Hk.objects) {
                  // required composites
                  if (!B.has_hc1(k, h) || !B.has_hc1(h, g) || !B.has_hc1(g, f))
                    continue;
                  const Id kh = B.c1(k, h), hg = B.c1(h, g), gf = B.c1(g, f);
                  if (!B.has_hc1(kh, g) || !B.has_hc1(h, gf) ||
                      !B.has_hc1(kh, gf) || !B.has_hc1(B.c1(kh, g), f) ||
                      !B.has_hc1(k, hg) || !B.has_hc1(B.c1(k, hg), f) ||
                      !B.has_hc1(k, B.c1(hg, f)) || !B.has_hc1(hg, f) ||
                      !B.has_hc1(k, B.c1(h, gf)))
                    continue;
                  auto need = [&](const Id& x, const Id& y, const Id& z) {
                    return B.assoc.count({x, y, z}) != 0;
                  };
                  if (!need(kh, g, f) || !need(k, h, gf) || !need(k, h, g) ||
                      !need(k, hg, f) || !need(h, g, f))
                    continue;
                  // path 1: a(k,h,gf) . a(kh,g,f)
                  Id p1 = B.vcomp(B.assoc.at({k, h, gf}), B.assoc.at({kh, g, f}));
                  // path 2: (1k * a(h,g,f)) . a(k,hg,f) . (a(k,h,g) * 1f)
                  if (!B.has_hc2(B.id2(k), B.assoc.at({h, g, f})) ||
                      !B.has_hc2(B.assoc.at({k, h, g}), B.id2(f)))
                    continue;
                  Id p2 = B.vcomp(
                      B.c2(B.id2(k), B.assoc.at({h, g, f})),
                      B.vcomp(B.assoc.at({k, hg, f}),
                              B.c2(B.assoc.at({k, h, g}), B.id2(f))));
                  if (p1 != p2)
                    ds.push_back({"PentagonViolation", "(" + f + "," + g +
                                                           "," + h + "," + k +
                                                           ")"});
                }
              }
          }
      }
  return ds;
}

inline bool bicategory_valid(const FinBicat& B) {
  return check_bicategory(B).empty();
}

// ---------------------------------------------------------------------------
// Constructors

inline Id ld_twocell(const Id& f) { return join_id({"i", f}); }

inline FinBicat locally_discrete(const FinCat& C) {
  FinBicat B;
  B.objects = C.objects;
  for (const auto& a : C.objects)
    for (const auto& b : C.objects) {
      FinCat H;
      for (const auto& f : C.hom(a, b)) {
        H.add_object(f);
        H.add_mor(ld_twocell(f), f, f);
        H.identities[f] = ld_twocell(f);
        H.comp[{ld_twocell(f), ld_twocell(f)}] = ld_twocell(f);
      }
      B.homs[{a, b}] = H;
    }
  for (const auto& a : C.objects) B.unit1[a] = C.id_of(a);
  for (const auto& [gid, g] : C.morphisms)
    for (const auto& [fid, f] : C.morphisms) {
      if (g.dom != f.cod) continue;
      Id gf = C.compose(gid, fid);
      B.hc1[{gid, fid}] = gf;
      B.hc2[{ld_twocell(gid), ld_twocell(fid)}] = ld_twocell(gf);
    }
  for (const auto& [hid, h] : C.morphisms)
    for (const auto& [gid, g] : C.morphisms) {
      if (h.dom != g.cod) continue;
      for (const auto& [fid, f] : C.morphisms) {
        if (g.dom != f.cod) continue;
        B.assoc[{hid, gid, fid}] =
            ld_twocell(C.compose(hid, C.compose(gid, fid)));
      }
    }
  for (const auto& [fid, f] : C.morphisms) {
    B.lun[fid] = ld_twocell(fid);
    B.run[fid] = ld_twocell(fid);
  }
  B.seal();
  return B;
}

inline FinBicat dual_op(const FinBicat& B) {
  FinBicat R;
  R.objects = B.objects;
  R.total = B.total;
  for (const auto& [ab, H] : B.homs) R.homs[{ab.second, ab.first}] = H;
  R.unit1 = B.unit1;
  for (const auto& [p, gf] : B.hc1) R.hc1[{p.second, p.first}] = gf;
  for (const auto& [p, c] : B.hc2) R.hc2[{p.second, p.first}] = c;
  R.seal();
  for (const auto& [t, a] : B.assoc) {
    const auto& [h, g, f] = t;
    // op-associator (f,g,h) is the inverse of the original (h,g,f)
    R.assoc[{f, g, h}] = *B.invert2(a);
  }
  for (const auto& [f, c] : B.lun) R.run[f] = c;
  for (const auto& [f, c] : B.run) R.lun[f] = c;
  return R;
}

inline FinBicat dual_co(const FinBicat& B) {
  FinBicat R;
  R.objects = B.objects;
  R.total = B.total;
  for (const auto& [ab, H] : B.homs) {
    FinCat Hop;
    Hop.objects = H.objects;
    for (const auto& [m, mm] : H.morphisms) Hop.add_mor(m, mm.cod, mm.dom);
    Hop.identities = H.identities;
    for (const auto& [p, c] : H.comp) Hop.comp[{p.second, p.first}] = c;
    R.homs[ab] = Hop;
  }
  R.unit1 = B.unit1;
  R.hc1 = B.hc1;
  R.hc2 = B.hc2;
  R.seal();
  for (const auto& [t, a] : B.assoc) R.assoc[t] = *B.invert2(a);
  for (const auto& [f, c] : B.lun) R.lun[f] = *B.invert2(c);
  for (const auto& [f, c] : B.run) R.run[f] = *B.invert2(c);
  return R;
}

// ---------------------------------------------------------------------------
// Pseudofunctors

struct PseudoFunctor {
  std::map<Id, Id> on_objects;
  std::map<Id, Id> on_1cells;
  std::map<Id, Id> on_2cells;
  std::map<std::pair<Id, Id>, Id> comp_cell;  // (g,f) -> Tg.Tf => T(gf)
  std::map<Id, Id> unit_cell;                 // a -> 1_{Ta} => T(1_a)

  const Id& ob(const Id& a) const { return on_objects.at(a); }
  const Id& c1(const Id& f) const { return on_1cells.at(f); }
  const Id& c2(const Id& c) const { return on_2cells.at(c); }
  const Id& comp(const Id& g, const Id& f) const { return comp_cell.at({g, f}); }
  const Id& unit(const Id& a) const { return unit_cell.at(a); }
};

inline PseudoFunctor identity_pseudofunctor(const FinBicat& B) {
  PseudoFunctor T;
  for (const auto& o : B.objects) {
    T.on_objects[o] = o;
    T.unit_cell[o] = B.id2(B.unit1.at(o));
  }
  for (const auto& [f, ab] : B.home1) T.on_1cells[f] = f;
  for (const auto& [c, ab] : B.home2) T.on_2cells[c] = c;
  for (const auto& [p, gf] : B.hc1) T.comp_cell[p] = B.id2(gf);
  return T;
}

inline Diags check_pseudofunctor(const PseudoFunctor& T, const FinBicat& A,
                                 const FinBicat& B) {
  Diags ds;
  for (const auto& a : A.objects) {
    auto it = T.on_objects.find(a);
    if (it == T.on_objects.end())
      ds.push_back({"MissingObjectImage", a});
    else if (std::find(B.objects.begin(), B.objects.end(), it->second) ==
             B.objects.end())
      ds.push_back({"UnknownObject", "image of " + a});
  }
  if (!ds.empty()) return ds;
  for (const auto& [f, ab] : A.home1) {
    auto it = T.on_1cells.find(f);
    if (it == T.on_1cells.end()) {
      ds.push_back({"Missing1CellImage", f});
      continue;
    }
    if (!B.home1.count(it->second) ||
        B.home1.at(it->second) !=
            std::make_pair(T.ob(ab.first), T.ob(ab.second)))
      ds.push_back({"Boundary1NotPreserved", f});
  }
  if (!ds.empty()) return ds;
  for (const auto& [c, ab] : A.home2) {
    auto it = T.on_2cells.find(c);
    if (it == T.on_2cells.end()) {
      ds.push_back({"Missing2CellImage", c});
      continue;
    }
    if (!B.home2.count(it->second) || B.src2(it->second) != T.c1(A.src2(c)) ||
        B.dst2(it->second) != T.c1(A.dst2(c)))
      ds.push_back({"Boundary2NotPreserved", c});
  }
  if (!ds.empty()) return ds;

  // local functoriality
  for (const auto& [ab, H] : A.homs) {
    for (const auto& f : H.objects)
      if (T.c2(H.id_of(f)) != B.id2(T.c1(f)))
        ds.push_back({"LocalIdentityNotPreserved", f});
    for (const auto& [b2, m2] : H.morphisms)
      for (const auto& [b1, m1] : H.morphisms) {
        if (m2.dom != m1.cod) continue;
        if (T.c2(H.compose(b2, b1)) != B.vcomp(T.c2(b2), T.c2(b1)))
          ds.push_back({"LocalCompositionNotPreserved", b2 + "." + b1});
      }
  }
  if (!ds.empty()) return ds;

  // comparison cells: presence, boundary, invertibility, naturality
  for (const auto& [p, gf] : A.hc1) {
    const auto& [g, f] = p;
    auto it = T.comp_cell.find(p);
    if (it == T.comp_cell.end()) {
      if (B.has_hc1(T.c1(g), T.c1(f)))
        ds.push_back({"MissingCompCell", g + "," + f});
      continue;
    }
    const Id& c = it->second;
    if (B.src2(c) != B.c1(T.c1(g), T.c1(f)) || B.dst2(c) != T.c1(gf)) {
      ds.push_back({"CompCellBoundary", g + "," + f});
      continue;
    }
    if (!B.invertible2(c))
      ds.push_back({"NonInvertibleConstraint", "comp cell " + g + "," + f});
  }
  for (const auto& a : A.objects) {
    auto it = T.unit_cell.find(a);
    if (it == T.unit_cell.end()) {
      ds.push_back({"MissingUnitCell", a});
      continue;
    }
    const Id& c = it->second;
    if (B.src2(c) != B.unit1.at(T.ob(a)) || B.dst2(c) != T.c1(A.unit1.at(a)))
      ds.push_back({"UnitCellBoundary", a});
    else if (!B.invertible2(c))
      ds.push_back({"NonInvertibleConstraint", "unit cell " + a});
  }
  if (!ds.empty()) return ds;

  // naturality of comp cells: T(mu*nu) . comp(g,f) = comp(g',f') . (Tmu*Tnu)
  for (const auto& [mu, hmu] : A.home2)
    for (const auto& [nu, hnu] : A.home2) {
      if (hmu.first != hnu.second) continue;
      const Id g = A.src2(mu), g2 = A.dst2(mu);
      const Id f = A.src2(nu), f2 = A.dst2(nu);
      if (!A.has_hc2(mu, nu)) continue;
      if (!T.comp_cell.count({g, f}) || !T.comp_cell.count({g2, f2})) continue;
      Id lhs = B.vcomp(T.c2(A.c2(mu, nu)), T.comp(g, f));
      Id rhs = B.vcomp(T.comp(g2, f2), B.c2(T.c2(mu), T.c2(nu)));
      if (lhs != rhs)
        ds.push_back({"CoherenceViolation", "comp naturality " + mu + "," + nu});
    }
  if (!ds.empty()) return ds;

  // associativity coherence:
  // T(a_{h,g,f}) . comp(hg,f) . (comp(h,g) * 1_{Tf})
  //   = comp(h,gf) . (1_{Th} * comp(g,f)) . a_{Th,Tg,Tf}
  for (const auto& [t, aA] : A.assoc) {
    const auto& [h, g, f] = t;
    if (!A.has_hc1(h, g) || !A.has_hc1(g, f)) continue;
    const Id hg = A.c1(h, g), gf = A.c1(g, f);
    if (!T.comp_cell.count({hg, f}) || !T.comp_cell.count({h, g}) ||
        !T.comp_cell.count({h, gf}) || !T.comp_cell.count({g, f}))
      continue;
    if (!B.assoc.count({T.c1(h), T.c1(g), T.c1(f)})) continue;
    Id lhs = B.vcomp(
        T.c2(aA),
        B.vcomp(T.comp(hg, f), B.c2(T.comp(h, g), B.id2(T.c1(f)))));
    Id rhs = B.vcomp(
        T.comp(h, gf),
        B.vcomp(B.c2(B.id2(T.c1(h)), T.comp(g, f)),
                B.assoc.at({T.c1(h), T.c1(g), T.c1(f)})));
    if (lhs != rhs)
      ds.push_back({"CoherenceViolation",
                    "hexagon (" + h + "," + g + "," + f + ")"});
  }
  if (!ds.empty()) return ds;

  // unit coherence
  for (const auto& [f, ab] : A.home1) {
    const Id ia = A.unit1.at(ab.first), ib = A.unit1.at(ab.second);
    if (A.lun.count(f) && T.comp_cell.count({ib, f}) && B.lun.count(T.c1(f))) {
      Id lhs = B.vcomp(
          T.c2(A.lun.at(f)),
          B.vcomp(T.comp(ib, f), B.c2(T.unit(ab.second), B.id2(T.c1(f)))));
      if (lhs != B.lun.at(T.c1(f)))
        ds.push_back({"CoherenceViolation", "left unit at " + f});
    }
    if (A.run.count(f) && T.comp_cell.count({f, ia}) && B.run.count(T.c1(f))) {
      Id rhs = B.vcomp(
          T.c2(A.run.at(f)),
          B.vcomp(T.comp(f, ia), B.c2(B.id2(T.c1(f)), T.unit(ab.first))));
      if (rhs != B.run.at(T.c1(f)))
        ds.push_back({"CoherenceViolation", "right unit at " + f});
    }
  }
  return ds;
}

inline PseudoFunctor compose_pseudofunctors(const PseudoFunctor& S,
                                            const PseudoFunctor& T,
                                            const FinBicat& A,
                                            const FinBicat& B,
                                            const FinBicat& C) {
  // S after T, with composite comparison cells
  PseudoFunctor R;
  for (const auto& [a, b] : T.on_objects) R.on_objects[a] = S.ob(b);
  for (const auto& [f, g] : T.on_1cells) R.on_1cells[f] = S.c1(g);
  for (const auto& [c, d] : T.on_2cells) R.on_2cells[c] = S.c2(d);
  for (const auto& [p, gf] : T.comp_cell) {
    const auto& [g, f] = p;
    // S(comp_T) . comp_S(Tg,Tf)
    R.comp_cell[p] = C.vcomp(S.c2(T.comp(g, f)), S.comp(T.c1(g), T.c1(f)));
  }
  for (const auto& [a, c] : T.unit_cell) {
    // S(unit_T) . unit_S at Ta
    R.unit_cell[a] = C.vcomp(S.c2(c), S.unit(T.ob(a)));
  }
  (void)A;
  (void)B;
  return R;
}

// ---------------------------------------------------------------------------
// Oplax slice B // X: objects are 1-cells into X, a morphism f -/-> g is a
// pair (m, alpha : f => g.m), tight when alpha is invertible.

struct OplaxSlice {
  FinBicat bicat;
  std::set<Id> tight;                             // tight 1-cells
  std::map<Id, std::pair<Id, Id>> onecell_data;   // slice 1-cell -> (m, alpha)
  std::map<Id, Id> twocell_data;                  // slice 2-cell -> xi
};

inline Id slice1_id(const Id& m, const Id& alpha, const Id& f, const Id& g) {
  return join_id({m, alpha, f, g});
}
inline Id slice2_id(const Id& xi, const Id& src, const Id& tgt) {
  return join_id({xi, src, tgt});
}

inline OplaxSlice oplax_slice(const FinBicat& B, const Id& X) {
  OplaxSlice S;
  // objects: all 1-cells into X
  std::vector<Id> objs;
  for (const auto& a : B.objects)
    for (const auto& f : B.onecells(a, X)) objs.push_back(f);
  std::sort(objs.begin(), objs.end());
  S.bicat.objects = objs;

  // 1-cells f -/-> g: (m : dom f -> dom g, alpha : f => g.m)
  for (const auto& f : objs)
    for (const auto& g : objs) {
      FinCat H;
      const Id a = B.src1(f), b = B.src1(g);
      std::vector<Id> cells;
      for (const auto& m : B.onecells(a, b)) {
        if (!B.has_hc1(g, m)) continue;
        for (const auto& alpha : B.twocells(f, B.c1(g, m))) {
          Id oid = slice1_id(m, alpha, f, g);
          H.add_object(oid);
          S.onecell_data[oid] = {m, alpha};
          if (B.invertible2(alpha)) S.tight.insert(oid);
        }
      }
      // 2-cells (m,alpha) => (m',alpha'): xi : m => m' with (g*xi).alpha = alpha'
      for (const auto& o1 : H.objects)
        for (const auto& o2 : H.objects) {
          const auto& [m1, a1] = S.onecell_data[o1];
          const auto& [m2, a2] = S.onecell_data[o2];
          for (const auto& xi : B.twocells(m1, m2)) {
            if (B.vcomp(B.wl(g, xi), a1) != a2) continue;
            Id tid = slice2_id(xi, o1, o2);
            H.add_mor(tid, o1, o2);
            S.twocell_data[tid] = xi;
          }
        }
      for (const auto& o : H.objects) {
        const auto& [m, al] = S.onecell_data[o];
        H.identities[o] = slice2_id(B.id2(m), o, o);
      }
      for (const auto& [t2, mm2] : H.morphisms)
        for (const auto& [t1, mm1] : H.morphisms) {
          if (mm2.dom != mm1.cod) continue;
          Id xi = B.vcomp(S.twocell_data[t2], S.twocell_data[t1]);
          H.comp[{t2, t1}] = slice2_id(xi, mm1.dom, mm2.cod);
        }
      S.bicat.homs[{f, g}] = H;
    }

  // units: (1_a, run^{-1}(f))
  for (const auto& f : objs) {
    const Id a = B.src1(f);
    Id alpha = *B.invert2(B.run.at(f));
    S.bicat.unit1[f] = slice1_id(B.unit1.at(a), alpha, f, f);
  }

  S.bicat.seal();

  // horizontal composition:
  // (n,beta) . (m,alpha) = (n.m, assoc(h,n,m) . (beta*m) . alpha)
  for (const auto& f : objs)
    for (const auto& g : objs)
      for (const auto& h : objs) {
        const auto& H1 = S.bicat.homs.at({f, g});
        const auto& H2 = S.bicat.homs.at({g, h});
        for (const auto& o2 : H2.objects)
          for (const auto& o1 : H1.objects) {
            const auto& [n, beta] = S.onecell_data[o2];
            const auto& [m, alpha] = S.onecell_data[o1];
            Id nm = B.c1(n, m);
            Id cell = B.vcomp(B.assoc.at({h, n, m}),
                              B.vcomp(B.wr(beta, m), alpha));
            S.bicat.hc1[{o2, o1}] = slice1_id(nm, cell, f, h);
          }
      }
  // hc2 from underlying whiskering
  for (const auto& f : objs)
    for (const auto& g : objs)
      for (const auto& h : objs) {
        const auto& H1 = S.bicat.homs.at({f, g});
        const auto& H2 = S.bicat.homs.at({g, h});
        for (const auto& [t2, mm2] : H2.morphisms)
          for (const auto& [t1, mm1] : H1.morphisms) {
            Id xi = B.c2(S.twocell_data[t2], S.twocell_data[t1]);
            Id src = S.bicat.hc1.at({mm2.dom, mm1.dom});
            Id tgt = S.bicat.hc1.at({mm2.cod, mm1.cod});
            S.bicat.hc2[{t2, t1}] = slice2_id(xi, src, tgt);
          }
      }
  // associators and unitors from the underlying ones
  auto lift2 = [&](const Id& xi, const Id& src, const Id& tgt) {
    return slice2_id(xi, src, tgt);
  };
  for (const auto& f : objs)
    for (const auto& g : objs)
      for (const auto& h : objs)
        for (const auto& k : objs) {
          const auto& Hfg = S.bicat.homs.at({f, g});
          const auto& Hgh = S.bicat.homs.at({g, h});
          const auto& Hhk = S.bicat.homs.at({h, k});
          for (const auto& o3 : Hhk.objects)
            for (const auto& o2 : Hgh.objects)
              for (const auto& o1 : Hfg.objects) {
                const auto& [m3, a3] = S.onecell_data[o3];
                const auto& [m2, a2] = S.onecell_data[o2];
                const auto& [m1, a1] = S.onecell_data[o1];
                Id src = S.bicat.hc1.at({S.bicat.hc1.at({o3, o2}), o1});
                Id tgt = S.bicat.hc1.at({o3, S.bicat.hc1.at({o2, o1})});
                S.bicat.assoc[{o3, o2, o1}] =
                    lift2(B.assoc.at({m3, m2, m1}), src, tgt);
              }
        }
  for (const auto& f : objs)
    for (const auto& g : objs) {
      const auto& H = S.bicat.homs.at({f, g});
      for (const auto& o : H.objects) {
        const auto& [m, al] = S.onecell_data[o];
        Id lsrc = S.bicat.hc1.at({S.bicat.unit1.at(g), o});
        Id rsrc = S.bicat.hc1.at({o, S.bicat.unit1.at(f)});
        S.bicat.lun[o] = lift2(B.lun.at(m), lsrc, o);
        S.bicat.run[o] = lift2(B.run.at(m), rsrc, o);
      }
    }
  S.bicat.seal();
  return S;
}

// ---------------------------------------------------------------------------
// Mixed left liftings (generic over any FinBicat)

struct MixedLiftWitness {
  Id h;        // the lifted 1-cell
  Id nu;       // exhibiting 2-cell f => g.h
  // for each competing (k, psi) the unique lambda : k => h
  std::vector<std::tuple<Id, Id, Id>> uniqueness;  // (k, psi, lambda)
  bool strong = false;
  // subterminality: per 1-cell t in hom(A,C), number of 2-cells t => h (0/1)
  std::vector<std::pair<Id, int>> subterminal_counts;
};

enum class LiftError { NoLifting, LiftingNotStrong };

struct MixedLiftOutcome {
  std::optional<MixedLiftWitness> witness;
  std::optional<LiftError> error;
  std::optional<MixedLiftWitness> non_strong;  // best universal-but-not-strong
};

// Search for the strong mixed left lifting of f through g (f : A -> B,
// g : C -> B sharing codomain).
inline MixedLiftOutcome mixed_left_lifting(const FinBicat& B, const Id& f,
                                           const Id& g) {
  MixedLiftOutcome out;
  const Id A = B.src1(f), Bo = B.dst1(f), C = B.src1(g);
  for (const auto& h : B.onecells(A, C)) {
    if (!B.has_hc1(g, h)) continue;
    Id gh = B.c1(g, h);
    for (const auto& nu : B.twocells(f, gh)) {
      MixedLiftWitness w;
      w.h = h;
      w.nu = nu;
      bool universal = true;
      for (const auto& k : B.onecells(A, C)) {
        if (!B.has_hc1(g, k)) { continue; }
        Id gk = B.c1(g, k);
        for (const auto& psi : B.twocells(f, gk)) {
          int count = 0;
          Id lam;
          for (const auto& lambda : B.twocells(k, h)) {
            if (B.vcomp(B.wl(g, lambda), psi) == nu) {
              ++count;
              if (count == 1) lam = lambda;
            }
          }
          if (count != 1) { universal = false; break; }
          w.uniqueness.push_back({k, psi, lam});
        }
        if (!universal) break;
      }
      if (!universal) continue;
      // strength: h subterminal in hom(A, C)
      bool strong = true;
      for (const auto& t : B.onecells(A, C)) {
        int n = (int)B.twocells(t, h).size();
        w.subterminal_counts.push_back({t, n});
        if (n > 1) strong = false;
      }
      w.strong = strong;
      if (strong) {
        out.witness = w;
        return out;
      }
      if (!out.non_strong) out.non_strong = w;
    }
  }
  out.error = out.non_strong ? LiftError::LiftingNotStrong : LiftError::NoLifting;
  return out;
}

}  // namespace laxgen
