#pragma once

// The spectrum of a lax familial pseudofunctor, its bicategory of elements,
// the factorization T = V . G with V a locally discrete fibration, 2-cell
// lifting, F-universal arrows, and the terminal-object cross-check via
// oplax slices.

#include <optional>

#include "laxgen/laxfam.hpp"

namespace laxgen {

// ---------------------------------------------------------------------------
// Representative generic cells

inline Id mx_ob(const Gen1& d) { return join_id({d.first, d.second}); }
inline Id mx_mor(const Id& h, const Id& gamma, const Id& src, const Id& tgt) {
  return join_id({h, gamma, src, tgt});
}

// All generic cells out of d with target z landing in T(Bo), grouped into
// isomorphism classes; the representative is the least (h, gamma) pair.
class CellReps {
 public:
  explicit CellReps(const LaxContext& ctx) : ctx_(ctx) {}

  struct Family {
    std::vector<std::pair<Id, Id>> cells;        // all generic (h, gamma)
    std::map<std::pair<Id, Id>, std::pair<Id, Id>> rep;  // cell -> representative
  };

  const Family& family(const Gen1& d, const Id& Bo, const Id& z) const {
    auto key = std::make_tuple(d.first, d.second, Bo, z);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Family fam;
    const FinBicat& A = ctx_.A;
    const FinBicat& B = ctx_.B;
    for (const auto& h : A.onecells(d.first, Bo)) {
      const Id Th = ctx_.T.c1(h);
      if (!B.has_hc1(Th, d.second)) continue;
      for (const auto& gamma : B.twocells(B.c1(Th, d.second), z))
        if (ctx_.is_generic_cell(d, h, gamma)) fam.cells.push_back({h, gamma});
    }
    std::sort(fam.cells.begin(), fam.cells.end());
    // isomorphism classes: (h,g) ~ (h',g') via invertible lambda : h => h'
    // with g = g' . (T lambda * delta)
    std::map<std::pair<Id, Id>, std::pair<Id, Id>> parent;
    for (const auto& c : fam.cells) parent[c] = c;
    std::function<std::pair<Id, Id>(std::pair<Id, Id>)> find =
        [&](std::pair<Id, Id> x) {
          while (parent[x] != x) x = parent[x];
          return x;
        };
    auto unite = [&](const std::pair<Id, Id>& a, const std::pair<Id, Id>& b) {
      auto ra = find(a), rb = find(b);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    };
    for (const auto& c1 : fam.cells)
      for (const auto& c2 : fam.cells) {
        if (c1 == c2) continue;
        for (const auto& lam : A.twocells(c1.first, c2.first))
          if (A.invertible2(lam) &&
              ctx_.paste_cell(d.second, c2.second, lam) == c1.second) {
            unite(c1, c2);
            break;
          }
      }
    for (const auto& c : fam.cells) fam.rep[c] = find(c);
    return cache_.emplace(key, std::move(fam)).first->second;
  }

  // representative of a given generic cell; nullopt when (h, gamma) is not
  // generic or not in the family
  std::optional<std::pair<Id, Id>> rep(const Gen1& d, const Id& Bo, const Id& z,
                                       const Id& h, const Id& gamma) const {
    const auto& fam = family(d, Bo, z);
    auto it = fam.rep.find({h, gamma});
    if (it == fam.rep.end()) return std::nullopt;
    return it->second;
  }

 private:
  const LaxContext& ctx_;
  mutable std::map<std::tuple<Id, Id, Id, Id>, Family> cache_;
};

// ---------------------------------------------------------------------------
// The spectrum

struct Spectrum {
  std::map<Id, FinCat> m_x;                       // X -> M_X
  std::map<Id, Gen1> ob_data;                     // M object -> (Ao, delta)
  std::map<Id, std::pair<Id, Id>> cell_data;      // M morphism -> (h, gamma)
  std::map<Id, FinFunctor> reindex;               // f : Y -> X  ->  M_X -> M_Y
  std::map<std::pair<Id, Id>, NatTrans> comp_iso; // (f, e): M_e.M_f => M_{f.e}
  std::map<Id, NatTrans> unit_iso;                // X: Id => M_{1_X}
  // when A has a terminal object: per X the isomorphism M_X -> B(X, T1)
  std::optional<Id> terminal;
  std::map<Id, FinFunctor> terminal_iso;
};

struct SpectrumError {
  std::string kind;  // PrerequisiteFailed | CompositionNotGeneric | ...
  Id witness;
};

// The canonical identity cell T(1_Ao) . delta => delta.
inline Id spectrum_identity_cell(const LaxContext& ctx, const Gen1& d) {
  const FinBicat& B = ctx.B;
  return B.vcomp(B.lun.at(d.second),
                 B.c2(*B.invert2(ctx.T.unit(d.first)), B.id2(d.second)));
}

// Composite of generic cells (k, phi) . (h, gamma) as a cell out of d.
inline std::optional<std::pair<Id, Id>> compose_cells(const LaxContext& ctx,
                                                      const Gen1& d,
                                                      const Id& h,
                                                      const Id& gamma,
                                                      const Id& k,
                                                      const Id& phi) {
  const FinBicat& A = ctx.A;
  const FinBicat& B = ctx.B;
  const Id Tk = ctx.T.c1(k), Th = ctx.T.c1(h);
  if (!A.has_hc1(k, h) || !ctx.T.comp_cell.count({k, h})) return std::nullopt;
  if (!B.assoc.count({Tk, Th, d.second})) return std::nullopt;
  Id c1 = B.c2(*B.invert2(ctx.T.comp(k, h)), B.id2(d.second));
  Id c2q = B.assoc.at({Tk, Th, d.second});
  Id c3 = B.c2(B.id2(Tk), gamma);
  Id cell = B.vcomp(phi, B.vcomp(c3, B.vcomp(c2q, c1)));
  return std::make_pair(A.c1(k, h), cell);
}

// Detect a terminal object of a bicategory: every hom into it is equivalent
// to the terminal category (nonempty, and exactly one 2-cell between any two
// 1-cells, necessarily invertible).
inline std::optional<Id> find_terminal(const FinBicat& A) {
  for (const auto& t : A.objects) {
    bool ok = true;
    for (const auto& a : A.objects) {
      auto cells = A.onecells(a, t);
      if (cells.empty()) { ok = false; break; }
      for (const auto& u : cells)
        for (const auto& v : cells) {
          auto tc = A.twocells(u, v);
          if (tc.size() != 1 || !A.invertible2(tc[0])) { ok = false; break; }
        }
      if (!ok) break;
    }
    if (ok) return t;
  }
  return std::nullopt;
}

inline std::variant<Spectrum, SpectrumError> spectrum(const LaxContext& ctx,
                                                      const CellReps& reps,
                                                      bool check_prerequisite = true) {
  const FinBicat& A = ctx.A;
  const FinBicat& B = ctx.B;
  Spectrum sp;

  // prerequisite: each hom copresheaf is a lax conical colimit of
  // representables (checked through the bicategory-of-elements machinery)
  if (check_prerequisite) {
    for (const auto& X : B.objects) {
      auto F = hom_copresheaf(ctx.T, A, B, X);
      auto el = el_bicategory(F);
      auto d = decide_lax_colimit_of_reps(F, el);
      if (!d.yes) return SpectrumError{"PrerequisiteFailed", X};
    }
  }

  // M_X
  for (const auto& X : B.objects) {
    FinCat M;
    auto gens = ctx.generics_out_of(X);
    for (const auto& d : gens) {
      Id o = mx_ob(d);
      M.add_object(o);
      sp.ob_data[o] = d;
    }
    for (const auto& d : gens)
      for (const auto& s : gens) {
        const auto& fam = reps.family(d, s.first, s.second);
        std::set<std::pair<Id, Id>> repset;
        for (const auto& c : fam.cells) repset.insert(fam.rep.at(c));
        for (const auto& r : repset) {
          Id m = mx_mor(r.first, r.second, mx_ob(d), mx_ob(s));
          M.add_mor(m, mx_ob(d), mx_ob(s));
          sp.cell_data[m] = r;
        }
      }
    for (const auto& d : gens) {
      Id idcell = spectrum_identity_cell(ctx, d);
      auto r = reps.rep(d, d.first, d.second, A.unit1.at(d.first), idcell);
      if (!r) return SpectrumError{"IdentityCellNotGeneric", mx_ob(d)};
      M.identities[mx_ob(d)] = mx_mor(r->first, r->second, mx_ob(d), mx_ob(d));
    }
    for (const auto& [m2, mm2] : M.morphisms)
      for (const auto& [m1, mm1] : M.morphisms) {
        if (mm2.dom != mm1.cod) continue;
        const Gen1& d = sp.ob_data[mm1.dom];
        const Gen1& s = sp.ob_data[mm2.dom];
        const Gen1& w = sp.ob_data[mm2.cod];
        const auto& [h, gamma] = sp.cell_data[m1];
        const auto& [k, phi] = sp.cell_data[m2];
        auto comp = compose_cells(ctx, d, h, gamma, k, phi);
        if (!comp) return SpectrumError{"CompositionUndeclared", m1};
        auto r = reps.rep(d, w.first, w.second, comp->first, comp->second);
        if (!r) return SpectrumError{"CompositionNotGeneric", m1};
        M.comp[{m2, m1}] = mx_mor(r->first, r->second, mm1.dom, mm2.cod);
        (void)s;
      }
    auto ds = check_category(M);
    if (!ds.empty()) return SpectrumError{"IndexNotACategory", X + ": " + ds[0].code};
    sp.m_x[X] = M;
  }

  // reindexing along f : Y -> X
  for (const auto& [f, fyx] : B.home1) {
    const Id Y = fyx.first, X = fyx.second;
    FinFunctor Mf;
    const FinCat& MX = sp.m_x.at(X);
    bool total = true;
    for (const auto& o : MX.objects) {
      const Gen1& d = sp.ob_data[o];
      if (!B.has_hc1(d.second, f)) { total = false; break; }
      auto gf = ctx.lax_generic_factorization(B.c1(d.second, f), d.first);
      if (!gf) { total = false; break; }
      Mf.on_objects[o] = mx_ob({gf->mid, gf->delta});
    }
    if (!total) continue;  // fragments only; full fixtures always land here
    for (const auto& [mid, mm] : MX.morphisms) {
      const Gen1& d = sp.ob_data[mm.dom];
      const Gen1& s = sp.ob_data[mm.cod];
      const auto& [h, gamma] = sp.cell_data[mid];
      auto gfd = ctx.lax_generic_factorization(B.c1(d.second, f), d.first);
      auto gfs = ctx.lax_generic_factorization(B.c1(s.second, f), s.first);
      const Id Th = ctx.T.c1(h), Tu = ctx.T.c1(gfd->fbar);
      // T(h.u).delta' => Tv.sigma'
      if (!ctx.T.comp_cell.count({h, gfd->fbar})) { total = false; break; }
      Id q1 = B.c2(*B.invert2(ctx.T.comp(h, gfd->fbar)), B.id2(gfd->delta));
      Id q2 = B.assoc.at({Th, Tu, gfd->delta});
      Id q3 = B.c2(B.id2(Th), gfd->compare);
      Id q4 = *B.invert2(B.assoc.at({Th, d.second, f}));
      Id q5 = B.c2(gamma, B.id2(f));
      Id q6 = *B.invert2(gfs->compare);
      Id alpha =
          B.vcomp(q6, B.vcomp(q5, B.vcomp(q4, B.vcomp(q3, B.vcomp(q2, q1)))));
      Square sq{gfs->mid, gfs->delta, ctx.A.c1(h, gfd->fbar), gfs->fbar, alpha};
      auto out = ctx.universal_factorization({gfd->mid, gfd->delta}, sq);
      if (out.status != UFStatus::Found)
        return SpectrumError{"ReindexFactorizationFailed", mid};
      auto r = reps.rep({gfd->mid, gfd->delta}, gfs->mid, gfs->delta,
                        out.factor->h, out.factor->gamma);
      if (!r) return SpectrumError{"ReindexCellNotGeneric", mid};
      Mf.on_morphisms[mid] = mx_mor(r->first, r->second, Mf.ob(mm.dom),
                                    Mf.ob(mm.cod));
    }
    if (!total) continue;
    auto ds = check_functor(Mf, MX, sp.m_x.at(Y));
    if (!ds.empty()) return SpectrumError{"ReindexNotAFunctor", f + ": " + ds[0].code};
    sp.reindex[f] = Mf;
  }

  // unit comparison Id => M_{1_X}
  for (const auto& X : B.objects) {
    const Id iX = B.unit1.at(X);
    if (!sp.reindex.count(iX)) continue;
    NatTrans n;
    const FinCat& MX = sp.m_x.at(X);
    bool ok = true;
    for (const auto& o : MX.objects) {
      const Gen1& d = sp.ob_data[o];
      auto g0 = ctx.lax_generic_factorization(B.c1(d.second, iX), d.first);
      Id s1 = B.c2(*B.invert2(ctx.T.unit(d.first)), B.id2(d.second));
      Id s2 = B.lun.at(d.second);
      Id s3 = *B.invert2(B.run.at(d.second));
      Id s4 = *B.invert2(g0->compare);
      Id alpha = B.vcomp(s4, B.vcomp(s3, B.vcomp(s2, s1)));
      Square sq{g0->mid, g0->delta, ctx.A.unit1.at(d.first), g0->fbar, alpha};
      auto out = ctx.universal_factorization(d, sq);
      if (out.status != UFStatus::Found) { ok = false; break; }
      auto r = reps.rep(d, g0->mid, g0->delta, out.factor->h, out.factor->gamma);
      if (!r) { ok = false; break; }
      n.components[o] =
          mx_mor(r->first, r->second, o, sp.reindex.at(iX).ob(o));
    }
    if (ok) sp.unit_iso[X] = n;
  }

  // binary comparison M_e . M_f => M_{f.e}
  for (const auto& [f, fyx] : B.home1)
    for (const auto& [e, ezy] : B.home1) {
      if (ezy.second != fyx.first) continue;
      if (!B.has_hc1(f, e)) continue;
      Id fe = B.c1(f, e);
      if (!sp.reindex.count(f) || !sp.reindex.count(e) || !sp.reindex.count(fe))
        continue;
      NatTrans n;
      const FinCat& MX = sp.m_x.at(fyx.second);
      bool ok = true;
      for (const auto& o : MX.objects) {
        const Gen1& d = sp.ob_data[o];
        auto g1 = ctx.lax_generic_factorization(B.c1(d.second, f), d.first);
        auto g2 =
            ctx.lax_generic_factorization(B.c1(g1->delta, e), g1->mid);
        auto g3 = ctx.lax_generic_factorization(B.c1(d.second, fe), d.first);
        const Id Tu1 = ctx.T.c1(g1->fbar), Tu2 = ctx.T.c1(g2->fbar);
        if (!ctx.T.comp_cell.count({g1->fbar, g2->fbar})) { ok = false; break; }
        Id r1 = B.c2(*B.invert2(ctx.T.comp(g1->fbar, g2->fbar)),
                     B.id2(g2->delta));
        Id r2 = B.assoc.at({Tu1, Tu2, g2->delta});
        Id r3 = B.c2(B.id2(Tu1), g2->compare);
        Id r4 = *B.invert2(B.assoc.at({Tu1, g1->delta, e}));
        Id r5 = B.c2(g1->compare, B.id2(e));
        Id r6 = B.assoc.at({d.second, f, e});
        Id rho = B.vcomp(
            r6, B.vcomp(r5, B.vcomp(r4, B.vcomp(r3, B.vcomp(r2, r1)))));
        Id alpha = B.vcomp(*B.invert2(g3->compare), rho);
        Square sq{g3->mid, g3->delta, ctx.A.c1(g1->fbar, g2->fbar), g3->fbar,
                  alpha};
        auto out = ctx.universal_factorization({g2->mid, g2->delta}, sq);
        if (out.status != UFStatus::Found) { ok = false; break; }
        auto r = reps.rep({g2->mid, g2->delta}, g3->mid, g3->delta,
                          out.factor->h, out.factor->gamma);
        if (!r) { ok = false; break; }
        Id src = sp.reindex.at(e).ob(sp.reindex.at(f).ob(o));
        Id tgt = sp.reindex.at(fe).ob(o);
        n.components[o] = mx_mor(r->first, r->second, src, tgt);
      }
      if (ok) sp.comp_iso[{f, e}] = n;
    }

  // terminal-object simple form: M_X iso to B(X, T1)
  sp.terminal = find_terminal(A);
  if (sp.terminal) {
    const Id one = *sp.terminal;
    for (const auto& X : B.objects) {
      FinFunctor Phi;
      const FinCat& MX = sp.m_x.at(X);
      const FinCat HX = B.hom(X, ctx.T.ob(one));
      bool ok = true;
      for (const auto& o : MX.objects) {
        const Gen1& d = sp.ob_data[o];
        Id t = A.onecells(d.first, one).front();
        if (!B.has_hc1(ctx.T.c1(t), d.second)) { ok = false; break; }
        Phi.on_objects[o] = B.c1(ctx.T.c1(t), d.second);
      }
      if (!ok) continue;
      for (const auto& [mid, mm] : MX.morphisms) {
        const Gen1& d = sp.ob_data[mm.dom];
        const Gen1& s = sp.ob_data[mm.cod];
        const auto& [h, gamma] = sp.cell_data[mid];
        Id tA = A.onecells(d.first, one).front();
        Id tB = A.onecells(s.first, one).front();
        auto mu = A.twocells(tA, A.c1(tB, h));
        if (mu.size() != 1 || !ctx.T.comp_cell.count({tB, h})) { ok = false; break; }
        const Id TtB = ctx.T.c1(tB), Th = ctx.T.c1(h);
        Id w1 = B.c2(ctx.T.c2(mu[0]), B.id2(d.second));
        Id w2 = B.c2(*B.invert2(ctx.T.comp(tB, h)), B.id2(d.second));
        Id w3 = B.assoc.at({TtB, Th, d.second});
        Id w4 = B.c2(B.id2(TtB), gamma);
        Phi.on_morphisms[mid] = B.vcomp(w4, B.vcomp(w3, B.vcomp(w2, w1)));
      }
      if (!ok) continue;
      // require a functor that is bijective on objects and morphisms
      if (!check_functor(Phi, MX, HX).empty()) continue;
      std::set<Id> obim, morim;
      for (const auto& [a, b] : Phi.on_objects) obim.insert(b);
      for (const auto& [a, b] : Phi.on_morphisms) morim.insert(b);
      if (obim.size() == MX.objects.size() &&
          obim.size() == HX.objects.size() &&
          morim.size() == MX.morphisms.size() &&
          morim.size() == HX.morphisms.size())
        sp.terminal_iso[X] = Phi;
    }
  }
  return sp;
}

// ---------------------------------------------------------------------------
// The bicategory of elements of the spectrum

struct SpecEl {
  FinBicat bicat;
  PseudoFunctor V;  // projection to B
  std::map<Id, std::pair<Id, Gen1>> ob_data;            // (X, (Ao, delta))
  std::map<Id, std::tuple<Id, Id, Id>> one_data;        // (f, h, gamma)
  std::map<Id, Id> two_data;                            // nu
};

inline Id spel_one(const Id& f, const Id& h, const Id& gamma, const Id& src,
                   const Id& tgt) {
  return join_id({f, h, gamma, src, tgt});
}
inline Id spel_two(const Id& nu, const Id& src, const Id& tgt) {
  return join_id({nu, src, tgt});
}

inline std::variant<SpecEl, SpectrumError> spectrum_el(const LaxContext& ctx,
                                                       const CellReps& reps,
                                                       const Spectrum& sp) {
  const FinBicat& A = ctx.A;
  const FinBicat& B = ctx.B;
  SpecEl el;
  FinBicat& E = el.bicat;

  for (const auto& [X, MX] : sp.m_x)
    for (const auto& o : MX.objects) {
      E.objects.push_back(o);
      el.ob_data[o] = {X, sp.ob_data.at(o)};
      el.V.on_objects[o] = X;
    }
  std::sort(E.objects.begin(), E.objects.end());

  // hom categories
  for (const auto& o1 : E.objects)
    for (const auto& o2 : E.objects) {
      const auto& [X, d] = el.ob_data[o1];
      const auto& [Y, s] = el.ob_data[o2];
      FinCat H;
      for (const auto& f : B.onecells(X, Y)) {
        if (!B.has_hc1(s.second, f)) continue;
        Id z = B.c1(s.second, f);
        const auto& fam = reps.family(d, s.first, z);
        std::set<std::pair<Id, Id>> repset;
        for (const auto& c : fam.cells) repset.insert(fam.rep.at(c));
        for (const auto& r : repset) {
          Id c = spel_one(f, r.first, r.second, o1, o2);
          H.add_object(c);
          el.one_data[c] = {f, r.first, r.second};
          el.V.on_1cells[c] = f;
        }
      }
      // 2-cells
      for (const auto& c1 : H.objects)
        for (const auto& c2 : H.objects) {
          const auto& [f, h, gamma] = el.one_data[c1];
          const auto& [g, k, phi] = el.one_data[c2];
          for (const auto& nu : B.twocells(f, g)) {
            // exists nubar : h => k with (sigma * nu) . gamma
            //   = phi . (T nubar * delta)
            Id lhs = B.vcomp(B.c2(B.id2(s.second), nu), gamma);
            bool exists = false;
            for (const auto& nubar : A.twocells(h, k))
              if (ctx.paste_cell(d.second, phi, nubar) == lhs) {
                exists = true;
                break;
              }
            if (!exists) continue;
            Id t = spel_two(nu, c1, c2);
            H.add_mor(t, c1, c2);
            el.two_data[t] = nu;
            el.V.on_2cells[t] = nu;
          }
        }
      for (const auto& c : H.objects) {
        const auto& [f, h, gamma] = el.one_data[c];
        H.identities[c] = spel_two(B.id2(f), c, c);
      }
      for (const auto& [t2, m2] : H.morphisms)
        for (const auto& [t1, m1] : H.morphisms) {
          if (m2.dom != m1.cod) continue;
          H.comp[{t2, t1}] =
              spel_two(B.vcomp(el.two_data[t2], el.two_data[t1]), m1.dom,
                       m2.cod);
        }
      E.homs[{o1, o2}] = H;
    }

  // units
  for (const auto& o : E.objects) {
    const auto& [X, d] = el.ob_data[o];
    Id idc = spectrum_identity_cell(ctx, d);
    // gamma0 : T(1).delta => delta . 1_X
    Id gamma0 = B.vcomp(*B.invert2(B.run.at(d.second)), idc);
    auto r = reps.rep(d, d.first, B.c1(d.second, B.unit1.at(X)),
                      A.unit1.at(d.first), gamma0);
    if (!r) return SpectrumError{"IdentityCellNotGeneric", o};
    E.unit1[o] = spel_one(B.unit1.at(X), r->first, r->second, o, o);
  }
  E.seal();

  // horizontal composition of 1-cells
  for (const auto& o1 : E.objects)
    for (const auto& o2 : E.objects)
      for (const auto& o3 : E.objects) {
        const auto& H1 = E.homs.at({o1, o2});
        const auto& H2 = E.homs.at({o2, o3});
        const auto& [X, d] = el.ob_data[o1];
        const auto& [Y, s] = el.ob_data[o2];
        const auto& [Z, w] = el.ob_data[o3];
        for (const auto& c2 : H2.objects)
          for (const auto& c1 : H1.objects) {
            const auto& [g, k, phi] = el.one_data[c2];
            const auto& [f, h, gamma] = el.one_data[c1];
            if (!B.has_hc1(g, f)) continue;
            auto pasted = paste_generic_cells(ctx, d.second, h, gamma, f,
                                              s.second, k, phi, g, w.second);
            if (!pasted) return SpectrumError{"CompositionUndeclared", c1};
            Id gf = B.c1(g, f);
            auto r = reps.rep(d, w.first, B.c1(w.second, gf), pasted->first,
                              pasted->second);
            if (!r) return SpectrumError{"CompositionNotGeneric", c1};
            E.hc1[{c2, c1}] = spel_one(gf, r->first, r->second, o1, o3);
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
            E.hc2[{t2, t1}] = spel_two(nu, E.hc1.at({m2.dom, m1.dom}),
                                       E.hc1.at({m2.cod, m1.cod}));
          }
      }

  // associators and unitors from the base
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
                Id a = B.assoc.at({std::get<0>(el.one_data[c3]),
                                   std::get<0>(el.one_data[c2]),
                                   std::get<0>(el.one_data[c1])});
                E.assoc[{c3, c2, c1}] =
                    spel_two(a, E.hc1.at({hg, c1}), E.hc1.at({c3, gf}));
              }
        }
  for (const auto& [c, fd] : el.one_data) {
    const Id src = E.home1.at(c).first, tgt = E.home1.at(c).second;
    const Id f = std::get<0>(fd);
    if (E.hc1.count({E.unit1.at(tgt), c}))
      E.lun[c] = spel_two(B.lun.at(f), E.hc1.at({E.unit1.at(tgt), c}), c);
    if (E.hc1.count({c, E.unit1.at(src)}))
      E.run[c] = spel_two(B.run.at(f), E.hc1.at({c, E.unit1.at(src)}), c);
  }
  E.seal();

  // projection comparison cells (strict)
  for (const auto& [p, gf] : E.hc1) {
    const auto& [c2, c1] = p;
    Id g = std::get<0>(el.one_data[c2]), f = std::get<0>(el.one_data[c1]);
    el.V.comp_cell[p] = B.id2(B.c1(g, f));
  }
  for (const auto& o : E.objects)
    el.V.unit_cell[o] = B.id2(B.unit1.at(el.ob_data[o].first));
  return el;
}

// The reindexing assignment P out of the elements of the spectrum: it sends
// (X, delta : X -> TA) to A, a morphism (f, h, gamma) to h, and a 2-cell to
// the unique comparison between the underlying A-cells. Comparison cells
// come from the representative selection.
inline std::optional<PseudoFunctor> spectrum_p_assignment(const LaxContext& ctx,
                                                          const SpecEl& el) {
  const FinBicat& A = ctx.A;
  const FinBicat& B = ctx.B;
  PseudoFunctor P;
  for (const auto& o : el.bicat.objects)
    P.on_objects[o] = el.ob_data.at(o).second.first;
  for (const auto& [c, fd] : el.one_data) P.on_1cells[c] = std::get<1>(fd);
  // 2-cells: nu : (f,h,gamma) => (g,k,phi) maps to the unique nubar with
  // (sigma * nu) . gamma = phi . (T nubar * delta)
  for (const auto& [t, nu] : el.two_data) {
    const Id c1 = el.bicat.src2(t), c2 = el.bicat.dst2(t);
    const auto& [f, h, gamma] = el.one_data.at(c1);
    const auto& [g, k, phi] = el.one_data.at(c2);
    const Id src = el.bicat.home1.at(c1).first;
    const auto& [X, d] = el.ob_data.at(src);
    const Id tgt = el.bicat.home1.at(c1).second;
    const auto& [Y, s] = el.ob_data.at(tgt);
    Id lhs = B.vcomp(B.c2(B.id2(s.second), nu), gamma);
    std::optional<Id> nubar;
    int count = 0;
    for (const auto& cand : A.twocells(h, k))
      if (ctx.paste_cell(d.second, phi, cand) == lhs) {
        ++count;
        nubar = cand;
      }
    if (count != 1) return std::nullopt;
    P.on_2cells[t] = *nubar;
  }
  // comparison cells: the invertible A-cell linking k.h to the chosen
  // representative of the pasted generic cell
  for (const auto& [p, comp1] : el.bicat.hc1) {
    const auto& [c2, c1] = p;
    const auto& [f, h, gamma] = el.one_data.at(c1);
    const auto& [g, k, phi] = el.one_data.at(c2);
    const Id src = el.bicat.home1.at(c1).first;
    const auto& [X, d] = el.ob_data.at(src);
    const Id tgt2 = el.bicat.home1.at(c2).second;
    const auto& [Z, w] = el.ob_data.at(tgt2);
    auto pasted = paste_generic_cells(ctx, d.second, h, gamma, f,
                                      el.ob_data.at(el.bicat.home1.at(c1).second)
                                          .second.second,
                                      k, phi, g, w.second);
    if (!pasted) return std::nullopt;
    const auto& [hrep, gamrep] = std::make_pair(
        std::get<1>(el.one_data.at(comp1)), std::get<2>(el.one_data.at(comp1)));
    std::optional<Id> lam;
    for (const auto& cand : A.twocells(pasted->first, hrep))
      if (A.invertible2(cand) &&
          ctx.paste_cell(d.second, gamrep, cand) == pasted->second) {
        lam = cand;
        break;
      }
    if (!lam) return std::nullopt;
    P.comp_cell[p] = *lam;
  }
  for (const auto& o : el.bicat.objects) {
    const auto& [X, d] = el.ob_data.at(o);
    Id idc = spectrum_identity_cell(ctx, d);
    Id gamma0 = B.vcomp(*B.invert2(B.run.at(d.second)), idc);
    const Id u = el.bicat.unit1.at(o);
    const auto& [fu, hu, gu] = el.one_data.at(u);
    std::optional<Id> lam;
    for (const auto& cand : A.twocells(A.unit1.at(d.first), hu))
      if (A.invertible2(cand) &&
          ctx.paste_cell(d.second, gu, cand) == gamma0) {
        lam = cand;
        break;
      }
    if (!lam) return std::nullopt;
    P.unit_cell[o] = *lam;
  }
  if (!check_pseudofunctor(P, el.bicat, A).empty()) return std::nullopt;
  return P;
}

// Cartesian classification double check: a morphism (f, h, gamma) of the
// element bicategory is abstractly cartesian (its comparison into the chosen
// reindexing is an isomorphism of M_X) iff gamma is invertible.
inline bool check_cartesian_classification(const LaxContext& ctx,
                                           const CellReps& reps,
                                           const Spectrum& sp,
                                           const SpecEl& el) {
  const FinBicat& B = ctx.B;
  for (const auto& [c, fd] : el.one_data) {
    const auto& [f, h, gamma] = fd;
    const Id src = el.bicat.home1.at(c).first;
    const auto& [X, d] = el.ob_data.at(src);
    const Id tgt = el.bicat.home1.at(c).second;
    const auto& [Y, s] = el.ob_data.at(tgt);
    // factor gamma through the chosen factorization of sigma . f
    auto gf = ctx.lax_generic_factorization(B.c1(s.second, f), s.first);
    if (!gf) return false;
    Id alpha = B.vcomp(*B.invert2(gf->compare), gamma);
    Square sq{gf->mid, gf->delta, h, gf->fbar, alpha};
    auto out = ctx.universal_factorization(d, sq);
    if (out.status != UFStatus::Found) return false;
    auto r = reps.rep(d, gf->mid, gf->delta, out.factor->h, out.factor->gamma);
    if (!r) return false;
    // invertibility of the M_X morphism
    const FinCat& MX = sp.m_x.at(X);
    Id mmor = mx_mor(r->first, r->second, mx_ob(d), mx_ob({gf->mid, gf->delta}));
    bool cart_abstract = MX.has_mor(mmor) && MX.is_iso(mmor);
    bool gamma_inv = B.invertible2(gamma);
    if (cart_abstract != gamma_inv) return false;
  }
  return true;
}

}  // namespace laxgen
