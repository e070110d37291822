#pragma once

// Executable fixtures: Span bicategories over finite categories with
// pullbacks, the span inclusion, span composition functors, the bounded
// swap fragment, and a truncated Fam construction.

#include <optional>
#include <stdexcept>

#include "laxgen/bicat.hpp"
#include "laxgen/diers1d.hpp"
#include "laxgen/elbicat.hpp"

namespace laxgen {

// ---------------------------------------------------------------------------
// Chosen pullbacks

struct PullbackChoice {
  // (f, g) with common codomain -> certificate (includes mediator table)
  std::map<std::pair<Id, Id>, PullbackCert> chosen;

  const PullbackCert& at(const Id& f, const Id& g) const {
    return chosen.at({f, g});
  }
  // mediator of the cone (p, q) into the chosen pullback of (f, g)
  const Id& mediator(const Id& f, const Id& g, const Id& p, const Id& q) const {
    const auto& cert = chosen.at({f, g});
    for (const auto& [cone, med] : cert.mediators)
      if (cone.to_a == p && cone.to_b == q) return med;
    throw std::out_of_range("no such cone");
  }
};

struct MissingPullback {
  Id f, g;
};

inline std::variant<PullbackChoice, MissingPullback> choose_pullbacks(
    const FinCat& E) {
  PullbackChoice ch;
  for (const auto& [fid, f] : E.morphisms)
    for (const auto& [gid, g] : E.morphisms) {
      if (f.cod != g.cod) continue;
      auto p = pullback(E, fid, gid);
      if (!p) return MissingPullback{fid, gid};
      ch.chosen[{fid, gid}] = *p;
    }
  return ch;
}

// ---------------------------------------------------------------------------
// Span(E)
//
// 1-cells X -/-> Y are spans (S, l : S -> X, r : S -> Y), identified by
// (l, r). 2-cells are apex maps commuting with both legs. Composition is by
// the chosen pullback of (r_f, l_g); associators and unitors are the unique
// mediating span maps.

inline Id span_id(const Id& l, const Id& r) { return join_id({"sp", l, r}); }
inline Id span2_id(const Id& p, const Id& src, const Id& tgt) {
  return join_id({"sm", p, src, tgt});
}

struct SpanFixture {
  FinCat base;
  PullbackChoice choice;
  FinBicat bicat;
  PseudoFunctor inclusion;  // locally_discrete(base) -> bicat
  FinBicat domain;          // locally_discrete(base)

  // decode a span 1-cell id -> (l, r)
  std::map<Id, std::pair<Id, Id>> span_data;
  // decode a 2-cell id -> apex map
  std::map<Id, Id> span2_data;
};

struct SpanBuildError {
  Id f, g;  // cospan missing a pullback
};

namespace detail {

// A filter deciding which hom pairs get a composite (for fragments).
using ComposeFilter = std::function<bool(const FinCat&, const std::pair<Id, Id>&,
                                         const std::pair<Id, Id>&)>;

inline std::variant<SpanFixture, SpanBuildError> build_span_bicat(
    const FinCat& E, const ComposeFilter& admit, bool fragment) {
  SpanFixture fx;
  fx.base = E;
  {
    auto ch = choose_pullbacks(E);
    if (std::holds_alternative<MissingPullback>(ch)) {
      if (!fragment) {
        auto mp = std::get<MissingPullback>(ch);
        return SpanBuildError{mp.f, mp.g};
      }
      // fragment mode: keep whatever pullbacks exist
      PullbackChoice partial;
      for (const auto& [fid, f] : E.morphisms)
        for (const auto& [gid, g] : E.morphisms) {
          if (f.cod != g.cod) continue;
          auto p = pullback(E, fid, gid);
          if (p) partial.chosen[{fid, gid}] = *p;
        }
      fx.choice = partial;
    } else {
      fx.choice = std::get<PullbackChoice>(ch);
    }
  }

  FinBicat& B = fx.bicat;
  B.objects = E.objects;
  B.total = !fragment;

  // hom categories
  for (const auto& X : E.objects)
    for (const auto& Y : E.objects) {
      FinCat H;
      std::vector<std::pair<Id, Id>> spans;
      for (const auto& [lid, l] : E.morphisms) {
        if (l.cod != X) continue;
        for (const auto& [rid, r] : E.morphisms) {
          if (r.cod != Y || r.dom != l.dom) continue;
          spans.push_back({lid, rid});
        }
      }
      for (const auto& [l, r] : spans) {
        Id sid = span_id(l, r);
        H.add_object(sid);
        fx.span_data[sid] = {l, r};
      }
      for (const auto& [l1, r1] : spans)
        for (const auto& [l2, r2] : spans) {
          Id s1 = span_id(l1, r1), s2 = span_id(l2, r2);
          for (const auto& p : E.hom(E.dom(l1), E.dom(l2)))
            if (E.compose(l2, p) == l1 && E.compose(r2, p) == r1) {
              Id mid = span2_id(p, s1, s2);
              H.add_mor(mid, s1, s2);
              fx.span2_data[mid] = p;
            }
        }
      for (const auto& [l, r] : spans) {
        Id sid = span_id(l, r);
        H.identities[sid] = span2_id(E.id_of(E.dom(l)), sid, sid);
      }
      for (const auto& [m2, mm2] : H.morphisms)
        for (const auto& [m1, mm1] : H.morphisms) {
          if (mm2.dom != mm1.cod) continue;
          Id p = E.compose(fx.span2_data[m2], fx.span2_data[m1]);
          H.comp[{m2, m1}] = span2_id(p, mm1.dom, mm2.cod);
        }
      B.homs[{X, Y}] = H;
    }
  for (const auto& X : E.objects)
    B.unit1[X] = span_id(E.id_of(X), E.id_of(X));
  B.seal();

  // horizontal composition of 1-cells by chosen pullback
  auto compose_spans = [&](const std::pair<Id, Id>& g,
                           const std::pair<Id, Id>& f) -> std::optional<Id> {
    // f = (l1, r1) : X -> Y, g = (l2, r2) : Y -> Z; pullback of (r1, l2)
    auto it = fx.choice.chosen.find({f.second, g.first});
    if (it == fx.choice.chosen.end()) return std::nullopt;
    const auto& span = it->second.span;
    Id l = E.compose(f.first, span.left);
    Id r = E.compose(g.second, span.right);
    return span_id(l, r);
  };

  for (const auto& X : E.objects)
    for (const auto& Y : E.objects)
      for (const auto& Z : E.objects) {
        const auto& HF = B.homs.at({X, Y});
        const auto& HG = B.homs.at({Y, Z});
        for (const auto& gs : HG.objects)
          for (const auto& fs : HF.objects) {
            const auto& g = fx.span_data[gs];
            const auto& f = fx.span_data[fs];
            if (fragment && !admit(E, g, f)) continue;
            auto c = compose_spans(g, f);
            if (!c) {
              if (!fragment) {
                return SpanBuildError{f.second, g.first};
              }
              continue;
            }
            B.hc1[{gs, fs}] = *c;
          }
      }

  // horizontal composition of 2-cells by mediators
  for (const auto& X : E.objects)
    for (const auto& Y : E.objects)
      for (const auto& Z : E.objects) {
        const auto& HF = B.homs.at({X, Y});
        const auto& HG = B.homs.at({Y, Z});
        for (const auto& [b2, bm] : HG.morphisms)
          for (const auto& [a2, am] : HF.morphisms) {
            if (!B.hc1.count({bm.dom, am.dom}) ||
                !B.hc1.count({bm.cod, am.cod}))
              continue;
            const auto& gq = fx.span_data[bm.dom];   // (l2, r2)
            const auto& fq = fx.span_data[am.dom];   // (l1, r1)
            const auto& gq2 = fx.span_data[bm.cod];
            const auto& fq2 = fx.span_data[am.cod];
            const Id q = fx.span2_data[b2];  // apex map of beta
            const Id p = fx.span2_data[a2];  // apex map of alpha
            const auto& W = fx.choice.at(fq.second, gq.first).span;
            // cone into the chosen pullback of (r1', l2'):
            // (p . pl, q . pr)
            Id med = fx.choice.mediator(fq2.second, gq2.first,
                                        E.compose(p, W.left),
                                        E.compose(q, W.right));
            B.hc2[{b2, a2}] = span2_id(med, B.hc1.at({bm.dom, am.dom}),
                                       B.hc1.at({bm.cod, am.cod}));
          }
      }

  // associators: the unique mediating span map ((hg)f) => (h(gf))
  for (const auto& X : E.objects)
    for (const auto& Y : E.objects)
      for (const auto& Z : E.objects)
        for (const auto& Wo : E.objects) {
          const auto& HF = B.homs.at({X, Y});
          const auto& HG = B.homs.at({Y, Z});
          const auto& HH = B.homs.at({Z, Wo});
          for (const auto& hs : HH.objects)
            for (const auto& gs : HG.objects)
              for (const auto& fs : HF.objects) {
                if (!B.hc1.count({hs, gs}) || !B.hc1.count({gs, fs})) continue;
                Id hg = B.hc1.at({hs, gs}), gf = B.hc1.at({gs, fs});
                if (!B.hc1.count({hg, fs}) || !B.hc1.count({hs, gf})) continue;
                const auto& f = fx.span_data[fs];
                const auto& g = fx.span_data[gs];
                const auto& h = fx.span_data[hs];
                // W_gf = pb(r_f, l_g), W_hg = pb(r_g, l_h)
                const auto& Wgf = fx.choice.at(f.second, g.first).span;
                const auto& Whg = fx.choice.at(g.second, h.first).span;
                // P1 = apex((hg)f) = pb(r_f, l_g . W_hg.left)
                // P2 = apex(h(gf)) = pb(r_g . W_gf.right, l_h)
                const auto& P1 =
                    fx.choice.at(f.second, E.compose(g.first, Whg.left)).span;
                // mediate P1 into W_gf via the cone
                // (P1.left : -> S_f, W_hg.left . P1.right : -> S_g)
                Id w = fx.choice.mediator(f.second, g.first, P1.left,
                                          E.compose(Whg.left, P1.right));
                // then into P2 via (w, W_hg.right . P1.right)
                Id phi = fx.choice.mediator(
                    E.compose(g.second, Wgf.right), h.first, w,
                    E.compose(Whg.right, P1.right));
                Id src = B.hc1.at({hg, fs});
                Id tgt = B.hc1.at({hs, gf});
                B.assoc[{hs, gs, fs}] = span2_id(phi, src, tgt);
              }
        }

  // unitors
  for (const auto& [sid, lr] : fx.span_data) {
    const auto& [l, r] = lr;
    const Id X = E.cod(l), Y = E.cod(r);
    Id uX = B.unit1.at(X), uY = B.unit1.at(Y);
    if (B.hc1.count({sid, uX})) {
      // f . 1_X : pullback of (id_X, l); runitor = right projection
      const auto& W = fx.choice.at(E.id_of(X), l).span;
      B.run[sid] = span2_id(W.right, B.hc1.at({sid, uX}), sid);
    }
    if (B.hc1.count({uY, sid})) {
      // 1_Y . f : pullback of (r, id_Y); lunitor = left projection
      const auto& W = fx.choice.at(r, E.id_of(Y)).span;
      B.lun[sid] = span2_id(W.left, B.hc1.at({uY, sid}), sid);
    }
  }
  B.seal();

  // inclusion pseudofunctor from the locally discrete base
  fx.domain = locally_discrete(E);
  PseudoFunctor& T = fx.inclusion;
  for (const auto& o : E.objects) T.on_objects[o] = o;
  for (const auto& [fid, f] : E.morphisms) {
    T.on_1cells[fid] = span_id(E.id_of(f.dom), fid);
    T.on_2cells[ld_twocell(fid)] = B.id2(span_id(E.id_of(f.dom), fid));
  }
  for (const auto& [gid, g] : E.morphisms)
    for (const auto& [fid, f] : E.morphisms) {
      if (g.dom != f.cod) continue;
      Id tg = T.on_1cells[gid], tf = T.on_1cells[fid];
      if (!B.hc1.count({tg, tf})) continue;
      // comp cell: Tg.Tf => T(gf), the mediating span map (left projection)
      const auto& W = fx.choice.at(fid, E.id_of(f.cod)).span;
      Id src = B.hc1.at({tg, tf});
      Id tgt = T.on_1cells[E.compose(gid, fid)];
      T.comp_cell[{gid, fid}] = span2_id(W.left, src, tgt);
    }
  for (const auto& o : E.objects) T.unit_cell[o] = B.id2(B.unit1.at(o));
  return fx;
}

}  // namespace detail

inline std::variant<SpanFixture, SpanBuildError> span_bicategory(const FinCat& E) {
  return detail::build_span_bicat(
      E, [](const FinCat&, const std::pair<Id, Id>&,
            const std::pair<Id, Id>&) { return true; },
      false);
}

// ---------------------------------------------------------------------------
// Span composition as a plain functor hom(Y,Z) x hom(X,Y) -> hom(X,Z)

struct SpanCompositionFunctor {
  FinCat domain;   // product category
  FinCat codomain; // hom(X,Z)
  FinFunctor functor;
};

inline SpanCompositionFunctor span_composition_functor(const SpanFixture& fx,
                                                       const Id& X, const Id& Y,
                                                       const Id& Z) {
  SpanCompositionFunctor r;
  const auto& HG = fx.bicat.homs.at({Y, Z});
  const auto& HF = fx.bicat.homs.at({X, Y});
  auto pr = product_category(HG, HF);
  r.domain = pr.cat;
  r.codomain = fx.bicat.homs.at({X, Z});
  for (const auto& o : r.domain.objects) {
    Id g = pr.proj1.ob(o), f = pr.proj2.ob(o);
    r.functor.on_objects[o] = fx.bicat.c1(g, f);
  }
  for (const auto& [m, mm] : r.domain.morphisms) {
    Id b = pr.proj1.mo(m), a = pr.proj2.mo(m);
    r.functor.on_morphisms[m] = fx.bicat.c2(b, a);
  }
  return r;
}

// ---------------------------------------------------------------------------
// The swap fragment: spans over the full subcategory of finite sets on
// {1, 2}, with horizontal composition declared only where one of the facing
// legs is invertible (those pullbacks stay inside the fragment).

inline FinCat finset12() {
  FinCat E;
  E.add_object("1");
  E.add_object("2");
  E.add_mor("id1", "1", "1");
  E.add_mor("id2", "2", "2");
  E.add_mor("sw", "2", "2");    // the swap
  E.add_mor("c0", "2", "2");    // constant 0
  E.add_mor("c1", "2", "2");    // constant 1
  E.add_mor("bang", "2", "1");  // unique map to 1
  E.add_mor("k0", "1", "2");    // picks 0
  E.add_mor("k1", "1", "2");    // picks 1
  E.identities["1"] = "id1";
  E.identities["2"] = "id2";
  // composition via the evident functions on {0,1}
  auto tbl = [&](const Id& g, const Id& f) -> Id {
    auto ap = [&](const Id& m, int x) -> int {
      if (m == "id1" || m == "bang") return 0;
      if (m == "id2") return x;
      if (m == "sw") return 1 - x;
      if (m == "c0") return 0;
      if (m == "c1") return 1;
      if (m == "k0") return 0;
      if (m == "k1") return 1;
      return -1;
    };
    const Id dom = E.dom(f), cod = E.cod(g);
    int n = (dom == "1") ? 1 : 2;
    std::vector<int> vals;
    for (int x = 0; x < n; ++x) vals.push_back(ap(g, ap(f, x)));
    if (cod == "1") return dom == "1" ? "id1" : "bang";
    if (dom == "1") return vals[0] == 0 ? "k0" : "k1";
    if (vals[0] == 0 && vals[1] == 1) return "id2";
    if (vals[0] == 1 && vals[1] == 0) return "sw";
    if (vals[0] == 0 && vals[1] == 0) return "c0";
    return "c1";
  };
  for (const auto& [gid, g] : E.morphisms)
    for (const auto& [fid, f] : E.morphisms)
      if (g.dom == f.cod) E.comp[{gid, fid}] = tbl(gid, fid);
  return E;
}

struct SwapFixture {
  SpanFixture span;     // fragment bicategory over finset12
  Id swap_span;         // (bang, sw) : 1 -/-> 2
  Id delta_span;        // (bang, id2) : 1 -/-> 2
};

inline SwapFixture swap_fixture() {
  FinCat E = finset12();
  auto admit = [](const FinCat& C, const std::pair<Id, Id>& g,
                  const std::pair<Id, Id>& f) {
    return C.is_iso(g.first) || C.is_iso(f.second);
  };
  auto built = detail::build_span_bicat(E, admit, true);
  SwapFixture out;
  out.span = std::get<SpanFixture>(built);
  out.swap_span = span_id("bang", "sw");
  out.delta_span = span_id("bang", "id2");
  return out;
}

// ---------------------------------------------------------------------------
// The strict 2-category of a finite universe of categories, with functor
// categories as homs. Used to state universe-relative genericity claims.

struct CatUniverse {
  std::vector<std::pair<Id, FinCat>> cats;  // (name, category)
  FinBicat bicat;
  // decode: 1-cell -> functor, 2-cell -> transformation
  std::map<Id, FinFunctor> fun_data;
  std::map<Id, NatTrans> nat_data;
  std::map<std::pair<std::pair<Id, Id>, std::string>, Id> fun_ids;
};

namespace detail {

inline std::string functor_key(const FinFunctor& F) {
  std::vector<std::string> parts;
  for (const auto& [a, b] : F.on_objects) parts.push_back(a + ">" + b);
  for (const auto& [a, b] : F.on_morphisms) parts.push_back(a + ")" + b);
  std::string s;
  for (const auto& p : parts) s += esc_id(p) + ";";
  return s;
}

inline std::string nat_key(const NatTrans& n) {
  std::string s;
  for (const auto& [a, b] : n.components) s += esc_id(a + ">" + b) + ";";
  return s;
}

inline std::vector<FinFunctor> all_functors(const FinCat& C, const FinCat& D) {
  std::vector<FinFunctor> out;
  std::vector<Id> obs = C.objects;
  std::map<Id, Id> obmap;
  std::function<void(size_t)> go_ob = [&](size_t i) {
    if (i == obs.size()) {
      std::vector<Id> ms = C.mor_ids();
      std::map<Id, Id> mormap;
      std::function<void(size_t)> go_mor = [&](size_t j) {
        if (j == ms.size()) {
          FinFunctor F;
          F.on_objects = obmap;
          F.on_morphisms = mormap;
          if (check_functor(F, C, D).empty()) out.push_back(F);
          return;
        }
        const Mor& m = C.mor(ms[j]);
        for (const auto& d : D.hom(obmap[m.dom], obmap[m.cod])) {
          mormap[ms[j]] = d;
          go_mor(j + 1);
        }
        mormap.erase(ms[j]);
      };
      go_mor(0);
      return;
    }
    for (const auto& d : D.objects) {
      obmap[obs[i]] = d;
      go_ob(i + 1);
      obmap.erase(obs[i]);
    }
  };
  go_ob(0);
  return out;
}

inline std::vector<NatTrans> all_nats(const FinFunctor& F, const FinFunctor& G,
                                      const FinCat& C, const FinCat& D) {
  std::vector<NatTrans> out;
  std::vector<Id> obs = C.objects;
  NatTrans n;
  std::function<void(size_t)> go = [&](size_t i) {
    if (i == obs.size()) {
      if (check_nat(n, F, G, C, D).empty()) out.push_back(n);
      return;
    }
    for (const auto& m : D.hom(F.ob(obs[i]), G.ob(obs[i]))) {
      n.components[obs[i]] = m;
      go(i + 1);
    }
    n.components.erase(obs[i]);
  };
  go(0);
  return out;
}

}  // namespace detail

inline CatUniverse cat_universe(const std::vector<std::pair<Id, FinCat>>& cats) {
  CatUniverse U;
  U.cats = cats;
  FinBicat& B = U.bicat;
  std::map<Id, const FinCat*> byname;
  for (const auto& [n, c] : cats) {
    B.objects.push_back(n);
    byname[n] = &c;
  }
  std::sort(B.objects.begin(), B.objects.end());

  // functor and transformation ids are sequential; side indices recover a
  // cell from its content when composites are named
  size_t fcount = 0, ncount = 0;
  std::map<std::tuple<Id, Id, std::string>, Id> fun_index;
  std::map<std::tuple<Id, Id, std::string>, Id> nat_index;
  auto fun_id = [&](const Id& cn, const Id& dn, const std::string& key) {
    return fun_index.at({cn, dn, key});
  };
  auto nat_id = [&](const Id& f1, const Id& f2, const std::string& key) {
    return nat_index.at({f1, f2, key});
  };

  for (const auto& [cn, C] : cats)
    for (const auto& [dn, D] : cats) {
      FinCat H;
      auto fs = detail::all_functors(C, D);
      std::vector<Id> ids;
      for (const auto& F : fs) {
        Id fid = "F" + std::to_string(fcount++);
        fun_index[{cn, dn, detail::functor_key(F)}] = fid;
        H.add_object(fid);
        U.fun_data[fid] = F;
        ids.push_back(fid);
      }
      for (const auto& f1 : ids)
        for (const auto& f2 : ids) {
          auto ns = detail::all_nats(U.fun_data[f1], U.fun_data[f2], C, D);
          for (const auto& n : ns) {
            Id nid = "N" + std::to_string(ncount++);
            nat_index[{f1, f2, detail::nat_key(n)}] = nid;
            H.add_mor(nid, f1, f2);
            U.nat_data[nid] = n;
          }
        }
      for (const auto& f : ids) {
        NatTrans idn = identity_nat(U.fun_data[f], C, D);
        H.identities[f] = nat_id(f, f, detail::nat_key(idn));
      }
      for (const auto& [n2, m2] : H.morphisms)
        for (const auto& [n1, m1] : H.morphisms) {
          if (m2.dom != m1.cod) continue;
          NatTrans v = nat_vcomp(U.nat_data[n2], U.nat_data[n1], C, D);
          H.comp[{n2, n1}] = nat_id(m1.dom, m2.cod, detail::nat_key(v));
        }
      B.homs[{cn, dn}] = H;
    }
  for (const auto& [cn, C] : cats) {
    FinFunctor idf = identity_functor(C);
    B.unit1[cn] = fun_id(cn, cn, detail::functor_key(idf));
  }
  B.seal();
  // horizontal composition (strict)
  for (const auto& [cn, C] : cats)
    for (const auto& [dn, D] : cats)
      for (const auto& [en, E] : cats) {
        const auto& H1 = B.homs.at({cn, dn});
        const auto& H2 = B.homs.at({dn, en});
        for (const auto& g : H2.objects)
          for (const auto& f : H1.objects) {
            FinFunctor GF = compose_functors(U.fun_data[g], U.fun_data[f]);
            B.hc1[{g, f}] = fun_id(cn, en, detail::functor_key(GF));
          }
        for (const auto& [n2, m2] : H2.morphisms)
          for (const auto& [n1, m1] : H1.morphisms) {
            NatTrans h = nat_hcomp(U.nat_data[n2], U.fun_data[m2.cod],
                                   U.nat_data[n1], U.fun_data[m1.dom], C, E);
            Id src = B.hc1.at({m2.dom, m1.dom});
            Id tgt = B.hc1.at({m2.cod, m1.cod});
            B.hc2[{n2, n1}] = nat_id(src, tgt, detail::nat_key(h));
          }
      }
  B.seal();
  // strict associators and unitors
  for (const auto& [cn, C] : cats)
    for (const auto& [dn, D] : cats)
      for (const auto& [en, E] : cats)
        for (const auto& [wn, W] : cats) {
          const auto& H1 = B.homs.at({cn, dn});
          const auto& H2 = B.homs.at({dn, en});
          const auto& H3 = B.homs.at({en, wn});
          for (const auto& h : H3.objects)
            for (const auto& g : H2.objects)
              for (const auto& f : H1.objects) {
                Id c = B.c1(B.c1(h, g), f);
                B.assoc[{h, g, f}] = B.homs.at({cn, wn}).id_of(c);
              }
        }
  for (const auto& [f, ab] : B.home1) {
    B.lun[f] = B.hom_of1(f).id_of(f);
    B.run[f] = B.hom_of1(f).id_of(f);
  }
  return U;
}

// ---------------------------------------------------------------------------
// Truncated Fam

inline Id fam_ob(const std::vector<Id>& comps) {
  std::string s = "f";
  for (const auto& c : comps) s = s + "|" + esc_id(c);
  return s;
}

inline Id fam_mor(const std::vector<size_t>& phi, const std::vector<Id>& maps,
                  const Id& src, const Id& tgt) {
  std::string s = "m";
  for (auto i : phi) s += ":" + std::to_string(i);
  for (const auto& m : maps) s = s + "|" + esc_id(m);
  return join_id({s, src, tgt});
}

struct FamCat {
  FinCat cat;
  std::map<Id, std::vector<Id>> ob_comps;
  std::map<Id, std::pair<std::vector<size_t>, std::vector<Id>>> mor_data;
};

// Fam_{<=N}(C): objects are families indexed by skeletal sets of size <= N;
// morphisms are reindexings with componentwise maps.
inline FamCat fam_truncated(const FinCat& C, size_t N) {
  FamCat out;
  std::vector<std::vector<Id>> fams;
  std::vector<Id> cur;
  std::function<void(size_t)> gen = [&](size_t k) {
    if (cur.size() == k) {
      fams.push_back(cur);
      return;
    }
    for (const auto& o : C.objects) {
      cur.push_back(o);
      gen(k);
      cur.pop_back();
    }
  };
  for (size_t k = 0; k <= N; ++k) {
    cur.clear();
    gen(k);
  }
  for (const auto& f : fams) {
    Id o = fam_ob(f);
    out.cat.add_object(o);
    out.ob_comps[o] = f;
  }
  for (const auto& [o1, f1] : out.ob_comps)
    for (const auto& [o2, f2] : out.ob_comps) {
      size_t n1 = f1.size(), n2 = f2.size();
      if (n1 > 0 && n2 == 0) continue;
      std::vector<size_t> phi(n1, 0);
      std::function<void(size_t)> gofn = [&](size_t i) {
        if (i == n1) {
          std::vector<std::vector<Id>> choices(n1);
          for (size_t j = 0; j < n1; ++j)
            choices[j] = C.hom(f1[j], f2[phi[j]]);
          std::vector<Id> pick(n1);
          std::function<void(size_t)> gom = [&](size_t j) {
            if (j == n1) {
              Id m = fam_mor(phi, pick, o1, o2);
              out.cat.add_mor(m, o1, o2);
              out.mor_data[m] = {phi, pick};
              return;
            }
            for (const auto& c : choices[j]) {
              pick[j] = c;
              gom(j + 1);
            }
          };
          gom(0);
          return;
        }
        for (size_t v = 0; v < n2; ++v) {
          phi[i] = v;
          gofn(i + 1);
        }
      };
      gofn(0);
    }
  for (const auto& [o, f] : out.ob_comps) {
    std::vector<size_t> phi(f.size());
    std::vector<Id> ids(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
      phi[i] = i;
      ids[i] = C.id_of(f[i]);
    }
    out.cat.identities[o] = fam_mor(phi, ids, o, o);
  }
  for (const auto& [m2, md2] : out.cat.morphisms)
    for (const auto& [m1, md1] : out.cat.morphisms) {
      if (md2.dom != md1.cod) continue;
      const auto& d1 = out.mor_data[m1];
      const auto& d2 = out.mor_data[m2];
      std::vector<size_t> phi(d1.first.size());
      std::vector<Id> maps(d1.first.size());
      for (size_t i = 0; i < d1.first.size(); ++i) {
        phi[i] = d2.first[d1.first[i]];
        maps[i] = C.compose(d2.second[d1.first[i]], d1.second[i]);
      }
      out.cat.comp[{m2, m1}] = fam_mor(phi, maps, md1.dom, md2.cod);
    }
  return out;
}

// Fam_{<=N} as a Cat-valued copresheaf on a universe of categories; strict
// in every comparison (Fam of a composite is the composite of the Fams).
inline CatCopresheaf fam_copresheaf(const CatUniverse& U, size_t N) {
  CatCopresheaf F;
  F.base = U.bicat;
  std::map<Id, FamCat> fams;
  for (const auto& [n, c] : U.cats) {
    fams[n] = fam_truncated(c, N);
    F.on_objects[n] = fams[n].cat;
  }
  auto map_ob = [&](const FinFunctor& H, const FamCat& src, const Id& o) {
    std::vector<Id> mapped;
    for (const auto& c : src.ob_comps.at(o)) mapped.push_back(H.ob(c));
    return fam_ob(mapped);
  };
  for (const auto& [fid, ab] : U.bicat.home1) {
    const FinFunctor& H = U.fun_data.at(fid);
    const FamCat& src = fams[ab.first];
    FinFunctor G;
    for (const auto& o : src.cat.objects) G.on_objects[o] = map_ob(H, src, o);
    for (const auto& [mid, mm] : src.cat.morphisms) {
      const auto& [phi, maps] = src.mor_data.at(mid);
      std::vector<Id> mapped;
      for (const auto& m : maps) mapped.push_back(H.mo(m));
      G.on_morphisms[mid] =
          fam_mor(phi, mapped, G.ob(mm.dom), G.ob(mm.cod));
    }
    F.on_1cells[fid] = G;
  }
  for (const auto& [nid, ab] : U.bicat.home2) {
    const NatTrans& mu = U.nat_data.at(nid);
    const Id h = U.bicat.src2(nid), k = U.bicat.dst2(nid);
    const FamCat& src = fams[ab.first];
    NatTrans n;
    for (const auto& o : src.cat.objects) {
      const auto& comps = src.ob_comps.at(o);
      std::vector<size_t> phi(comps.size());
      std::vector<Id> maps(comps.size());
      for (size_t i = 0; i < comps.size(); ++i) {
        phi[i] = i;
        maps[i] = mu.at(comps[i]);
      }
      n.components[o] = fam_mor(phi, maps, F.f1(h).ob(o), F.f1(k).ob(o));
    }
    F.on_2cells[nid] = n;
  }
  for (const auto& [p, gf] : U.bicat.hc1) {
    const auto& [g, f] = p;
    auto GF = compose_functors(F.f1(g), F.f1(f));
    F.comp_iso[p] = identity_nat(GF, F.fiber(U.bicat.src1(f)),
                                 F.fiber(U.bicat.dst1(g)));
  }
  for (const auto& [n, c] : U.cats)
    F.unit_iso[n] =
        identity_nat(identity_functor(F.fiber(n)), F.fiber(n), F.fiber(n));
  return F;
}

}  // namespace laxgen
