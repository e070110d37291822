#pragma once

// Lax-generic 1-cells, universal factorizations, generic cells, and lax
// familiality for a pseudofunctor T : A -> B of finite bicategories.
//
// A candidate generic is always the pair (Ao, delta : X -> T Ao); carrying
// the A-object matters when T is not injective on objects. All pastings use
// a fixed bracketing with associator/unitor chains inserted explicitly;
// 2-cell equality is table equality.

#include <optional>

#include "laxgen/elbicat.hpp"

namespace laxgen {

// ---------------------------------------------------------------------------
// The hom copresheaf B(X, T-) : A -> Cat

inline CatCopresheaf hom_copresheaf(const PseudoFunctor& T, const FinBicat& A,
                                    const FinBicat& B, const Id& X) {
  CatCopresheaf F;
  F.base = A;
  for (const auto& Ao : A.objects) F.on_objects[Ao] = B.hom(X, T.ob(Ao));
  for (const auto& [f, ab] : A.home1) {
    FinFunctor G;
    const Id Tf = T.c1(f);
    for (const auto& u : B.onecells(X, T.ob(ab.first))) {
      if (!B.has_hc1(Tf, u)) continue;
      G.on_objects[u] = B.c1(Tf, u);
    }
    for (const auto& [cid, cm] : F.fiber(ab.first).morphisms) {
      if (!B.has_hc2(B.id2(Tf), cid)) continue;
      G.on_morphisms[cid] = B.c2(B.id2(Tf), cid);
    }
    F.on_1cells[f] = G;
  }
  for (const auto& [c, ab] : A.home2) {
    NatTrans n;
    for (const auto& u : B.onecells(X, T.ob(ab.first)))
      n.components[u] = B.c2(T.c2(c), B.id2(u));
    F.on_2cells[c] = n;
  }
  for (const auto& [p, gf] : A.hc1) {
    const auto& [g, f] = p;
    NatTrans n;
    const Id Tg = T.c1(g), Tf = T.c1(f);
    for (const auto& u : B.onecells(X, T.ob(A.src1(f)))) {
      if (!B.has_hc1(Tf, u)) continue;
      // Tg.(Tf.u) => (Tg.Tf).u => T(gf).u
      Id cell = B.vcomp(B.c2(T.comp(g, f), B.id2(u)),
                        *B.invert2(B.assoc.at({Tg, Tf, u})));
      n.components[u] = cell;
    }
    F.comp_iso[p] = n;
  }
  for (const auto& Ao : A.objects) {
    NatTrans n;
    for (const auto& u : B.onecells(X, T.ob(Ao))) {
      // u => 1_{TA}.u => T(1_A).u
      Id cell = B.vcomp(B.c2(T.unit(Ao), B.id2(u)), *B.invert2(B.lun.at(u)));
      n.components[u] = cell;
    }
    F.unit_iso[Ao] = n;
  }
  return F;
}

// ---------------------------------------------------------------------------
// Squares and universal factorizations

// A candidate generic: the A-object together with the underlying 1-cell.
using Gen1 = std::pair<Id, Id>;  // (Ao, delta : X -> T Ao)

struct Square {
  Id Bo;     // A-object; z lands in T Bo
  Id z;      // 1-cell X -> T Bo in B
  Id f;      // 1-cell Ao -> Co in A
  Id g;      // 1-cell Bo -> Co in A
  Id alpha;  // 2-cell Tf . delta => Tg . z in B
};

struct UFactor {
  Id h, gamma, nu;
  // condition (2) records: (k, phi, psi) -> the unique psibar
  std::vector<std::tuple<Id, Id, Id, Id>> factorizations;
};

enum class UFStatus {
  Found,
  NoPastingMatch,
  Condition1Fails,
  Condition2Fails,
  CapExceeded
};

struct UFactorOutcome {
  UFStatus status = UFStatus::NoPastingMatch;
  std::optional<UFactor> factor;
};

struct LaxGenericCert {
  Gen1 delta;
  bool generic = false;
  std::vector<std::pair<Square, UFactor>> squares;
  std::optional<Square> failing_square;
  std::string reason;
};

struct GenFact {
  Id mid;      // the A-object Ao
  Id delta;    // lax-generic X -> T Ao
  Id fbar;     // Ao -> W in A
  Id compare;  // invertible 2-cell T(fbar) . delta => y
};

class LaxContext {
 public:
  const FinBicat& A;
  const FinBicat& B;
  const PseudoFunctor& T;

  LaxContext(const FinBicat& a, const FinBicat& b, const PseudoFunctor& t)
      : A(a), B(b), T(t) {}

  // --- pasting helpers -----------------------------------------------------

  // The right-hand pasting of a universal factorization:
  //   Tf.delta => T(gh).delta => (Tg.Th).delta => Tg.(Th.delta) => Tg.z
  std::optional<Id> paste_factorization(const Id& delta, const Square& sq,
                                        const Id& h, const Id& gamma,
                                        const Id& nu) const {
    const Id Tg = T.c1(sq.g), Th = T.c1(h);
    if (!A.has_hc1(sq.g, h)) return std::nullopt;
    if (!T.comp_cell.count({sq.g, h})) return std::nullopt;
    if (!B.has_hc1(Th, delta) || !B.has_hc1(Tg, B.c1(Th, delta)))
      return std::nullopt;
    if (!B.assoc.count({Tg, Th, delta})) return std::nullopt;
    Id s1 = B.c2(T.c2(nu), B.id2(delta));
    Id s2 = B.c2(*B.invert2(T.comp(sq.g, h)), B.id2(delta));
    Id s3 = B.assoc.at({Tg, Th, delta});
    Id s4 = B.c2(B.id2(Tg), gamma);
    return B.vcomp(s4, B.vcomp(s3, B.vcomp(s2, s1)));
  }

  // gamma . (T omega * delta) for omega : k => h
  Id paste_cell(const Id& delta, const Id& gamma, const Id& omega) const {
    return B.vcomp(gamma, B.c2(T.c2(omega), B.id2(delta)));
  }

  // --- universal factorization ----------------------------------------------

  UFactorOutcome universal_factorization(const Gen1& d, const Square& sq) const {
    UFactorOutcome out;
    const auto& [Ao, delta] = d;
    const Id Bo = sq.Bo;
    bool any_pasting = false;
    for (const auto& h : A.onecells(Ao, Bo)) {
      const Id Th = T.c1(h);
      if (!B.has_hc1(Th, delta)) continue;
      for (const auto& gamma : B.twocells(B.c1(Th, delta), sq.z)) {
        if (!A.has_hc1(sq.g, h)) continue;
        for (const auto& nu : A.twocells(sq.f, A.c1(sq.g, h))) {
          auto paste = paste_factorization(delta, sq, h, gamma, nu);
          if (!paste) continue;
          if (*paste != sq.alpha) continue;
          any_pasting = true;
          UFactor uf;
          uf.h = h;
          uf.gamma = gamma;
          uf.nu = nu;
          if (!condition1(delta, Ao, Bo, h, gamma)) {
            out.status = UFStatus::Condition1Fails;
            continue;
          }
          if (condition2(d, sq, uf)) {
            out.status = UFStatus::Found;
            out.factor = uf;
            return out;
          }
          out.status = UFStatus::Condition2Fails;
        }
      }
    }
    if (!any_pasting) out.status = UFStatus::NoPastingMatch;
    return out;
  }

  bool condition1(const Id& delta, const Id& Ao, const Id& Bo, const Id& h,
                  const Id& gamma) const {
    for (const auto& k : A.onecells(Ao, Bo)) {
      std::map<Id, Id> seen;  // paste value -> omega
      for (const auto& omega : A.twocells(k, h)) {
        Id p = paste_cell(delta, gamma, omega);
        auto it = seen.find(p);
        if (it != seen.end() && it->second != omega) return false;
        seen[p] = omega;
      }
    }
    return true;
  }

  bool condition2(const Gen1& d, const Square& sq, UFactor& uf) const {
    const auto& [Ao, delta] = d;
    const Id Bo = sq.Bo;
    for (const auto& k : A.onecells(Ao, Bo)) {
      const Id Tk = T.c1(k);
      if (!B.has_hc1(Tk, delta)) continue;
      for (const auto& phi : B.twocells(B.c1(Tk, delta), sq.z)) {
        if (!A.has_hc1(sq.g, k)) continue;
        for (const auto& psi : A.twocells(sq.f, A.c1(sq.g, k))) {
          auto paste = paste_factorization(delta, sq, k, phi, psi);
          if (!paste || *paste != sq.alpha) continue;
          int count = 0;
          Id found;
          for (const auto& psibar : A.twocells(k, uf.h)) {
            if (paste_cell(delta, uf.gamma, psibar) != phi) continue;
            if (A.vcomp(A.c2(A.id2(sq.g), psibar), psi) != uf.nu) continue;
            ++count;
            if (count == 1) found = psibar;
          }
          if (count != 1) return false;
          uf.factorizations.push_back({k, phi, psi, found});
        }
      }
    }
    return true;
  }

  // --- lax genericity --------------------------------------------------------

  const LaxGenericCert& is_lax_generic(const Gen1& d) const {
    auto it = generic_cache_.find(d);
    if (it != generic_cache_.end()) return it->second;
    LaxGenericCert cert;
    cert.delta = d;
    cert.generic = true;
    const auto& [Ao, delta] = d;
    const Id X = B.src1(delta);
    for (const auto& Bo : A.objects)
      for (const auto& z : B.onecells(X, T.ob(Bo)))
        for (const auto& Co : A.objects)
          for (const auto& f : A.onecells(Ao, Co))
            for (const auto& g : A.onecells(Bo, Co)) {
              const Id Tf = T.c1(f), Tg = T.c1(g);
              if (!B.has_hc1(Tf, delta) || !B.has_hc1(Tg, z)) continue;
              for (const auto& alpha :
                   B.twocells(B.c1(Tf, delta), B.c1(Tg, z))) {
                Square sq{Bo, z, f, g, alpha};
                auto out = universal_factorization(d, sq);
                if (out.status != UFStatus::Found) {
                  cert.generic = false;
                  cert.failing_square = sq;
                  cert.reason = out.status == UFStatus::NoPastingMatch
                                    ? "NoUniversalFactorization"
                                    : (out.status == UFStatus::Condition1Fails
                                           ? "Condition1"
                                           : "Condition2");
                  return generic_cache_.emplace(d, std::move(cert))
                      .first->second;
                }
                if (B.invertible2(alpha)) {
                  if (!B.invertible2(out.factor->gamma) ||
                      !A.invertible2(out.factor->nu)) {
                    cert.generic = false;
                    cert.failing_square = sq;
                    cert.reason = "Condition3";
                    return generic_cache_.emplace(d, std::move(cert))
                        .first->second;
                  }
                }
                cert.squares.push_back({sq, *out.factor});
              }
            }
    return generic_cache_.emplace(d, std::move(cert)).first->second;
  }

  // --- generic cells ----------------------------------------------------------

  // (h : Ao -> Bo, gamma : Th.delta => z) out of a lax-generic (Ao, delta)
  bool is_generic_cell(const Gen1& d, const Id& h, const Id& gamma) const {
    auto key = std::make_tuple(d.first, d.second, h, gamma);
    auto it = gencell_cache_.find(key);
    if (it != gencell_cache_.end()) return it->second;
    bool r = generic_cell_uncached(d, h, gamma);
    gencell_cache_[key] = r;
    return r;
  }

  bool generic_cell_uncached(const Gen1& d, const Id& h, const Id& gamma) const {
    if (!is_lax_generic(d).generic) return false;
    const auto& [Ao, delta] = d;
    const Id Bo = A.dst1(h);
    const Id z = B.dst2(gamma);
    if (!condition1(delta, Ao, Bo, h, gamma)) return false;
    for (const auto& k : A.onecells(Ao, Bo)) {
      const Id Tk = T.c1(k);
      if (!B.has_hc1(Tk, delta)) continue;
      for (const auto& phi : B.twocells(B.c1(Tk, delta), z))
        for (const auto& lambda : A.twocells(h, k)) {
          if (paste_cell(delta, phi, lambda) != gamma) continue;
          int count = 0;
          for (const auto& lstar : A.twocells(k, h)) {
            if (paste_cell(delta, gamma, lstar) != phi) continue;
            if (A.vcomp(lstar, lambda) != A.id2(h)) continue;
            ++count;
          }
          if (count != 1) return false;
        }
    }
    return true;
  }

  // --- generic factorizations --------------------------------------------------

  std::optional<GenFact> lax_generic_factorization(const Id& y, const Id& W) const {
    Id key = join_id({y, W});
    auto it = fact_cache_.find(key);
    if (it != fact_cache_.end()) return it->second;
    std::optional<GenFact> r;
    const Id X = B.src1(y);
    for (const auto& Ao : A.objects) {
      for (const auto& delta : B.onecells(X, T.ob(Ao))) {
        if (!is_lax_generic({Ao, delta}).generic) continue;
        for (const auto& fbar : A.onecells(Ao, W)) {
          const Id Tf = T.c1(fbar);
          if (!B.has_hc1(Tf, delta)) continue;
          for (const auto& xi : B.twocells(B.c1(Tf, delta), y)) {
            if (!B.invertible2(xi)) continue;
            r = GenFact{Ao, delta, fbar, xi};
            break;
          }
          if (r) break;
        }
        if (r) break;
      }
      if (r) break;
    }
    fact_cache_[key] = r;
    return r;
  }

  // All lax-generic (Ao, delta) out of X.
  std::vector<Gen1> generics_out_of(const Id& X) const {
    auto it = generics_out_cache_.find(X);
    if (it != generics_out_cache_.end()) return it->second;
    std::vector<Gen1> out;
    for (const auto& Ao : A.objects)
      for (const auto& delta : B.onecells(X, T.ob(Ao)))
        if (is_lax_generic({Ao, delta}).generic) out.push_back({Ao, delta});
    std::sort(out.begin(), out.end());
    generics_out_cache_[X] = out;
    return out;
  }

 private:
  mutable std::map<Gen1, LaxGenericCert> generic_cache_;
  mutable std::map<std::tuple<Id, Id, Id, Id>, bool> gencell_cache_;
  mutable std::map<Id, std::optional<GenFact>> fact_cache_;
  mutable std::map<Id, std::vector<Gen1>> generics_out_cache_;
};

// ---------------------------------------------------------------------------
// 2-cell generic factorization (the remark after the main theorem)

struct TwoCellFactorization {
  Id h, gamma, nu;
};

// Factor alpha : Tf.delta => Tg.sigma with (Ao, delta), (Bo, sigma)
// lax-generic out of the same X; result (h, gamma) is a generic cell.
inline std::optional<TwoCellFactorization> factor_2cell(
    const LaxContext& ctx, const Gen1& d, const Gen1& s, const Id& f,
    const Id& g, const Id& alpha) {
  Square sq{s.first, s.second, f, g, alpha};
  auto out = ctx.universal_factorization(d, sq);
  if (out.status != UFStatus::Found) return std::nullopt;
  if (!ctx.is_generic_cell(d, out.factor->h, out.factor->gamma))
    return std::nullopt;
  return TwoCellFactorization{out.factor->h, out.factor->gamma, out.factor->nu};
}

// ---------------------------------------------------------------------------
// Lax familiality

struct LaxFamilialReport {
  bool familial = false;
  std::string error_kind;  // NoGenericFactorization | PastingNotGeneric
  Id witness1, witness2;
  size_t factored_cells = 0;
  size_t pastings_checked = 0;
};

// The horizontal pasting of two generic cells across squares:
// theta : Th.delta => sigma.f and phi : Tk.sigma => omega.g give
// (kh, phi f . theta) : T(kh).delta => omega.(g.f)
inline std::optional<std::pair<Id, Id>> paste_generic_cells(
    const LaxContext& ctx, const Id& delta, const Id& h, const Id& theta,
    const Id& f, const Id& sigma, const Id& k, const Id& phi, const Id& g,
    const Id& omega) {
  const FinBicat& A = ctx.A;
  const FinBicat& B = ctx.B;
  const PseudoFunctor& T = ctx.T;
  const Id Tk = T.c1(k), Th = T.c1(h);
  if (!A.has_hc1(k, h) || !T.comp_cell.count({k, h})) return std::nullopt;
  Id kh = A.c1(k, h);
  if (!B.has_hc1(B.c1(Tk, Th), delta) || !B.has_hc1(Tk, B.c1(Th, delta)))
    return std::nullopt;
  if (!B.assoc.count({Tk, Th, delta}) || !B.assoc.count({Tk, sigma, f}) ||
      !B.assoc.count({omega, g, f}))
    return std::nullopt;
  Id p1 = B.c2(*B.invert2(T.comp(k, h)), B.id2(delta));
  Id p2 = B.assoc.at({Tk, Th, delta});
  Id p3 = B.c2(B.id2(Tk), theta);
  Id p4 = *B.invert2(B.assoc.at({Tk, sigma, f}));
  Id p5 = B.c2(phi, B.id2(f));
  Id p6 = B.assoc.at({omega, g, f});
  Id cell =
      B.vcomp(p6, B.vcomp(p5, B.vcomp(p4, B.vcomp(p3, B.vcomp(p2, p1)))));
  return std::make_pair(kh, cell);
}

inline LaxFamilialReport is_lax_familial(const LaxContext& ctx) {
  LaxFamilialReport rep;
  const FinBicat& A = ctx.A;
  const FinBicat& B = ctx.B;
  const PseudoFunctor& T = ctx.T;

  // (2a) every 1-cell into a T-image admits a lax-generic factorization
  for (const auto& X : B.objects)
    for (const auto& Co : A.objects)
      for (const auto& y : B.onecells(X, T.ob(Co))) {
        if (!ctx.lax_generic_factorization(y, Co)) {
          rep.error_kind = "NoGenericFactorization";
          rep.witness1 = y;
          return rep;
        }
        ++rep.factored_cells;
      }

  // (2b) horizontal pastings of generic cells are generic
  for (const auto& X : B.objects)
    for (const auto& Y : B.objects)
      for (const auto& Z : B.objects)
        for (const auto& f : B.onecells(X, Y))
          for (const auto& g : B.onecells(Y, Z))
            for (const auto& [Ao, delta] : ctx.generics_out_of(X))
              for (const auto& [Bo, sigma] : ctx.generics_out_of(Y)) {
                if (!B.has_hc1(sigma, f)) continue;
                for (const auto& h : A.onecells(Ao, Bo)) {
                  const Id Th = T.c1(h);
                  if (!B.has_hc1(Th, delta)) continue;
                  for (const auto& theta :
                       B.twocells(B.c1(Th, delta), B.c1(sigma, f))) {
                    if (!ctx.is_generic_cell({Ao, delta}, h, theta)) continue;
                    for (const auto& [CoB, omega] : ctx.generics_out_of(Z)) {
                      if (!B.has_hc1(omega, g)) continue;
                      for (const auto& k : A.onecells(Bo, CoB)) {
                        const Id Tk = T.c1(k);
                        if (!B.has_hc1(Tk, sigma)) continue;
                        for (const auto& phi :
                             B.twocells(B.c1(Tk, sigma), B.c1(omega, g))) {
                          if (!ctx.is_generic_cell({Bo, sigma}, k, phi))
                            continue;
                          auto pasted = paste_generic_cells(
                              ctx, delta, h, theta, f, sigma, k, phi, g,
                              omega);
                          if (!pasted) continue;
                          ++rep.pastings_checked;
                          if (!ctx.is_generic_cell({Ao, delta}, pasted->first,
                                                   pasted->second)) {
                            rep.error_kind = "PastingNotGeneric";
                            rep.witness1 = theta;
                            rep.witness2 = phi;
                            return rep;
                          }
                        }
                      }
                    }
                  }
                }
              }
  rep.familial = true;
  return rep;
}

}  // namespace laxgen
