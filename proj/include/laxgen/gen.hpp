#pragma once

// Seeded corpus generation: random thin base categories (unique-path DAGs),
// group/monoid bases, random copresheaves over them, and random indexed
// families for the colimit-of-representables round trip. All randomness is
// a deterministic function of the seed (splitmix64), independent of the
// platform.

#include <cstdint>

#include "laxgen/diers1d.hpp"
#include "laxgen/elbicat.hpp"

namespace laxgen {

struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
  bool coin() { return next() & 1; }
};

// ---------------------------------------------------------------------------
// Random thin categories: DAGs with at most one directed path between any
// two nodes, so composites are forced and associativity is automatic.

inline FinCat gen_thin_category(Rng& rng, size_t max_objects = 5) {
  size_t n = 2 + rng.below(max_objects - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (rng.below(100) < 40) edge[i][j] = true;
    // count directed paths; require at most one between every pair
    std::vector<std::vector<int>> paths(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i) paths[i][i] = 1;
    bool ok = true;
    for (size_t j = 0; j < n && ok; ++j)
      for (size_t i = j; i-- > 0 && ok;) {
        int total = 0;
        for (size_t k = i + 1; k <= j; ++k)
          if (edge[i][k]) total += paths[k][j];
        if (i != j) paths[i][j] = total;
        if (paths[i][j] > 1) ok = false;
      }
    if (!ok) continue;
    FinCat c;
    for (size_t i = 0; i < n; ++i) {
      Id o = "o" + std::to_string(i);
      c.add_object(o);
      c.add_mor("1" + o, o, o);
      c.identities[o] = "1" + o;
    }
    size_t mcount = n;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (paths[i][j] == 1) {
          c.add_mor("m" + std::to_string(i) + "_" + std::to_string(j),
                    "o" + std::to_string(i), "o" + std::to_string(j));
          ++mcount;
        }
    if (mcount > 12) continue;
    for (const auto& [gid, g] : c.morphisms)
      for (const auto& [fid, f] : c.morphisms) {
        if (g.dom != f.cod) continue;
        auto h = c.hom(f.dom, g.cod);
        if (h.size() != 1) { ok = false; break; }
        c.comp[{gid, fid}] = h.front();
      }
    if (ok) return c;
  }
  // fall back to a chain
  FinCat c;
  c.add_object("o0");
  c.add_object("o1");
  c.add_mor("1o0", "o0", "o0");
  c.add_mor("1o1", "o1", "o1");
  c.add_mor("m0_1", "o0", "o1");
  c.identities["o0"] = "1o0";
  c.identities["o1"] = "1o1";
  for (const auto& [gid, g] : c.morphisms)
    for (const auto& [fid, f] : c.morphisms) {
      if (g.dom != f.cod) continue;
      c.comp[{gid, fid}] = c.hom(f.dom, g.cod).front();
    }
  return c;
}

// ---------------------------------------------------------------------------
// Random copresheaves

namespace gendetail {

inline std::vector<Id> gen_elems(Rng& rng, const Id& obj, size_t max_size) {
  size_t k = rng.below(max_size + 1);
  std::vector<Id> out;
  for (size_t i = 0; i < k; ++i)
    out.push_back("x" + obj + "_" + std::to_string(i));
  return out;
}

// Covering edges of a thin category: non-identity morphisms that do not
// factor through another non-identity pair.
inline std::vector<Id> covering_edges(const FinCat& c) {
  std::vector<Id> out;
  for (const auto& [fid, f] : c.morphisms) {
    if (c.is_identity(fid)) continue;
    bool cover = true;
    for (const auto& [gid, g] : c.morphisms) {
      if (c.is_identity(gid) || g.dom != f.dom || g.cod == f.cod) continue;
      for (const auto& [hid, h] : c.morphisms) {
        if (c.is_identity(hid)) continue;
        if (h.dom == g.cod && h.cod == f.cod && c.compose(hid, gid) == fid)
          cover = false;
      }
    }
    if (cover) out.push_back(fid);
  }
  return out;
}

}  // namespace gendetail

// A random copresheaf on a thin category: random fibers, random functions on
// covering edges, composites forced along the unique paths.
inline SetCopresheaf gen_copresheaf_thin(Rng& rng, const FinCat& base,
                                         size_t max_fiber = 3,
                                         int retries = 16) {
  SetCopresheaf F;
  F.base = base;
  for (const auto& o : base.objects)
    F.sets[o] = gendetail::gen_elems(rng, o, max_fiber);
  auto covers = gendetail::covering_edges(base);
  std::set<Id> cover_set(covers.begin(), covers.end());
  std::map<Id, std::map<Id, Id>> edge_fn;
  for (const auto& e : covers) {
    std::map<Id, Id> fn;
    const auto& src = F.sets[base.dom(e)];
    const auto& tgt = F.sets[base.cod(e)];
    if (tgt.empty() && !src.empty()) {
      if (retries > 0)
        return gen_copresheaf_thin(rng, base, max_fiber, retries - 1);
      return constant_singleton(base);
    }
    for (const auto& x : src) fn[x] = tgt[rng.below(tgt.size())];
    edge_fn[e] = fn;
  }
  // identities
  for (const auto& o : base.objects) {
    std::map<Id, Id> fn;
    for (const auto& x : F.sets[o]) fn[x] = x;
    F.actions[base.id_of(o)] = fn;
  }
  // general morphisms: compose along the unique covering path
  std::function<std::map<Id, Id>(const Id&)> action = [&](const Id& m) {
    if (base.is_identity(m)) return F.actions[m];
    if (cover_set.count(m)) return edge_fn[m];
    // find a factorization m = rest . e through a covering edge e
    for (const auto& e : covers) {
      if (base.dom(e) != base.dom(m)) continue;
      for (const auto& rest : base.hom(base.cod(e), base.cod(m)))
        if (base.compose(rest, e) == m) {
          auto fe = edge_fn[e];
          auto fr = action(rest);
          std::map<Id, Id> fn;
          for (const auto& [x, y] : fe) fn[x] = fr[y];
          return fn;
        }
    }
    return std::map<Id, Id>{};
  };
  for (const auto& [mid, m] : base.morphisms) F.actions[mid] = action(mid);
  return F;
}

// Random copresheaf on the one-object Z2 groupoid: a set with an involution.
inline SetCopresheaf gen_copresheaf_z2(Rng& rng, const FinCat& bz2cat,
                                       size_t max_fiber = 4) {
  SetCopresheaf F;
  F.base = bz2cat;
  size_t k = 1 + rng.below(max_fiber);
  std::vector<Id> elems;
  for (size_t i = 0; i < k; ++i) elems.push_back("x" + std::to_string(i));
  F.sets["*"] = elems;
  // random involution: pair up some elements
  std::vector<size_t> perm(k);
  for (size_t i = 0; i < k; ++i) perm[i] = i;
  for (size_t i = 0; i + 1 < k; i += 2)
    if (rng.coin()) std::swap(perm[i], perm[i + 1]);
  std::map<Id, Id> inv, ident;
  for (size_t i = 0; i < k; ++i) {
    inv[elems[i]] = elems[perm[i]];
    ident[elems[i]] = elems[i];
  }
  F.actions["e"] = ident;
  F.actions["s"] = inv;
  return F;
}

// ---------------------------------------------------------------------------
// Random indexed families (M, P) over a locally discrete thin base

struct GeneratedFamily {
  FinCat base;       // thin category
  IndexedFamily fam; // M with P into locally_discrete(base)
};

inline std::optional<GeneratedFamily> gen_family(Rng& rng, size_t max_m = 3,
                                                 size_t max_base = 4) {
  GeneratedFamily out;
  out.base = gen_thin_category(rng, max_base);
  FinCat M = gen_thin_category(rng, 3);
  while (M.objects.size() > max_m) M = gen_thin_category(rng, 3);
  out.fam.M = M;
  // P on objects: random; on morphisms: forced by thinness when nonempty
  for (const auto& o : M.objects)
    out.fam.P_ob[o] =
        out.base.objects[rng.below(out.base.objects.size())];
  for (const auto& [mid, m] : M.morphisms) {
    auto h = out.base.hom(out.fam.P_ob[m.dom], out.fam.P_ob[m.cod]);
    if (h.empty()) return std::nullopt;  // resample upstream
    out.fam.P_mor[mid] = h.front();
  }
  return out;
}

}  // namespace laxgen
