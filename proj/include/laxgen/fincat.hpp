#pragma once

// Finite categories as explicit object/morphism tables with a total
// composition table. All law checks are exhaustive; all canonical choices
// break ties by lexicographic id order so results are deterministic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace laxgen {

using Id = std::string;

struct Diag {
  std::string code;
  std::string detail;
};
using Diags = std::vector<Diag>;

inline std::string diag_text(const Diags& ds) {
  std::string out;
  for (const auto& d : ds) {
    out += d.code;
    out += ": ";
    out += d.detail;
    out += "\n";
  }
  return out;
}

// Constructed identifiers are '|'-joined with '\\' escaping, so derived
// tables never collide regardless of the input ids.
inline std::string esc_id(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '\\' || c == '|') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

inline std::string join_id(std::initializer_list<std::string> parts) {
  std::string out;
  bool first = true;
  for (const auto& p : parts) {
    if (!first) out.push_back('|');
    out += esc_id(p);
    first = false;
  }
  return out;
}

inline std::vector<std::string> split_id(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      cur.push_back(s[++i]);
    } else if (s[i] == '|') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(s[i]);
    }
  }
  parts.push_back(cur);
  return parts;
}

struct Mor {
  Id id, dom, cod;
};

struct FinCat {
  std::vector<Id> objects;                 // sorted, unique
  std::map<Id, Mor> morphisms;             // keyed by id
  std::map<Id, Id> identities;             // object -> morphism id
  std::map<std::pair<Id, Id>, Id> comp;    // (g, f) -> g after f

  void add_object(const Id& o) {
    auto it = std::lower_bound(objects.begin(), objects.end(), o);
    if (it == objects.end() || *it != o) objects.insert(it, o);
  }
  void add_mor(const Id& id, const Id& dom, const Id& cod) {
    morphisms[id] = Mor{id, dom, cod};
  }
  bool has_object(const Id& o) const {
    return std::binary_search(objects.begin(), objects.end(), o);
  }
  bool has_mor(const Id& m) const { return morphisms.count(m) != 0; }
  const Mor& mor(const Id& m) const { return morphisms.at(m); }
  const Id& dom(const Id& m) const { return morphisms.at(m).dom; }
  const Id& cod(const Id& m) const { return morphisms.at(m).cod; }
  const Id& id_of(const Id& o) const { return identities.at(o); }
  bool is_identity(const Id& m) const {
    auto it = identities.find(dom(m));
    return it != identities.end() && it->second == m;
  }
  // g after f; both must be present and composable.
  const Id& compose(const Id& g, const Id& f) const {
    return comp.at({g, f});
  }
  // hom sets are indexed lazily; the index is rebuilt whenever the morphism
  // count changes, so construction code can keep mutating tables freely
  const std::vector<Id>& hom(const Id& a, const Id& b) const {
    refresh_hom_index();
    static const std::vector<Id> empty;
    auto it = hom_idx_.find({a, b});
    return it == hom_idx_.end() ? empty : it->second;
  }
  size_t hom_size(const Id& a, const Id& b) const { return hom(a, b).size(); }
  std::vector<Id> mor_ids() const {
    std::vector<Id> out;
    out.reserve(morphisms.size());
    for (const auto& [id, m] : morphisms) out.push_back(id);
    return out;
  }
  // Unique inverse if one exists.
  std::optional<Id> inverse(const Id& f) const {
    const Mor& m = mor(f);
    for (const auto& gid : hom(m.cod, m.dom)) {
      if (compose(gid, f) == id_of(m.dom) && compose(f, gid) == id_of(m.cod))
        return gid;
    }
    return std::nullopt;
  }
  bool is_iso(const Id& f) const { return inverse(f).has_value(); }

 private:
  mutable std::map<std::pair<Id, Id>, std::vector<Id>> hom_idx_;
  mutable size_t hom_idx_count_ = static_cast<size_t>(-1);
  void refresh_hom_index() const {
    if (hom_idx_count_ == morphisms.size()) return;
    hom_idx_.clear();
    for (const auto& [id, m] : morphisms) hom_idx_[{m.dom, m.cod}].push_back(id);
    hom_idx_count_ = morphisms.size();
  }

 public:
};

// ---------------------------------------------------------------------------
// validate_category

inline Diags check_category(const FinCat& c) {
  Diags ds;
  std::set<Id> objset(c.objects.begin(), c.objects.end());
  if (objset.size() != c.objects.size())
    ds.push_back({"DuplicateObject", "object list has duplicates"});
  for (const auto& [id, m] : c.morphisms) {
    if (!objset.count(m.dom))
      ds.push_back({"UnknownObject", "dom of " + id + ": " + m.dom});
    if (!objset.count(m.cod))
      ds.push_back({"UnknownObject", "cod of " + id + ": " + m.cod});
  }
  if (!ds.empty()) return ds;

  for (const auto& o : c.objects) {
    auto it = c.identities.find(o);
    if (it == c.identities.end()) {
      ds.push_back({"MissingIdentity", o});
      continue;
    }
    if (!c.has_mor(it->second)) {
      ds.push_back({"UnknownMorphism", "identity of " + o});
      continue;
    }
    const Mor& m = c.mor(it->second);
    if (m.dom != o || m.cod != o)
      ds.push_back({"IdentityViolation", "id of " + o + " is not an endomorphism"});
  }
  for (const auto& [key, gf] : c.comp) {
    const auto& [g, f] = key;
    if (!c.has_mor(g) || !c.has_mor(f) || !c.has_mor(gf)) {
      ds.push_back({"UnknownMorphism", "compose entry (" + g + "," + f + ")"});
      continue;
    }
    if (c.dom(g) != c.cod(f))
      ds.push_back({"NotComposable", "(" + g + "," + f + ")"});
    else if (c.dom(gf) != c.dom(f) || c.cod(gf) != c.cod(g))
      ds.push_back({"CompositeBoundary", "(" + g + "," + f + ") -> " + gf});
  }
  if (!ds.empty()) return ds;

  // Totality of composition.
  for (const auto& [gid, g] : c.morphisms)
    for (const auto& [fid, f] : c.morphisms)
      if (g.dom == f.cod && !c.comp.count({gid, fid}))
        ds.push_back({"MissingComposite", "(" + gid + "," + fid + ")"});
  if (!ds.empty()) return ds;

  // Identity laws.
  for (const auto& [fid, f] : c.morphisms) {
    if (c.compose(fid, c.id_of(f.dom)) != fid)
      ds.push_back({"IdentityViolation", fid + " . id != " + fid});
    if (c.compose(c.id_of(f.cod), fid) != fid)
      ds.push_back({"IdentityViolation", "id . " + fid + " != " + fid});
  }
  // Associativity on every composable triple.
  for (const auto& [hid, h] : c.morphisms)
    for (const auto& [gid, g] : c.morphisms) {
      if (h.dom != g.cod) continue;
      for (const auto& [fid, f] : c.morphisms) {
        if (g.dom != f.cod) continue;
        if (c.compose(c.compose(hid, gid), fid) !=
            c.compose(hid, c.compose(gid, fid)))
          ds.push_back({"AssociativityViolation",
                        "(" + fid + "," + gid + "," + hid + ")"});
      }
    }
  return ds;
}

inline bool category_valid(const FinCat& c) { return check_category(c).empty(); }

// ---------------------------------------------------------------------------
// Functors and natural transformations

struct FinFunctor {
  std::map<Id, Id> on_objects;
  std::map<Id, Id> on_morphisms;

  const Id& ob(const Id& o) const { return on_objects.at(o); }
  const Id& mo(const Id& m) const { return on_morphisms.at(m); }
};

inline FinFunctor identity_functor(const FinCat& c) {
  FinFunctor f;
  for (const auto& o : c.objects) f.on_objects[o] = o;
  for (const auto& [id, m] : c.morphisms) f.on_morphisms[id] = id;
  return f;
}

inline FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  FinFunctor out;
  for (const auto& [a, b] : f.on_objects) out.on_objects[a] = g.ob(b);
  for (const auto& [a, b] : f.on_morphisms) out.on_morphisms[a] = g.mo(b);
  return out;
}

inline Diags check_functor(const FinFunctor& F, const FinCat& C, const FinCat& D) {
  Diags ds;
  for (const auto& o : C.objects) {
    auto it = F.on_objects.find(o);
    if (it == F.on_objects.end())
      ds.push_back({"MissingObjectImage", o});
    else if (!D.has_object(it->second))
      ds.push_back({"UnknownObject", "image of " + o});
  }
  for (const auto& [id, m] : C.morphisms) {
    auto it = F.on_morphisms.find(id);
    if (it == F.on_morphisms.end()) {
      ds.push_back({"MissingMorphismImage", id});
      continue;
    }
    if (!D.has_mor(it->second)) {
      ds.push_back({"UnknownMorphism", "image of " + id});
      continue;
    }
    const Mor& fm = D.mor(it->second);
    if (fm.dom != F.ob(m.dom) || fm.cod != F.ob(m.cod))
      ds.push_back({"BoundaryNotPreserved", id});
  }
  if (!ds.empty()) return ds;
  for (const auto& o : C.objects)
    if (F.mo(C.id_of(o)) != D.id_of(F.ob(o)))
      ds.push_back({"IdentityNotPreserved", o});
  for (const auto& [gid, g] : C.morphisms)
    for (const auto& [fid, f] : C.morphisms) {
      if (g.dom != f.cod) continue;
      if (F.mo(C.compose(gid, fid)) != D.compose(F.mo(gid), F.mo(fid)))
        ds.push_back({"CompositionNotPreserved", "(" + gid + "," + fid + ")"});
    }
  return ds;
}

struct NatTrans {
  std::map<Id, Id> components;  // object of C -> morphism of D
  const Id& at(const Id& o) const { return components.at(o); }
};

inline Diags check_nat(const NatTrans& a, const FinFunctor& F, const FinFunctor& G,
                       const FinCat& C, const FinCat& D) {
  Diags ds;
  for (const auto& o : C.objects) {
    auto it = a.components.find(o);
    if (it == a.components.end()) {
      ds.push_back({"MissingComponent", o});
      continue;
    }
    if (!D.has_mor(it->second)) {
      ds.push_back({"UnknownMorphism", "component at " + o});
      continue;
    }
    const Mor& m = D.mor(it->second);
    if (m.dom != F.ob(o) || m.cod != G.ob(o))
      ds.push_back({"ComponentBoundary", o});
  }
  if (!ds.empty()) return ds;
  for (const auto& [fid, f] : C.morphisms) {
    // G f . a_dom == a_cod . F f
    if (D.compose(G.mo(fid), a.at(f.dom)) != D.compose(a.at(f.cod), F.mo(fid)))
      ds.push_back({"NaturalitySquareFails", fid});
  }
  return ds;
}

inline NatTrans identity_nat(const FinFunctor& F, const FinCat& C, const FinCat& D) {
  NatTrans n;
  for (const auto& o : C.objects) n.components[o] = D.id_of(F.ob(o));
  return n;
}

// b after a, componentwise in D.
inline NatTrans nat_vcomp(const NatTrans& b, const NatTrans& a, const FinCat& C,
                          const FinCat& D) {
  NatTrans n;
  for (const auto& o : C.objects)
    n.components[o] = D.compose(b.at(o), a.at(o));
  return n;
}

// Horizontal composite (b * a) : G.F => G'.F' for a : F => F' (C -> D) and
// b : G => G' (D -> E); component (b*a)_x = G'(a_x) . b_{F x}.
inline NatTrans nat_hcomp(const NatTrans& b, const FinFunctor& G1,
                          const NatTrans& a, const FinFunctor& F,
                          const FinCat& C, const FinCat& E) {
  NatTrans n;
  for (const auto& o : C.objects)
    n.components[o] = E.compose(G1.mo(a.at(o)), b.at(F.ob(o)));
  return n;
}

// Whisker a functor into a transformation: (H * a)_x = H(a_x).
inline NatTrans nat_whisker_post(const FinFunctor& H, const NatTrans& a,
                                 const FinCat& C) {
  NatTrans n;
  for (const auto& o : C.objects) n.components[o] = H.mo(a.at(o));
  return n;
}

// Whisker a transformation with a functor: (a * K)_x = a_{K x}.
inline NatTrans nat_whisker_pre(const NatTrans& a, const FinFunctor& K,
                                const FinCat& B) {
  NatTrans n;
  for (const auto& o : B.objects) n.components[o] = a.at(K.ob(o));
  return n;
}

inline std::optional<NatTrans> nat_inverse(const NatTrans& a, const FinCat& C,
                                           const FinCat& D) {
  NatTrans n;
  for (const auto& o : C.objects) {
    auto inv = D.inverse(a.at(o));
    if (!inv) return std::nullopt;
    n.components[o] = *inv;
  }
  return n;
}

// ---------------------------------------------------------------------------
// Connectivity and initial objects

struct ComponentsReport {
  std::vector<std::vector<Id>> components;        // sorted object lists
  std::vector<std::vector<Id>> initials;          // per component
  std::vector<Id> global_initials;
};

inline ComponentsReport components_and_initials(const FinCat& c) {
  std::map<Id, Id> parent;
  for (const auto& o : c.objects) parent[o] = o;
  auto find = [&](Id x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  auto unite = [&](const Id& a, const Id& b) {
    Id ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  };
  for (const auto& [id, m] : c.morphisms) unite(m.dom, m.cod);

  std::map<Id, std::vector<Id>> groups;
  for (const auto& o : c.objects) groups[find(o)].push_back(o);

  ComponentsReport r;
  for (auto& [root, objs] : groups) {
    std::sort(objs.begin(), objs.end());
    std::vector<Id> inits;
    for (const auto& a : objs) {
      bool initial = true;
      for (const auto& b : objs)
        if (c.hom_size(a, b) != 1) { initial = false; break; }
      if (initial) inits.push_back(a);
    }
    r.components.push_back(objs);
    r.initials.push_back(inits);
    for (const auto& i : inits) r.global_initials.push_back(i);
  }
  std::sort(r.global_initials.begin(), r.global_initials.end());
  return r;
}

// ---------------------------------------------------------------------------
// Pullbacks with mediator certificates

struct SpanInCat {
  Id apex;
  Id left, right;  // morphisms out of apex
};

struct Cone {
  Id vertex;
  Id to_a, to_b;
};

struct PullbackCert {
  SpanInCat span;
  // every cone, paired with its unique mediator into the apex
  std::vector<std::pair<Cone, Id>> mediators;
};

// All cones over the cospan f : a -> c <- b : g.
inline std::vector<Cone> cones_over(const FinCat& C, const Id& f, const Id& g) {
  std::vector<Cone> out;
  const Id a = C.dom(f), b = C.dom(g);
  for (const auto& v : C.objects)
    for (const auto& p : C.hom(v, a))
      for (const auto& q : C.hom(v, b))
        if (C.compose(f, p) == C.compose(g, q)) out.push_back({v, p, q});
  return out;
}

inline std::optional<PullbackCert> pullback(const FinCat& C, const Id& f,
                                            const Id& g) {
  if (C.cod(f) != C.cod(g)) return std::nullopt;
  auto cones = cones_over(C, f, g);
  for (const auto& cand : cones) {  // cones are generated in canonical order
    PullbackCert cert;
    cert.span = {cand.vertex, cand.to_a, cand.to_b};
    bool universal = true;
    for (const auto& cn : cones) {
      Id mediator;
      int count = 0;
      for (const auto& m : C.hom(cn.vertex, cand.vertex)) {
        if (C.compose(cand.to_a, m) == cn.to_a &&
            C.compose(cand.to_b, m) == cn.to_b) {
          mediator = m;
          ++count;
        }
      }
      if (count != 1) { universal = false; break; }
      cert.mediators.push_back({cn, mediator});
    }
    if (universal) return cert;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Slice category C / X with the dom projection

struct SliceResult {
  FinCat cat;
  FinFunctor dom_projection;
};

inline Id slice_mor_id(const Id& w, const Id& u, const Id& v) {
  return join_id({w, u, v});
}

inline SliceResult slice(const FinCat& C, const Id& X) {
  SliceResult r;
  std::vector<Id> objs;
  for (const auto& [id, m] : C.morphisms)
    if (m.cod == X) objs.push_back(id);
  for (const auto& u : objs) {
    r.cat.add_object(u);
    r.dom_projection.on_objects[u] = C.dom(u);
  }
  for (const auto& u : objs)
    for (const auto& v : objs)
      for (const auto& w : C.hom(C.dom(u), C.dom(v)))
        if (C.compose(v, w) == u) {
          Id id = slice_mor_id(w, u, v);
          r.cat.add_mor(id, u, v);
          r.dom_projection.on_morphisms[id] = w;
        }
  for (const auto& u : objs)
    r.cat.identities[u] = slice_mor_id(C.id_of(C.dom(u)), u, u);
  for (const auto& [gid, g] : r.cat.morphisms)
    for (const auto& [fid, f] : r.cat.morphisms) {
      if (g.dom != f.cod) continue;
      Id w = C.compose(r.dom_projection.mo(gid), r.dom_projection.mo(fid));
      r.cat.comp[{gid, fid}] = slice_mor_id(w, f.dom, g.cod);
    }
  return r;
}

// ---------------------------------------------------------------------------
// Product category (used by the span composition functor)

struct ProductResult {
  FinCat cat;
  FinFunctor proj1, proj2;
};

inline Id pair_ob(const Id& a, const Id& b) { return join_id({a, b}); }
inline Id pair_mor(const Id& f, const Id& g) { return join_id({f, g}); }

inline ProductResult product_category(const FinCat& A, const FinCat& B) {
  ProductResult r;
  for (const auto& a : A.objects)
    for (const auto& b : B.objects) {
      Id o = pair_ob(a, b);
      r.cat.add_object(o);
      r.proj1.on_objects[o] = a;
      r.proj2.on_objects[o] = b;
    }
  for (const auto& [fid, f] : A.morphisms)
    for (const auto& [gid, g] : B.morphisms) {
      Id m = pair_mor(fid, gid);
      r.cat.add_mor(m, pair_ob(f.dom, g.dom), pair_ob(f.cod, g.cod));
      r.proj1.on_morphisms[m] = fid;
      r.proj2.on_morphisms[m] = gid;
    }
  for (const auto& a : A.objects)
    for (const auto& b : B.objects)
      r.cat.identities[pair_ob(a, b)] = pair_mor(A.id_of(a), B.id_of(b));
  for (const auto& [gid, g] : r.cat.morphisms)
    for (const auto& [fid, f] : r.cat.morphisms) {
      if (g.dom != f.cod) continue;
      Id c1 = A.compose(r.proj1.mo(gid), r.proj1.mo(fid));
      Id c2 = B.compose(r.proj2.mo(gid), r.proj2.mo(fid));
      r.cat.comp[{gid, fid}] = pair_mor(c1, c2);
    }
  return r;
}

// ---------------------------------------------------------------------------
// Isomorphism and equivalence search between finite categories

struct CatIso {
  FinFunctor fwd;
};

// Exhaustive backtracking search for an isomorphism of tables.
inline std::optional<CatIso> find_cat_iso(const FinCat& C, const FinCat& D) {
  if (C.objects.size() != D.objects.size()) return std::nullopt;
  if (C.morphisms.size() != D.morphisms.size()) return std::nullopt;

  std::vector<Id> cobs = C.objects;
  std::map<Id, Id> obmap;
  std::set<Id> used;
  std::optional<CatIso> result;

  auto profile = [](const FinCat& K, const Id& o) {
    std::multiset<std::pair<size_t, size_t>> p;
    for (const auto& o2 : K.objects)
      p.insert({K.hom_size(o, o2), K.hom_size(o2, o)});
    return p;
  };
  std::map<Id, std::multiset<std::pair<size_t, size_t>>> cprof, dprof;
  for (const auto& o : C.objects) cprof[o] = profile(C, o);
  for (const auto& o : D.objects) dprof[o] = profile(D, o);

  std::function<bool()> try_morphisms = [&]() -> bool {
    std::map<Id, Id> mormap;
    std::set<Id> musd;
    std::vector<Id> cms = C.mor_ids();
    std::function<bool(size_t)> go_mor = [&](size_t j) -> bool {
      if (j == cms.size()) {
        for (const auto& o : C.objects)
          if (mormap[C.id_of(o)] != D.id_of(obmap[o])) return false;
        for (const auto& [gid, g] : C.morphisms)
          for (const auto& [fid, f] : C.morphisms) {
            if (g.dom != f.cod) continue;
            if (mormap[C.compose(gid, fid)] !=
                D.compose(mormap[gid], mormap[fid]))
              return false;
          }
        return true;
      }
      const Mor& m = C.mor(cms[j]);
      for (const auto& d : D.hom(obmap[m.dom], obmap[m.cod])) {
        if (musd.count(d)) continue;
        if (C.is_identity(cms[j]) != D.is_identity(d)) continue;
        mormap[cms[j]] = d;
        musd.insert(d);
        if (go_mor(j + 1)) return true;
        musd.erase(d);
        mormap.erase(cms[j]);
      }
      return false;
    };
    if (go_mor(0)) {
      CatIso iso;
      iso.fwd.on_objects = obmap;
      iso.fwd.on_morphisms = mormap;
      result = iso;
      return true;
    }
    return false;
  };

  std::function<bool(size_t)> go_obj = [&](size_t i) -> bool {
    if (i == cobs.size()) return try_morphisms();
    const Id& o = cobs[i];
    for (const auto& d : D.objects) {
      if (used.count(d)) continue;
      if (cprof[o] != dprof[d]) continue;
      obmap[o] = d;
      used.insert(d);
      if (go_obj(i + 1)) return true;
      used.erase(d);
      obmap.erase(o);
    }
    return false;
  };

  if (go_obj(0)) return result;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Equivalence search: a fully faithful, essentially surjective functor plus
// a derived quasi-inverse. Exhaustion within the bound is a refutation;
// blowing the bound is reported as undecided, never as "not equivalent".

struct EquivalenceWitness {
  FinFunctor fwd;                       // F : C -> D, fully faithful
  std::map<Id, std::pair<Id, Id>> eso;  // D-object -> (C-object, iso in D)
  FinFunctor quasi_inverse;             // G : D -> C
  NatTrans unit;                        // 1_C => G.F (iso)
  NatTrans counit;                      // F.G => 1_D (iso)
};

enum class SearchOutcome { Found, Refuted, BoundExceeded };

struct EquivalenceResult {
  SearchOutcome outcome;
  std::optional<EquivalenceWitness> witness;
};

namespace detail {

inline bool functor_fully_faithful(const FinFunctor& F, const FinCat& C,
                                   const FinCat& D) {
  for (const auto& a : C.objects)
    for (const auto& b : C.objects) {
      auto ch = C.hom(a, b);
      auto dh = D.hom(F.ob(a), F.ob(b));
      if (ch.size() != dh.size()) return false;
      std::set<Id> images;
      for (const auto& m : ch) images.insert(F.mo(m));
      if (images.size() != dh.size()) return false;
      for (const auto& d : dh)
        if (!images.count(d)) return false;
    }
  return true;
}

}  // namespace detail

inline EquivalenceResult find_equivalence(const FinCat& C, const FinCat& D,
                                          uint64_t bound = 2000000) {
  // Rough search-space estimate: object assignments times hom assignments.
  long double space = 1;
  for (size_t i = 0; i < C.objects.size(); ++i) space *= (long double)std::max<size_t>(D.objects.size(), 1);
  if (space > (long double)bound) return {SearchOutcome::BoundExceeded, std::nullopt};

  std::map<Id, Id> obmap;
  std::optional<FinFunctor> found;

  // For each object assignment with matching hom cardinalities, try to build
  // morphism images hom-by-hom via backtracking.
  std::function<bool(size_t)> go = [&](size_t i) -> bool {
    if (i == C.objects.size()) {
      // hom cardinalities must match exactly for full faithfulness
      for (const auto& a : C.objects)
        for (const auto& b : C.objects)
          if (C.hom(a, b).size() != D.hom(obmap[a], obmap[b]).size())
            return false;
      // essential surjectivity precheck: every D object iso to some image
      for (const auto& d : D.objects) {
        bool hit = false;
        for (const auto& a : C.objects) {
          for (const auto& m : D.hom(obmap[a], d))
            if (D.is_iso(m)) { hit = true; break; }
          if (hit) break;
        }
        if (!hit) return false;
      }
      std::vector<Id> cms = C.mor_ids();
      std::map<Id, Id> mormap;
      std::function<bool(size_t)> go_mor = [&](size_t j) -> bool {
        if (j == cms.size()) {
          FinFunctor F;
          F.on_objects = obmap;
          F.on_morphisms = mormap;
          if (!check_functor(F, C, D).empty()) return false;
          if (!detail::functor_fully_faithful(F, C, D)) return false;
          found = F;
          return true;
        }
        const Mor& m = C.mor(cms[j]);
        for (const auto& d : D.hom(obmap[m.dom], obmap[m.cod])) {
          if (C.is_identity(cms[j]) && !D.is_identity(d)) continue;
          // injectivity within each hom
          bool dup = false;
          for (size_t k = 0; k < j; ++k) {
            const Mor& mk = C.mor(cms[k]);
            if (mk.dom == m.dom && mk.cod == m.cod && mormap[cms[k]] == d) {
              dup = true;
              break;
            }
          }
          if (dup) continue;
          mormap[cms[j]] = d;
          if (go_mor(j + 1)) return true;
          mormap.erase(cms[j]);
        }
        return false;
      };
      return go_mor(0);
    }
    for (const auto& d : D.objects) {
      obmap[C.objects[i]] = d;
      if (go(i + 1)) return true;
      obmap.erase(C.objects[i]);
    }
    return false;
  };

  if (!go(0)) return {SearchOutcome::Refuted, std::nullopt};

  EquivalenceWitness w;
  w.fwd = *found;
  // eso data: canonical (least) preimage object and iso
  for (const auto& d : D.objects) {
    bool set = false;
    for (const auto& a : C.objects) {
      for (const auto& m : D.hom(w.fwd.ob(a), d))
        if (D.is_iso(m)) {
          w.eso[d] = {a, m};
          set = true;
          break;
        }
      if (set) break;
    }
  }
  // quasi-inverse from the eso choices: G d = chosen preimage,
  // G (f : d -> d') = the unique C-morphism with F-image e'^{-1} . f . e.
  for (const auto& d : D.objects) w.quasi_inverse.on_objects[d] = w.eso[d].first;
  for (const auto& [fid, f] : D.morphisms) {
    const auto& [a, e] = w.eso[f.dom];
    const auto& [b, e2] = w.eso[f.cod];
    Id conj = D.compose(*D.inverse(e2), D.compose(fid, e));
    for (const auto& m : C.hom(a, b))
      if (w.fwd.mo(m) == conj) {
        w.quasi_inverse.on_morphisms[fid] = m;
        break;
      }
  }
  // unit: a -> G F a is the unique morphism whose image is eso-iso^{-1} at Fa
  for (const auto& a : C.objects) {
    const auto& [ga, e] = w.eso[w.fwd.ob(a)];
    Id want = *D.inverse(e);
    for (const auto& m : C.hom(a, ga))
      if (w.fwd.mo(m) == want) {
        w.unit.components[a] = m;
        break;
      }
  }
  // counit: F G d -> d is the eso iso itself
  for (const auto& d : D.objects) w.counit.components[d] = w.eso[d].second;
  return {SearchOutcome::Found, w};
}

}  // namespace laxgen
