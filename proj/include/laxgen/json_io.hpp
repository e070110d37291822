#pragma once

// JSON documents for categories, functors, copresheaves, bicategories and
// pseudofunctors. Emission is deterministic: objects carry their keys in
// sorted order and arrays are emitted in the canonical (sorted) order the
// in-memory tables already have.

#include <json.hpp>

#include "laxgen/bicat.hpp"
#include "laxgen/diers1d.hpp"
#include "laxgen/elbicat.hpp"

namespace laxgen {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// FinCat

inline json cat_to_json(const FinCat& c) {
  json j;
  j["objects"] = c.objects;
  json ms = json::array();
  for (const auto& [id, m] : c.morphisms)
    ms.push_back({{"id", id}, {"dom", m.dom}, {"cod", m.cod}});
  j["morphisms"] = ms;
  j["identities"] = c.identities;
  json comp = json::array();
  for (const auto& [p, gf] : c.comp)
    comp.push_back(json::array({p.first, p.second, gf}));
  j["compose"] = comp;
  return j;
}

inline FinCat cat_from_json(const json& j) {
  FinCat c;
  for (const auto& o : j.at("objects")) c.add_object(o.get<Id>());
  for (const auto& m : j.at("morphisms"))
    c.add_mor(m.at("id").get<Id>(), m.at("dom").get<Id>(),
              m.at("cod").get<Id>());
  for (auto it = j.at("identities").begin(); it != j.at("identities").end();
       ++it)
    c.identities[it.key()] = it.value().get<Id>();
  for (const auto& t : j.at("compose"))
    c.comp[{t.at(0).get<Id>(), t.at(1).get<Id>()}] = t.at(2).get<Id>();
  return c;
}

inline json functor_to_json(const FinFunctor& f) {
  return {{"on_objects", f.on_objects}, {"on_morphisms", f.on_morphisms}};
}

inline FinFunctor functor_from_json(const json& j) {
  FinFunctor f;
  for (auto it = j.at("on_objects").begin(); it != j.at("on_objects").end();
       ++it)
    f.on_objects[it.key()] = it.value().get<Id>();
  for (auto it = j.at("on_morphisms").begin();
       it != j.at("on_morphisms").end(); ++it)
    f.on_morphisms[it.key()] = it.value().get<Id>();
  return f;
}

inline json nat_to_json(const NatTrans& n) { return {{"components", n.components}}; }

inline NatTrans nat_from_json(const json& j) {
  NatTrans n;
  for (auto it = j.at("components").begin(); it != j.at("components").end();
       ++it)
    n.components[it.key()] = it.value().get<Id>();
  return n;
}

// ---------------------------------------------------------------------------
// SetCopresheaf

inline json copresheaf_to_json(const SetCopresheaf& F) {
  json j;
  j["base"] = cat_to_json(F.base);
  j["sets"] = F.sets;
  json acts;
  for (const auto& [m, fn] : F.actions) acts[m] = fn;
  j["actions"] = acts.is_null() ? json::object() : acts;
  return j;
}

inline SetCopresheaf copresheaf_from_json(const json& j) {
  SetCopresheaf F;
  F.base = cat_from_json(j.at("base"));
  for (auto it = j.at("sets").begin(); it != j.at("sets").end(); ++it)
    F.sets[it.key()] = it.value().get<std::vector<Id>>();
  for (auto it = j.at("actions").begin(); it != j.at("actions").end(); ++it) {
    std::map<Id, Id> fn;
    for (auto jt = it.value().begin(); jt != it.value().end(); ++jt)
      fn[jt.key()] = jt.value().get<Id>();
    F.actions[it.key()] = fn;
  }
  return F;
}

// ---------------------------------------------------------------------------
// FinBicat

inline json bicat_to_json(const FinBicat& b) {
  json j;
  j["objects"] = b.objects;
  json homs = json::object();
  for (const auto& [ab, H] : b.homs)
    homs[ab.first][ab.second] = cat_to_json(H);
  j["homs"] = homs;
  j["units"] = b.unit1;
  json h1 = json::array(), h2 = json::array(), as = json::array();
  for (const auto& [p, v] : b.hc1)
    h1.push_back(json::array({p.first, p.second, v}));
  for (const auto& [p, v] : b.hc2)
    h2.push_back(json::array({p.first, p.second, v}));
  for (const auto& [t, v] : b.assoc)
    as.push_back(json::array(
        {std::get<0>(t), std::get<1>(t), std::get<2>(t), v}));
  j["hcomp_1"] = h1;
  j["hcomp_2"] = h2;
  j["associators"] = as;
  j["left_unitors"] = b.lun;
  j["right_unitors"] = b.run;
  j["total"] = b.total;
  return j;
}

inline FinBicat bicat_from_json(const json& j) {
  FinBicat b;
  b.objects = j.at("objects").get<std::vector<Id>>();
  for (auto it = j.at("homs").begin(); it != j.at("homs").end(); ++it)
    for (auto jt = it.value().begin(); jt != it.value().end(); ++jt)
      b.homs[{it.key(), jt.key()}] = cat_from_json(jt.value());
  for (auto it = j.at("units").begin(); it != j.at("units").end(); ++it)
    b.unit1[it.key()] = it.value().get<Id>();
  for (const auto& t : j.at("hcomp_1"))
    b.hc1[{t.at(0).get<Id>(), t.at(1).get<Id>()}] = t.at(2).get<Id>();
  for (const auto& t : j.at("hcomp_2"))
    b.hc2[{t.at(0).get<Id>(), t.at(1).get<Id>()}] = t.at(2).get<Id>();
  for (const auto& t : j.at("associators"))
    b.assoc[{t.at(0).get<Id>(), t.at(1).get<Id>(), t.at(2).get<Id>()}] =
        t.at(3).get<Id>();
  for (auto it = j.at("left_unitors").begin(); it != j.at("left_unitors").end();
       ++it)
    b.lun[it.key()] = it.value().get<Id>();
  for (auto it = j.at("right_unitors").begin();
       it != j.at("right_unitors").end(); ++it)
    b.run[it.key()] = it.value().get<Id>();
  if (j.contains("total")) b.total = j.at("total").get<bool>();
  b.seal();
  return b;
}

inline json pseudofunctor_to_json(const PseudoFunctor& t) {
  json j;
  j["on_objects"] = t.on_objects;
  j["on_1cells"] = t.on_1cells;
  j["on_2cells"] = t.on_2cells;
  json cc = json::array();
  for (const auto& [p, v] : t.comp_cell)
    cc.push_back(json::array({p.first, p.second, v}));
  j["comp_cells"] = cc;
  j["unit_cells"] = t.unit_cell;
  return j;
}

inline PseudoFunctor pseudofunctor_from_json(const json& j) {
  PseudoFunctor t;
  auto load = [&](const char* key, std::map<Id, Id>& m) {
    for (auto it = j.at(key).begin(); it != j.at(key).end(); ++it)
      m[it.key()] = it.value().get<Id>();
  };
  load("on_objects", t.on_objects);
  load("on_1cells", t.on_1cells);
  load("on_2cells", t.on_2cells);
  load("unit_cells", t.unit_cell);
  for (const auto& c : j.at("comp_cells"))
    t.comp_cell[{c.at(0).get<Id>(), c.at(1).get<Id>()}] = c.at(2).get<Id>();
  return t;
}

// ---------------------------------------------------------------------------
// CatCopresheaf: mirrors the Set-valued schema with embedded category,
// functor and transformation documents plus comparison-cell tables.

inline json catcopresheaf_to_json(const CatCopresheaf& F) {
  json j;
  j["base"] = bicat_to_json(F.base);
  json fib = json::object();
  for (const auto& [a, K] : F.on_objects) fib[a] = cat_to_json(K);
  j["fibers"] = fib;
  json c1 = json::object();
  for (const auto& [f, G] : F.on_1cells) c1[f] = functor_to_json(G);
  j["on_1cells"] = c1;
  json c2 = json::object();
  for (const auto& [c, n] : F.on_2cells) c2[c] = nat_to_json(n);
  j["on_2cells"] = c2;
  json ci = json::array();
  for (const auto& [p, n] : F.comp_iso)
    ci.push_back(json::array({p.first, p.second, nat_to_json(n)}));
  j["comp_isos"] = ci;
  json ui = json::object();
  for (const auto& [a, n] : F.unit_iso) ui[a] = nat_to_json(n);
  j["unit_isos"] = ui;
  return j;
}

inline CatCopresheaf catcopresheaf_from_json(const json& j) {
  CatCopresheaf F;
  F.base = bicat_from_json(j.at("base"));
  for (auto it = j.at("fibers").begin(); it != j.at("fibers").end(); ++it)
    F.on_objects[it.key()] = cat_from_json(it.value());
  for (auto it = j.at("on_1cells").begin(); it != j.at("on_1cells").end(); ++it)
    F.on_1cells[it.key()] = functor_from_json(it.value());
  for (auto it = j.at("on_2cells").begin(); it != j.at("on_2cells").end(); ++it)
    F.on_2cells[it.key()] = nat_from_json(it.value());
  for (const auto& t : j.at("comp_isos"))
    F.comp_iso[{t.at(0).get<Id>(), t.at(1).get<Id>()}] = nat_from_json(t.at(2));
  for (auto it = j.at("unit_isos").begin(); it != j.at("unit_isos").end(); ++it)
    F.unit_iso[it.key()] = nat_from_json(it.value());
  return F;
}

// ---------------------------------------------------------------------------
// Instance documents: a functor with its (co)domain, a pseudofunctor with
// its (co)domain bicategories.

struct FunctorInstance {
  FinCat domain, codomain;
  FinFunctor functor;
};

inline json functor_instance_to_json(const FunctorInstance& fi) {
  return {{"kind", "functor-instance"},
          {"domain", cat_to_json(fi.domain)},
          {"codomain", cat_to_json(fi.codomain)},
          {"functor", functor_to_json(fi.functor)}};
}

inline FunctorInstance functor_instance_from_json(const json& j) {
  FunctorInstance fi;
  fi.domain = cat_from_json(j.at("domain"));
  fi.codomain = cat_from_json(j.at("codomain"));
  fi.functor = functor_from_json(j.at("functor"));
  return fi;
}

struct PseudoInstance {
  FinBicat domain, codomain;
  PseudoFunctor pseudofunctor;
};

inline json pseudo_instance_to_json(const PseudoInstance& pi) {
  return {{"kind", "pseudofunctor-instance"},
          {"domain", bicat_to_json(pi.domain)},
          {"codomain", bicat_to_json(pi.codomain)},
          {"pseudofunctor", pseudofunctor_to_json(pi.pseudofunctor)}};
}

inline PseudoInstance pseudo_instance_from_json(const json& j) {
  PseudoInstance pi;
  pi.domain = bicat_from_json(j.at("domain"));
  pi.codomain = bicat_from_json(j.at("codomain"));
  pi.pseudofunctor = pseudofunctor_from_json(j.at("pseudofunctor"));
  return pi;
}

// ---------------------------------------------------------------------------
// Deterministic digest (FNV-1a, 64 bit) of the canonical dump.

inline std::string digest64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string digest_json(const json& j) { return digest64(j.dump()); }

}  // namespace laxgen
