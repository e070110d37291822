#pragma once

// Built-in fixtures exposed by the `fixtures` CLI verb and usable as input
// names by the decision verbs.

#include "laxgen/constructions.hpp"
#include "laxgen/json_io.hpp"

namespace laxgen {

// The poset a <= b <= d, a <= c <= d (commuting square).
inline FinCat walking_square_poset() {
  FinCat c;
  for (Id o : {"a", "b", "c", "d"}) {
    c.add_object(o);
    c.add_mor("1" + o, o, o);
    c.identities[o] = "1" + o;
  }
  c.add_mor("ab", "a", "b");
  c.add_mor("ac", "a", "c");
  c.add_mor("ad", "a", "d");
  c.add_mor("bd", "b", "d");
  c.add_mor("cd", "c", "d");
  for (const auto& [gid, g] : c.morphisms)
    for (const auto& [fid, f] : c.morphisms) {
      if (g.dom != f.cod) continue;
      for (const auto& [hid, h] : c.morphisms)
        if (h.dom == f.dom && h.cod == g.cod) c.comp[{gid, fid}] = hid;
    }
  return c;
}

// One-object groupoid on Z/2.
inline FinCat group_z2_category() {
  FinCat c;
  c.add_object("*");
  c.add_mor("e", "*", "*");
  c.add_mor("s", "*", "*");
  c.identities["*"] = "e";
  c.comp[{"e", "e"}] = "e";
  c.comp[{"e", "s"}] = "s";
  c.comp[{"s", "e"}] = "s";
  c.comp[{"s", "s"}] = "e";
  return c;
}

inline std::vector<std::string> builtin_fixture_names() {
  return {"span-square-poset", "span-bz2", "swap", "fam-trunc"};
}

inline std::optional<PseudoInstance> builtin_pseudo_instance(
    const std::string& name) {
  if (name == "span-square-poset") {
    auto built = span_bicategory(walking_square_poset());
    const auto& sf = std::get<SpanFixture>(built);
    return PseudoInstance{sf.domain, sf.bicat, sf.inclusion};
  }
  if (name == "span-bz2") {
    auto built = span_bicategory(group_z2_category());
    const auto& sf = std::get<SpanFixture>(built);
    return PseudoInstance{sf.domain, sf.bicat, sf.inclusion};
  }
  if (name == "swap") {
    auto fxw = swap_fixture();
    return PseudoInstance{fxw.span.domain, fxw.span.bicat, fxw.span.inclusion};
  }
  return std::nullopt;
}

// The document a fixture name denotes when used as a verb input.
inline std::optional<json> builtin_document(const std::string& name) {
  if (auto pi = builtin_pseudo_instance(name))
    return pseudo_instance_to_json(*pi);
  if (name == "fam-trunc") {
    auto U =
        cat_universe({{"one", [] {
                         FinCat t;
                         t.add_object("*");
                         t.add_mor("1", "*", "*");
                         t.identities["*"] = "1";
                         t.comp[{"1", "1"}] = "1";
                         return t;
                       }()}});
    auto F = fam_copresheaf(U, 2);
    json j;
    j["kind"] = "fixture-bundle";
    j["name"] = "fam-trunc";
    j["relative"] = true;  // genericity claims hold relative to this universe
    j["fam_le2_terminal"] = cat_to_json(F.fiber("one"));
    j["universe"] = bicat_to_json(U.bicat);
    return j;
  }
  return std::nullopt;
}

}  // namespace laxgen
