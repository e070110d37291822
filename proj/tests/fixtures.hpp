#pragma once

// Small categories and bicategories shared across the test suites.

#include "laxgen/bicat.hpp"
#include "laxgen/fincat.hpp"

namespace fx {

using laxgen::FinBicat;
using laxgen::FinCat;
using laxgen::Id;

inline FinCat terminal_cat() {
  FinCat c;
  c.add_object("*");
  c.add_mor("1", "*", "*");
  c.identities["*"] = "1";
  c.comp[{"1", "1"}] = "1";
  return c;
}

inline FinCat walking_arrow() {
  FinCat c;
  c.add_object("a");
  c.add_object("b");
  c.add_mor("1a", "a", "a");
  c.add_mor("1b", "b", "b");
  c.add_mor("f", "a", "b");
  c.identities["a"] = "1a";
  c.identities["b"] = "1b";
  c.comp[{"1a", "1a"}] = "1a";
  c.comp[{"1b", "1b"}] = "1b";
  c.comp[{"f", "1a"}] = "f";
  c.comp[{"1b", "f"}] = "f";
  return c;
}

inline FinCat discrete2() {
  FinCat c;
  c.add_object("a");
  c.add_object("b");
  c.add_mor("1a", "a", "a");
  c.add_mor("1b", "b", "b");
  c.identities["a"] = "1a";
  c.identities["b"] = "1b";
  c.comp[{"1a", "1a"}] = "1a";
  c.comp[{"1b", "1b"}] = "1b";
  return c;
}

// a -> c <- b
inline FinCat walking_cospan() {
  FinCat c;
  for (Id o : {"a", "b", "c"}) {
    c.add_object(o);
    c.add_mor("1" + o, o, o);
    c.identities[o] = "1" + o;
  }
  c.add_mor("f", "a", "c");
  c.add_mor("g", "b", "c");
  for (Id o : {"a", "b", "c"}) c.comp[{"1" + o, "1" + o}] = "1" + o;
  c.comp[{"f", "1a"}] = "f";
  c.comp[{"1c", "f"}] = "f";
  c.comp[{"g", "1b"}] = "g";
  c.comp[{"1c", "g"}] = "g";
  return c;
}

// The poset a <= b <= d, a <= c <= d with a <= d (commuting square).
inline FinCat square_poset() {
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
  // poset: composites are forced
  auto leq = [&](const Id& m) { return true; (void)m; };
  (void)leq;
  for (const auto& [gid, g] : c.morphisms)
    for (const auto& [fid, f] : c.morphisms) {
      if (g.dom != f.cod) continue;
      // unique morphism f.dom -> g.cod
      for (const auto& [hid, h] : c.morphisms)
        if (h.dom == f.dom && h.cod == g.cod) c.comp[{gid, fid}] = hid;
    }
  return c;
}

// One-object groupoid on Z/2: morphisms e (identity) and s with s.s = e.
inline FinCat bz2() {
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

// Two parallel arrows a => b.
inline FinCat parallel_pair() {
  FinCat c;
  c.add_object("a");
  c.add_object("b");
  c.add_mor("1a", "a", "a");
  c.add_mor("1b", "b", "b");
  c.add_mor("u", "a", "b");
  c.add_mor("v", "a", "b");
  c.identities["a"] = "1a";
  c.identities["b"] = "1b";
  c.comp[{"1a", "1a"}] = "1a";
  c.comp[{"1b", "1b"}] = "1b";
  c.comp[{"u", "1a"}] = "u";
  c.comp[{"1b", "u"}] = "u";
  c.comp[{"v", "1a"}] = "v";
  c.comp[{"1b", "v"}] = "v";
  return c;
}

// One object, one 1-cell u with u.u = u, and Z2 worth of 2-cells on u.
// The smallest bicategory whose hom has two parallel invertible 2-cells.
inline FinBicat sigma_z2() {
  FinBicat B;
  B.objects = {"o"};
  FinCat H;
  H.add_object("u");
  H.add_mor("e", "u", "u");
  H.add_mor("s", "u", "u");
  H.identities["u"] = "e";
  H.comp[{"e", "e"}] = "e";
  H.comp[{"e", "s"}] = "s";
  H.comp[{"s", "e"}] = "s";
  H.comp[{"s", "s"}] = "e";
  B.homs[{"o", "o"}] = H;
  B.unit1["o"] = "u";
  B.hc1[{"u", "u"}] = "u";
  auto mul = [](const Id& a, const Id& b) { return a == b ? Id("e") : Id("s"); };
  for (Id a : {"e", "s"})
    for (Id b : {"e", "s"}) B.hc2[{a, b}] = mul(a, b);
  B.assoc[{"u", "u", "u"}] = "e";
  B.lun["u"] = "e";
  B.run["u"] = "e";
  B.seal();
  return B;
}

// One object, 1-cells {u (unit), v} with all composites v except u.u = u,
// and Z2 worth of 2-cells on each 1-cell. Identity associators; corrupting
// assoc(v,v,v) breaks only the pentagon (no triangle instance touches it).
inline FinBicat sigma2_z2() {
  FinBicat B;
  B.objects = {"o"};
  FinCat H;
  for (Id w : {"u", "v"}) {
    H.add_object(w);
    H.add_mor("e" + w, w, w);
    H.add_mor("s" + w, w, w);
    H.identities[w] = "e" + w;
    H.comp[{"e" + w, "e" + w}] = "e" + w;
    H.comp[{"e" + w, "s" + w}] = "s" + w;
    H.comp[{"s" + w, "e" + w}] = "s" + w;
    H.comp[{"s" + w, "s" + w}] = "e" + w;
  }
  B.homs[{"o", "o"}] = H;
  B.unit1["o"] = "u";
  auto comp1 = [](const Id& g, const Id& f) {
    return (g == "u" && f == "u") ? Id("u") : Id("v");
  };
  for (Id g : {"u", "v"})
    for (Id f : {"u", "v"}) B.hc1[{g, f}] = comp1(g, f);
  auto sgn = [](const Id& c) { return c[0] == 's' ? -1 : 1; };
  for (Id g : {"u", "v"})
    for (Id f : {"u", "v"})
      for (Id x : {"e" + g, "s" + g})
        for (Id y : {"e" + f, "s" + f}) {
          Id w = comp1(g, f);
          B.hc2[{x, y}] = (sgn(x) * sgn(y) > 0 ? "e" : "s") + w;
        }
  for (Id h : {"u", "v"})
    for (Id g : {"u", "v"})
      for (Id f : {"u", "v"})
        B.assoc[{h, g, f}] = "e" + comp1(h, comp1(g, f));
  for (Id f : {"u", "v"}) {
    B.lun[f] = "e" + f;
    B.run[f] = "e" + f;
  }
  B.seal();
  return B;
}

// Chain a -> b -> c (2-chain) with composite.
inline FinCat chain2() {
  FinCat c;
  for (Id o : {"a", "b", "c"}) {
    c.add_object(o);
    c.add_mor("1" + o, o, o);
    c.identities[o] = "1" + o;
  }
  c.add_mor("f", "a", "b");
  c.add_mor("g", "b", "c");
  c.add_mor("gf", "a", "c");
  for (const auto& [gid, g] : c.morphisms)
    for (const auto& [fid, f] : c.morphisms) {
      if (g.dom != f.cod) continue;
      for (const auto& [hid, h] : c.morphisms)
        if (h.dom == f.dom && h.cod == g.cod) c.comp[{gid, fid}] = hid;
    }
  return c;
}

}  // namespace fx
