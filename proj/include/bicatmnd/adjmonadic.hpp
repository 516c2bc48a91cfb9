#pragma once

#include <string>
#include <vector>

#include "bicatmnd/emkleisli.hpp"

namespace bicatmnd {

// l : x → y, r : y → x, η : id1 x ⇒ l;r, ε : r;l ⇒ id1 y
struct Adjunction {
  Cell left;
  Cell right;
  Cell unit;
  Cell counit;
};

LawReport check_adjunction(const Bicategory& b, const Adjunction& a);
Adjunction identity_adjunction(const Bicategory& b, const Cell& x);

// op1: (r, l, η, ε); op2: (r, l, ε, η). Both are involutions.
Adjunction adj_dual_op1(const Adjunction& a);
Adjunction adj_dual_op2(const Adjunction& a);

// Displayed data over an adjunction x ⇄ y.
struct DispAdjunction {
  Cell ob_x;
  Cell ob_y;
  Cell left;
  Cell right;
  Cell unit;
  Cell counit;
};
// Throws BoundaryError when a displayed cell is missing or the layer is not
// locally propositional over x and y.
Adjunction total_adjunction(BicatPtr total, const Adjunction& a, const DispAdjunction& d);

Monad adjunction_to_monad(const Bicategory& b, const Adjunction& a);

struct AdjunctionFromMonad {
  Adjunction adjunction;
  // adjunction_to_monad(adjunction) → m over id1(ob m).
  MonadMorphism comparison;
  Cell iso;  // l;r ⇒ e, the mediating cell of the free cone
};
// e must be universal; throws BoundaryError if a needed mediator or
// factorization is missing, or the triangles fail afterwards.
AdjunctionFromMonad monad_to_adjunction(BicatPtr b, const Monad& m, const EMCone& e);

// Postcomposition with l and r between hom(w, x) and hom(w, y).
struct HomAdjunction {
  HomCategory hom_x;
  HomCategory hom_y;
  Adjunction adjunction;  // in CatFin
};
HomAdjunction hom_adjunction(const Bicategory& b, const Adjunction& a, const Cell& w);

struct Comparison {
  MonadMorphism cone;  // (y, r, lassoc • (ε ⊳ r))
  Cell mediator;       // y → ob e
  Cell iso;            // mediator;mor ⇒ r
};
// e is an EM cone for adjunction_to_monad(a).
Comparison comparison(BicatPtr b, const Adjunction& a, const EMCone& e);

struct MonadicReport {
  bool monadic = false;
  Comparison comparison;
};
MonadicReport is_monadic(BicatPtr b, const Adjunction& a, const EMCone& e);
// In CatFin the comparison is built directly, y ↦ (r y, r(ε_y)), and
// checked to be a mediator of the cone.
Comparison comparison_cat(const Adjunction& a, const EMResult& em);
MonadicReport is_monadic_cat(const Adjunction& a);

struct SampleFlag {
  std::string sample;
  bool value = false;
};

struct ReprMonadicReport {
  bool representably_monadic = false;
  std::vector<SampleFlag> samples;
};
ReprMonadicReport is_representably_monadic(const Bicategory& b, const Adjunction& a,
                                           const std::vector<Cell>& sample_objects);

struct ReprAdjequivReport {
  bool direct = false;
  bool representable = false;
  bool agree = false;
  std::vector<SampleFlag> samples;
};
ReprAdjequivReport repr_adjequiv_check(const Bicategory& b, const Cell& f, const std::vector<Cell>& sample_objects);

}  // namespace bicatmnd
