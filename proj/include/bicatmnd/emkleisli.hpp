#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicatmnd/monad.hpp"

namespace bicatmnd {

// A cone for m: a monad morphism id_monad(ob) → m.
//   mor : ob → ob m,  cell : mor;e ⇒ id;mor
struct EMCone {
  Monad monad;
  Cell ob;
  Cell mor;
  Cell cell;
};

MonadMorphism as_monad_morphism(const Bicategory& b, const EMCone& c);
EMCone cone_from_morphism(const MonadMorphism& f);
LawReport check_em_cone(const Bicategory& b, const EMCone& c);

// mor : ob m → ob,  cell : e;mor ⇒ mor
struct KleisliCocone {
  Monad monad;
  Cell ob;
  Cell mor;
  Cell cell;
};

LawReport check_kleisli_cocone(const Bicategory& b, const KleisliCocone& k);

// Eilenberg–Moore category of a CatFin monad with lookups into the base.
struct EMResult {
  FinCat category;
  EMCone cone;
  std::vector<int> carrier;    // per EM object
  std::vector<int> structure;  // per EM object, T(carrier) → carrier
  std::vector<int> base_morphism;
  std::map<std::pair<int, int>, int> object_of;  // (carrier, structure) → object

  std::optional<int> find_object(int carrier, int structure) const;
  // The EM morphism over base morphism f between algebras s and t.
  std::optional<int> find_morphism(int s, int f, int t) const;
};

EMResult em_category(const Monad& m);
// T(f);b == a;f for structure maps a, b.
bool is_algebra_morphism(const FinCat& c, const Functor& t, int a, int f, int b);
std::string algebra_name(const FinCat& c, int x, int a);

// hom(x, ob e) → hom_Mnd(id_monad(x), m)
struct HomFunctor {
  HomCategory source;
  HomCategory target;
  Functor functor;
};
HomFunctor em_functor(BicatPtr b, const EMCone& e, const Cell& x);
// The cone induced by h : x → ob e.
MonadMorphism em_functor_on(const Bicategory& b, const EMCone& e, const Cell& h);

// hom(x, ob e) → EM(hom_monad(x, m))
struct AltFunctor {
  HomCategory source;
  HomMonad hom_monad;
  EMResult em;
  Functor functor;
};
AltFunctor em_functor_alt(const Bicategory& b, const EMCone& e, const Cell& x);

// EM(hom_monad(x, m)) → hom_Mnd(id_monad(x), m): (h, a) ↦ (h, a•λ⁻¹).
struct HomEquivalence {
  Functor forward;
  Functor backward;
};
HomEquivalence hom_equivalence(const Bicategory& b, const EMCone& e, const AltFunctor& alt, const HomFunctor& target);

struct EMMediation {
  Cell mediator;  // h : x → ob e
  Cell iso;       // invertible monad cell underlying h;mor ⇒ q.mor
};
// All mediators of the cone q through e.
std::vector<EMMediation> em_mediators(BicatPtr b, const EMCone& e, const MonadMorphism& q);
// All τ : h1 ⇒ h2 with τ ⊳ mor = alpha.
std::vector<Cell> em_factorizations(const Bicategory& b, const EMCone& e, const Cell& h1, const Cell& h2,
                                    const Cell& alpha);

struct SampleVerdict {
  std::string sample;
  bool fully_faithful = false;
  bool essentially_surjective = false;
  bool existence = false;   // every cone has a mediator
  bool uniqueness = false;  // every compatible 2-cell factors uniquely
  std::size_t cones = 0;
  std::size_t two_cells = 0;
};

struct UmpReport {
  bool universal = false;
  std::vector<SampleVerdict> samples;
  std::vector<std::string> failures;
  std::vector<std::string> sample_names() const;
};

std::string cell_label(const Cell& x);

UmpReport check_em_universal(BicatPtr b, const EMCone& e, const std::vector<Cell>& sample_objects);

// Kleisli category: morphisms x → T y, composite f;T(g);μ, identity η.
struct KleisliResult {
  FinCat category;
  KleisliCocone cocone;
  std::vector<int> base_morphism;  // per Kleisli morphism, x → T y
};
KleisliResult kleisli_category(const Monad& m);

Functor free_alg_functor(const Monad& m, const EMResult& em);

struct UnivKleisli {
  FinCat category;
  std::vector<int> em_object;  // inclusion into EM
  Functor comparison;          // Kleisli → univ_kleisli
};
UnivKleisli univ_kleisli(const Monad& m, const EMResult& em, const KleisliResult& kl);

// Precomposition with K between functor categories into d.
struct Precomposition {
  FunctorCategory from;  // [univ, d]
  FunctorCategory to;    // [kleisli, d]
  Functor functor;
};
Precomposition precomposition(const Functor& k, const FinCat& d);

struct KleisliMediation {
  Cell mediator;  // h : ob k → ob q
  Cell iso;       // kmor;h ⇒ qmor
};
std::vector<KleisliMediation> kleisli_mediators(const Bicategory& b, const KleisliCocone& k, const KleisliCocone& q);
// All cocones for k.monad with apex w.
std::vector<KleisliCocone> kleisli_cocones(const Bicategory& b, const Monad& m, const Cell& w);

UmpReport check_kleisli_universal(const Bicategory& b, const KleisliCocone& k,
                                  const std::vector<KleisliCocone>& sample_cocones,
                                  const std::vector<Cell>& sample_objects);

// The cocone read as an EM cone in op1(B).
EMCone op1_em_from_kleisli(const Bicategory& b, const KleisliCocone& k);
// Cocone q seen as a cone of op1(B).
MonadMorphism op1_cone_of_cocone(BicatPtr b, const KleisliCocone& q);

struct TerminalAlgebra {
  EMResult em;
  int object;
};
// m is a monad in total(terminal layer).
TerminalAlgebra em_with_terminal(const Monad& m);

}  // namespace bicatmnd
