#pragma once

#include <optional>

#include "bicatmnd/dispbicat.hpp"

namespace bicatmnd {

struct Monad {
  Cell ob;
  Cell endo;  // ob → ob
  Cell unit;  // id1 ob ⇒ endo
  Cell mult;  // endo;endo ⇒ endo
};

// mor : ob m1 → ob m2, cell : mor;e2 ⇒ e1;mor
struct MonadMorphism {
  Monad source;
  Monad target;
  Cell mor;
  Cell cell;
};

struct MonadCell {
  MonadMorphism source;
  MonadMorphism target;
  Cell cell;  // source.mor ⇒ target.mor
};

// The layers Mnd(B) is assembled from. Endo carries the endo-1-cells and
// the squares f;e_y ⇒ e_x;f; unit and mult are proof layers over total(Endo);
// is_mnd cuts out the monad laws.
struct MndLayers {
  DispPtr endo;
  DispPtr unit;
  DispPtr mult;
  DispPtr data;    // sigma(endo, prod(unit, mult))
  DispPtr is_mnd;  // fullsub over total(data)
  DispPtr mnd;     // sigma(data, is_mnd)
  BicatPtr total;  // Mnd(B)
};

MndLayers mnd_layers(BicatPtr b);
BicatPtr mnd_bicat(BicatPtr b);
// The B that a Mnd(B) produced by mnd_bicat sits over, or null.
BicatPtr mnd_base(const BicatPtr& mnd);

// Conversions to and from cells of Mnd(B).
Cell encode(const Monad& m);
Cell encode(const MonadMorphism& f);
Cell encode(const MonadCell& a);
Monad decode_monad(const Cell& x);
// b is the base bicategory; it supplies the base boundaries.
MonadMorphism decode_morphism(const Bicategory& b, const Cell& f);
MonadCell decode_cell(const Bicategory& b, const Cell& a);

// Equations used by the layers, exposed so that checks and layers agree.
LawReport monad_laws(const Bicategory& b, const Cell& e, const Cell& eta, const Cell& mu);
// θ for the identity and a composite in the Endo layer.
Cell endo_id_cell(const Bicategory& b, const Cell& e);
Cell endo_comp_cell(const Bicategory& b, const Cell& f, const Cell& tf, const Cell& g, const Cell& tg,
                    const Cell& ex, const Cell& ey, const Cell& ez);

LawReport check_monad(const Bicategory& b, const Monad& m);
LawReport check_monad_morphism(const Bicategory& b, const MonadMorphism& f);
LawReport check_monad_cell(const Bicategory& b, const MonadCell& a);

Monad id_monad(const Bicategory& b, const Cell& x);
MonadMorphism id_monad_morphism(const Bicategory& b, const Monad& m);
MonadMorphism compose_morphisms(const Bicategory& b, const MonadMorphism& f, const MonadMorphism& g);
PsfunctorPtr id_monad_psfunctor(BicatPtr b);

// A monad in CatFin on hom(x, ob m), with the hom-category it lives on.
struct HomMonad {
  HomCategory hom;
  Monad monad;
};
HomMonad hom_monad(const Bicategory& b, const Cell& x, const Monad& m);

Monad psfunctor_on_mnd(const Pseudofunctor& f, const Monad& m);

// m2 distributing over m1: a monad in Mnd(B) on m1 whose endo is (e2, tau).
struct DistributiveLaw {
  Monad m1;
  Monad m2;
  Cell tau;  // e2;e1 ⇒ e1;e2
};

// The monad in Mnd(B) carried by d.
Monad as_mnd_monad(const Bicategory& b, const DistributiveLaw& d);
// Validates through check_monad in Mnd(B); throws BoundaryError naming the
// failing law.
DistributiveLaw make_distributive_law(BicatPtr b, Monad m1, Monad m2, Cell tau);
LawReport check_distributive_law(BicatPtr b, const DistributiveLaw& d);
DistributiveLaw distributive_law_from_mnd(const Bicategory& b, const Monad& in_mnd);
// m1 composed with the identity monad through the unitor law.
DistributiveLaw trivial_distributive_law(const Bicategory& b, const Monad& m);
Monad compose_monads(const Bicategory& b, const DistributiveLaw& d);

struct Comonad {
  Cell ob;
  Cell endo;
  Cell counit;  // endo ⇒ id1 ob
  Cell comult;  // endo ⇒ endo;endo
};
// A monad of op2(B) is a comonad of B; cells are reused unchanged.
Comonad comonad_via_op2(BicatPtr b, const Monad& m_in_op2);
Monad comonad_as_op2_monad(const Comonad& c);
LawReport check_comonad(BicatPtr b, const Comonad& c);

struct DispMonad {
  Cell ob;
  Cell endo;
  Cell unit;
  Cell mult;
};
// Throws BoundaryError if the layer is not locally propositional and
// groupoidal over ob m, or a displayed cell is not over its base cell.
Monad total_monad(BicatPtr total, const Monad& m, const DispMonad& dm);

std::optional<MonadCell> mnd_cell_inverse(const Bicategory& b, const MonadCell& a);

struct MndAdjequivReport {
  bool underlying_adjequiv = false;
  bool cell_invertible = false;
  bool is_adjequiv_in_mnd = false;
};
MndAdjequivReport mnd_adjequiv_check(BicatPtr b, const MonadMorphism& f);

// Monads in CatFin from tables.
Monad cat_monad(const FinCat& c, const Functor& t, const NatTrans& eta, const NatTrans& mu);

}  // namespace bicatmnd
