#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bicatmnd/cell.hpp"
#include "bicatmnd/fincat.hpp"

namespace bicatmnd {

// Conventions: comp1(f, g) is "f then g"; vcomp(a, b) is "a then b".
//   lwhisker(f, a) : f;g1 ⇒ f;g2      for a : g1 ⇒ g2
//   rwhisker(a, g) : f1;g ⇒ f2;g      for a : f1 ⇒ f2
//   lunitor(f)     : id;f ⇒ f         runitor(f) : f;id ⇒ f
//   lassociator    : f;(g;h) ⇒ (f;g);h, rassociator its inverse
// 2-cells are compared by Cell equality.
class Bicategory {
 public:
  virtual ~Bicategory() = default;

  virtual std::string name() const = 0;

  virtual Cell src(const Cell& f) const = 0;
  virtual Cell tgt(const Cell& f) const = 0;
  virtual Cell src2(const Cell& a) const = 0;
  virtual Cell tgt2(const Cell& a) const = 0;

  virtual Cell id1(const Cell& x) const = 0;
  virtual Cell comp1(const Cell& f, const Cell& g) const = 0;
  virtual Cell id2(const Cell& f) const = 0;
  virtual Cell vcomp(const Cell& a, const Cell& b) const = 0;
  virtual Cell lwhisker(const Cell& f, const Cell& a) const = 0;
  virtual Cell rwhisker(const Cell& a, const Cell& g) const = 0;

  virtual Cell lunitor(const Cell& f) const = 0;
  virtual Cell linvunitor(const Cell& f) const = 0;
  virtual Cell runitor(const Cell& f) const = 0;
  virtual Cell rinvunitor(const Cell& f) const = 0;
  virtual Cell lassociator(const Cell& f, const Cell& g, const Cell& h) const = 0;
  virtual Cell rassociator(const Cell& f, const Cell& g, const Cell& h) const = 0;

  // Finite enumeration of homs. May throw ResourceBoundError.
  virtual std::vector<Cell> one_cells(const Cell& x, const Cell& y) const = 0;
  virtual std::vector<Cell> two_cells(const Cell& f, const Cell& g) const = 0;

  // Membership tests used to reject ill-formed cells (e.g. a displayed
  // proof token whose equation does not hold).
  virtual bool is_object(const Cell& x) const = 0;
  virtual bool is_one_cell(const Cell& f) const = 0;
  virtual bool is_two_cell(const Cell& a) const = 0;

  virtual double enumeration_limit() const { return kDefaultEnumerationLimit; }

  // vcomp of a chain, left to right.
  Cell chain(std::initializer_list<Cell> cells) const;
};

using BicatPtr = std::shared_ptr<const Bicategory>;

BicatPtr cat_fin_bicat(double limit = kDefaultEnumerationLimit);
BicatPtr op1(BicatPtr b);
BicatPtr op2(BicatPtr b);

// A bicategory that forwards to `base` except for the operations overridden.
struct BicatOverrides {
  std::function<Cell(const Cell&)> lunitor;
  std::function<Cell(const Cell&)> linvunitor;
  std::function<Cell(const Cell&)> runitor;
  std::function<Cell(const Cell&, const Cell&, const Cell&)> lassociator;
};
BicatPtr override_bicat(BicatPtr base, std::string name, BicatOverrides o);

// The hom-category hom(x, y) as a FinCat, with the cells behind each index.
struct HomCategory {
  FinCat category;
  std::vector<Cell> objects;
  std::vector<Cell> morphisms;
  std::unordered_map<Cell, int, CellHash> object_index;
  std::unordered_map<Cell, int, CellHash> morphism_index;

  int object_of(const Cell& f) const;
  int morphism_of(const Cell& a) const;
};

HomCategory hom_category(const Bicategory& b, const Cell& x, const Cell& y);

// g ↦ g;f and a ↦ a ⊳ f, hom(w, x) → hom(w, y) for f : x → y.
struct PostcompFunctor {
  HomCategory source;
  HomCategory target;
  Functor functor;
};
PostcompFunctor postcomp_functor(const Bicategory& b, const Cell& f, const Cell& w);

std::optional<Cell> is_invertible_2cell(const Bicategory& b, const Cell& a);
// All inverses, for uniqueness checks.
std::vector<Cell> inverses_2cell(const Bicategory& b, const Cell& a);

struct AdjointEquivalence {
  Cell left;
  Cell right;
  Cell unit;    // id ⇒ left;right, invertible
  Cell counit;  // right;left ⇒ id, invertible
};
// First lexicographic adjoint-equivalence structure on f, if any.
std::optional<AdjointEquivalence> find_adjoint_equivalence(const Bicategory& b, const Cell& f);

// Sample for law checking. Every 1-cell between sample objects is
// enumerated unless enumerate_homs is false, and every 2-cell between
// parallel sampled 1-cells likewise; explicit cells are added on top.
struct Sample {
  std::vector<Cell> objects;
  std::vector<Cell> one_cells;
  std::vector<Cell> two_cells;
  bool enumerate_homs = true;
  std::size_t max_instances = 2'000'000;
};

LawReport check_bicat_laws(const Bicategory& b, const Sample& sample);

class Pseudofunctor {
 public:
  virtual ~Pseudofunctor() = default;
  virtual BicatPtr source() const = 0;
  virtual BicatPtr target() const = 0;
  virtual Cell on_object(const Cell& x) const = 0;
  virtual Cell on_one(const Cell& f) const = 0;
  virtual Cell on_two(const Cell& a) const = 0;
  // id1(F x) ⇒ F(id1 x)
  virtual Cell identitor(const Cell& x) const = 0;
  virtual Cell identitor_inv(const Cell& x) const = 0;
  // F f ; F g ⇒ F(f;g)
  virtual Cell compositor(const Cell& f, const Cell& g) const = 0;
  virtual Cell compositor_inv(const Cell& f, const Cell& g) const = 0;
};

using PsfunctorPtr = std::shared_ptr<const Pseudofunctor>;

PsfunctorPtr identity_psfunctor(BicatPtr b);

struct PsfunctorOverrides {
  std::function<Cell(const Cell&)> identitor;
  std::function<Cell(const Cell&)> identitor_inv;
};
PsfunctorPtr override_psfunctor(PsfunctorPtr base, PsfunctorOverrides o);

LawReport check_pseudofunctor(const Pseudofunctor& f, const Sample& sample);

}  // namespace bicatmnd
