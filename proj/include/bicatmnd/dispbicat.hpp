#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "bicatmnd/bicat.hpp"

namespace bicatmnd {

// Cells of the total bicategory of a displayed bicategory D over B:
//   object  (x, xd)
//   1-cell  (f, fd, xd, yd)          f : x → y
//   2-cell  (a, ad, F, G)            a : f ⇒ g, F and G total 1-cells
namespace total {
inline Cell obj(const Cell& x, const Cell& xd) { return Cell::tuple({x, xd}); }
inline Cell one(const Cell& f, const Cell& fd, const Cell& xd, const Cell& yd) { return Cell::tuple({f, fd, xd, yd}); }
inline Cell two(const Cell& a, const Cell& ad, const Cell& F, const Cell& G) { return Cell::tuple({a, ad, F, G}); }
inline const Cell& base(const Cell& c) { return c[0]; }
inline const Cell& disp(const Cell& c) { return c[1]; }
}  // namespace total

// Displayed operations receive cells of the total bicategory, so each
// layer can read both the base cell and the displayed data it sits over.
class DispBicategory {
 public:
  virtual ~DispBicategory() = default;
  virtual std::string name() const = 0;
  virtual BicatPtr base() const = 0;

  virtual Cell id1(const Cell& X) const = 0;
  virtual Cell comp1(const Cell& F, const Cell& G) const = 0;
  virtual Cell id2(const Cell& F) const = 0;
  virtual Cell vcomp(const Cell& A, const Cell& B) const = 0;
  virtual Cell lwhisker(const Cell& F, const Cell& A) const = 0;
  virtual Cell rwhisker(const Cell& A, const Cell& G) const = 0;
  virtual Cell lunitor(const Cell& F) const = 0;
  virtual Cell linvunitor(const Cell& F) const = 0;
  virtual Cell runitor(const Cell& F) const = 0;
  virtual Cell rinvunitor(const Cell& F) const = 0;
  virtual Cell lassociator(const Cell& F, const Cell& G, const Cell& H) const = 0;
  virtual Cell rassociator(const Cell& F, const Cell& G, const Cell& H) const = 0;

  virtual std::vector<Cell> objects_over(const Cell& x) const = 0;
  // X, Y total objects over src f, tgt f.
  virtual std::vector<Cell> one_cells_over(const Cell& f, const Cell& X, const Cell& Y) const = 0;
  // F, G total 1-cells over src2 a, tgt2 a.
  virtual std::vector<Cell> two_cells_over(const Cell& a, const Cell& F, const Cell& G) const = 0;

  virtual bool is_object_over(const Cell& x, const Cell& xd) const;
  virtual bool is_one_over(const Cell& f, const Cell& X, const Cell& Y, const Cell& fd) const;
  virtual bool is_two_over(const Cell& a, const Cell& F, const Cell& G, const Cell& ad) const;
};

using DispPtr = std::shared_ptr<const DispBicategory>;

// Total bicategory and its projection pseudofunctor.
BicatPtr total_bicat(DispPtr d);
PsfunctorPtr projection(BicatPtr total);
// The displayed bicategory behind a total bicategory, or null.
DispPtr disp_of(const BicatPtr& total);

// A layer whose displayed 2-cells are proof tokens: over each base 2-cell
// there is the single token tt when `two_holds` accepts it, else nothing.
// Without `two_holds` this is the cell-unit layer.
struct PropLayerData {
  std::function<std::vector<Cell>(const Cell& x)> objects_over;
  std::function<std::vector<Cell>(const Cell& f, const Cell& X, const Cell& Y)> one_cells_over;
  std::function<Cell(const Cell& X)> id1;
  std::function<Cell(const Cell& F, const Cell& G)> comp1;
  std::function<bool(const Cell& a, const Cell& F, const Cell& G)> two_holds;
  // Optional override of the displayed 2-cell enumeration (synthetic layers).
  std::function<std::vector<Cell>(const Cell& a, const Cell& F, const Cell& G)> two_cells_over;
  // Optional fast membership tests; default is membership in the enumeration.
  std::function<bool(const Cell& x, const Cell& xd)> is_object_over;
  std::function<bool(const Cell& f, const Cell& X, const Cell& Y, const Cell& fd)> is_one_over;
};

DispPtr prop_layer(BicatPtr base, std::string name, PropLayerData data);
DispPtr cell_unit_disp(BicatPtr base, std::string name, PropLayerData data);
DispPtr fullsub_disp(BicatPtr base, std::string name, std::function<bool(const Cell& x)> pred);
DispPtr prod_disp(DispPtr d1, DispPtr d2);
// d2 must be displayed over total_bicat(d1) (the same instance).
DispPtr sigma_disp(DispPtr d1, DispPtr d2);

// Views used by prod/sigma on their pair-valued displayed data.
namespace pairs {
Cell first_obj(const Cell& X);
Cell first_one(const Cell& F);
Cell first_two(const Cell& A);
Cell second_obj_prod(const Cell& X);
Cell second_one_prod(const Cell& F);
Cell second_two_prod(const Cell& A);
Cell second_obj_sigma(const Cell& X);
Cell second_one_sigma(const Cell& F);
Cell second_two_sigma(const Cell& A);
}  // namespace pairs

struct LocalProps {
  bool locally_propositional = true;
  bool locally_groupoidal = true;
  std::size_t cells_checked = 0;
};
// Decided over total cells lying over the sampled base objects.
LocalProps local_props(const DispBicategory& d, const std::vector<Cell>& base_objects);

struct Section {
  DispPtr disp;
  std::function<Cell(const Cell& x)> ob;
  std::function<Cell(const Cell& f)> one;
  std::function<Cell(const Cell& a)> two;
  std::function<Cell(const Cell& x)> sid;  // over id2(id1 x), from D.id1 to one(id1 x)
  std::function<Cell(const Cell& x)> sid_inv;
  std::function<Cell(const Cell& f, const Cell& g)> scomp;  // over id2(f;g)
  std::function<Cell(const Cell& f, const Cell& g)> scomp_inv;
};

PsfunctorPtr section_to_psfunctor(Section s);

// Objects over C are terminal objects (named by object identifier); 1-cells
// over F exist when F sends the chosen terminal object to a terminal object.
DispPtr terminal_disp_layer(BicatPtr cat_fin);

}  // namespace bicatmnd
