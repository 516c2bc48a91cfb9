#include "bicatmnd/adjmonadic.hpp"

namespace bicatmnd {

namespace {

template <typename Fn>
bool holds(Fn&& fn) {
  try {
    return fn();
  } catch (const BoundaryError&) {
    return false;
  }
}

}  // namespace

LawReport check_adjunction(const Bicategory& b, const Adjunction& a) {
  LawReport r;
  r.instances_checked = 2;
  const Cell &l = a.left, &rr = a.right;
  const bool typed = holds([&] {
    if (!b.is_one_cell(l) || !b.is_one_cell(rr)) return false;
    const Cell x = b.src(l), y = b.tgt(l);
    return b.src(rr) == y && b.tgt(rr) == x && b.is_two_cell(a.unit) && b.is_two_cell(a.counit) &&
           b.src2(a.unit) == b.id1(x) && b.tgt2(a.unit) == b.comp1(l, rr) && b.src2(a.counit) == b.comp1(rr, l) &&
           b.tgt2(a.counit) == b.id1(y);
  });
  if (!typed) {
    r.add("adjunction_typing", {l.describe(), rr.describe()});
    return r;
  }
  if (!holds([&] {
        return b.chain({b.linvunitor(l), b.rwhisker(a.unit, l), b.rassociator(l, rr, l), b.lwhisker(l, a.counit),
                        b.runitor(l)}) == b.id2(l);
      }))
    r.add("adjunction_triangle_left", {l.describe()});
  if (!holds([&] {
        return b.chain({b.rinvunitor(rr), b.lwhisker(rr, a.unit), b.lassociator(rr, l, rr),
                        b.rwhisker(a.counit, rr), b.lunitor(rr)}) == b.id2(rr);
      }))
    r.add("adjunction_triangle_right", {rr.describe()});
  return r;
}

Adjunction identity_adjunction(const Bicategory& b, const Cell& x) {
  const Cell i = b.id1(x);
  return Adjunction{i, i, b.linvunitor(i), b.lunitor(i)};
}

Adjunction adj_dual_op1(const Adjunction& a) { return Adjunction{a.right, a.left, a.unit, a.counit}; }
Adjunction adj_dual_op2(const Adjunction& a) { return Adjunction{a.right, a.left, a.counit, a.unit}; }

Adjunction total_adjunction(BicatPtr t, const Adjunction& a, const DispAdjunction& d) {
  const DispPtr layer = disp_of(t);
  if (!layer) throw BoundaryError("total_adjunction: not a total bicategory");
  const BicatPtr b = layer->base();
  const Cell x = b->src(a.left), y = b->tgt(a.left);
  const auto lp = local_props(*layer, {x, y});
  if (!lp.locally_propositional || !lp.locally_groupoidal)
    throw BoundaryError("total_adjunction: layer is not locally propositional and groupoidal");
  const Cell X = total::obj(x, d.ob_x), Y = total::obj(y, d.ob_y);
  if (!t->is_object(X) || !t->is_object(Y)) throw BoundaryError("total_adjunction: displayed object missing");
  const Cell L = total::one(a.left, d.left, d.ob_x, d.ob_y);
  const Cell R = total::one(a.right, d.right, d.ob_y, d.ob_x);
  if (!t->is_one_cell(L)) throw BoundaryError("total_adjunction: no displayed 1-cell over " + a.left.describe());
  if (!t->is_one_cell(R)) throw BoundaryError("total_adjunction: no displayed 1-cell over " + a.right.describe());
  const Cell U = total::two(a.unit, d.unit, t->id1(X), t->comp1(L, R));
  const Cell C = total::two(a.counit, d.counit, t->comp1(R, L), t->id1(Y));
  if (!t->is_two_cell(U)) throw BoundaryError("total_adjunction: displayed unit missing");
  if (!t->is_two_cell(C)) throw BoundaryError("total_adjunction: displayed counit missing");
  return Adjunction{L, R, U, C};
}

Monad adjunction_to_monad(const Bicategory& b, const Adjunction& a) {
  const Cell &l = a.left, &r = a.right;
  const Cell lr = b.comp1(l, r);
  const Cell mu = b.chain({b.rassociator(l, r, lr), b.lwhisker(l, b.lassociator(r, l, r)),
                           b.lwhisker(l, b.rwhisker(a.counit, r)), b.lwhisker(l, b.lunitor(r))});
  return Monad{b.src(l), lr, a.unit, mu};
}

AdjunctionFromMonad monad_to_adjunction(BicatPtr b, const Monad& m, const EMCone& e) {
  const Cell& x = m.ob;
  const Cell& r = e.mor;
  const MonadMorphism free{id_monad(*b, x), m, m.endo, b->vcomp(m.mult, b->linvunitor(m.endo))};
  const auto meds = em_mediators(b, e, free);
  if (meds.empty()) throw BoundaryError("monad_to_adjunction: the free cone has no mediator");
  const Cell& l = meds.front().mediator;
  const Cell& gamma = meds.front().iso;  // l;r ⇒ e
  const auto ginv = is_invertible_2cell(*b, gamma);
  if (!ginv) throw BoundaryError("monad_to_adjunction: mediating cell is not invertible");
  const Cell unit = b->vcomp(m.unit, *ginv);

  const Cell alpha = b->chain({b->rassociator(r, l, r), b->lwhisker(r, gamma), e.cell});
  const auto eps = em_factorizations(*b, e, b->comp1(r, l), b->id1(e.ob), alpha);
  if (eps.size() != 1) throw BoundaryError("monad_to_adjunction: counit does not factor uniquely");

  AdjunctionFromMonad out{Adjunction{l, r, unit, eps.front()}, {}, gamma};
  const auto rep = check_adjunction(*b, out.adjunction);
  if (!rep.empty()) throw BoundaryError("monad_to_adjunction: " + rep.violations.front().law);

  const Cell lr = b->comp1(l, r);
  const Cell theta = b->chain({b->lunitor(m.endo), *ginv, b->rinvunitor(lr)});
  out.comparison = MonadMorphism{adjunction_to_monad(*b, out.adjunction), m, b->id1(x), theta};
  return out;
}

HomAdjunction hom_adjunction(const Bicategory& b, const Adjunction& a, const Cell& w) {
  const Cell &l = a.left, &r = a.right;
  HomAdjunction h{hom_category(b, w, b.src(l)), hom_category(b, w, b.tgt(l)), {}};
  const FinCat &cx = h.hom_x.category, &cy = h.hom_y.category;
  auto post = [&](const HomCategory& from, const HomCategory& to, const Cell& f) {
    Functor p{from.category, to.category, {}, {}};
    for (const auto& g : from.objects) p.omap.push_back(to.object_of(b.comp1(g, f)));
    for (const auto& t : from.morphisms) p.mmap.push_back(to.morphism_of(b.rwhisker(t, f)));
    return p;
  };
  const Functor L = post(h.hom_x, h.hom_y, l), R = post(h.hom_y, h.hom_x, r);
  NatTrans unit{Functor::identity(cx), compose(L, R), {}};
  for (const auto& f : h.hom_x.objects)
    unit.components.push_back(
        h.hom_x.morphism_of(b.chain({b.rinvunitor(f), b.lwhisker(f, a.unit), b.lassociator(f, l, r)})));
  NatTrans counit{compose(R, L), Functor::identity(cy), {}};
  for (const auto& g : h.hom_y.objects)
    counit.components.push_back(
        h.hom_y.morphism_of(b.chain({b.rassociator(g, r, l), b.lwhisker(g, a.counit), b.runitor(g)})));
  h.adjunction = Adjunction{Cell::functor(L), Cell::functor(R), Cell::transformation(unit), Cell::transformation(counit)};
  return h;
}

Comparison comparison(BicatPtr b, const Adjunction& a, const EMCone& e) {
  const Cell &l = a.left, &r = a.right;
  const Cell y = b->tgt(l);
  const Monad m = adjunction_to_monad(*b, a);
  Comparison c;
  c.cone = MonadMorphism{id_monad(*b, y), m, r, b->vcomp(b->lassociator(r, l, r), b->rwhisker(a.counit, r))};
  const auto meds = em_mediators(b, e, c.cone);
  if (meds.empty()) throw BoundaryError("comparison: the cone of the adjunction has no mediator");
  c.mediator = meds.front().mediator;
  c.iso = meds.front().iso;
  return c;
}

MonadicReport is_monadic(BicatPtr b, const Adjunction& a, const EMCone& e) {
  MonadicReport r;
  r.comparison = comparison(b, a, e);
  r.monadic = find_adjoint_equivalence(*b, r.comparison.mediator).has_value();
  return r;
}

Comparison comparison_cat(const Adjunction& a, const EMResult& em) {
  auto b = cat_fin_bicat();
  const Functor& r = a.right.as_functor();
  const NatTrans& eps = a.counit.as_transformation();
  const FinCat& y = r.source;
  Comparison c;
  c.cone = MonadMorphism{id_monad(*b, Cell::category(y)), adjunction_to_monad(*b, a), a.right,
                         b->vcomp(b->lassociator(a.right, a.left, a.right), b->rwhisker(a.counit, a.right))};
  // y ↦ (r y, r(ε_y)), g ↦ r(g)
  Functor k{y, em.category, {}, {}};
  for (int o = 0; o < y.object_count(); ++o) {
    auto alg = em.find_object(r.obj(o), r.mor(eps.at(o)));
    if (!alg) throw BoundaryError("comparison_cat: r(ε) is not an algebra structure");
    k.omap.push_back(*alg);
  }
  for (int g = 0; g < y.morphism_count(); ++g) {
    const auto& mg = y.morphism(g);
    auto h = em.find_morphism(k.obj(mg.source), r.mor(g), k.obj(mg.target));
    if (!h) throw BoundaryError("comparison_cat: r(g) is not an algebra morphism");
    k.mmap.push_back(*h);
  }
  c.mediator = Cell::functor(k);
  c.iso = b->id2(a.right);
  const MonadCell check{em_functor_on(*b, em.cone, c.mediator), c.cone, c.iso};
  if (!check_monad_cell(*b, check).empty()) throw BoundaryError("comparison_cat: not a mediator of the cone");
  return c;
}

MonadicReport is_monadic_cat(const Adjunction& a) {
  auto b = cat_fin_bicat();
  const auto em = em_category(adjunction_to_monad(*b, a));
  MonadicReport r;
  r.comparison = comparison_cat(a, em);
  r.monadic = functor_props(r.comparison.mediator.as_functor()).is_equivalence;
  return r;
}

ReprMonadicReport is_representably_monadic(const Bicategory& b, const Adjunction& a,
                                           const std::vector<Cell>& sample_objects) {
  ReprMonadicReport r;
  r.representably_monadic = true;
  for (const auto& w : sample_objects) {
    const auto h = hom_adjunction(b, a, w);
    const bool ok = is_monadic_cat(h.adjunction).monadic;
    r.samples.push_back({cell_label(w), ok});
    r.representably_monadic = r.representably_monadic && ok;
  }
  return r;
}

ReprAdjequivReport repr_adjequiv_check(const Bicategory& b, const Cell& f, const std::vector<Cell>& sample_objects) {
  ReprAdjequivReport r;
  r.direct = find_adjoint_equivalence(b, f).has_value();
  r.representable = true;
  for (const auto& w : sample_objects) {
    const bool ok = functor_props(postcomp_functor(b, f, w).functor).is_equivalence;
    r.samples.push_back({cell_label(w), ok});
    r.representable = r.representable && ok;
  }
  r.agree = r.direct == r.representable;
  return r;
}

}  // namespace bicatmnd
