#include "bicatmnd/monad.hpp"

namespace bicatmnd {

namespace {

// a : s ⇒ t in b; false on malformed cells.
bool has_two(const Bicategory& b, const Cell& a, const Cell& s, const Cell& t) {
  try {
    return b.is_two_cell(a) && b.src2(a) == s && b.tgt2(a) == t;
  } catch (const BoundaryError&) {
    return false;
  }
}

bool has_one(const Bicategory& b, const Cell& f, const Cell& x, const Cell& y) {
  try {
    return b.is_one_cell(f) && b.src(f) == x && b.tgt(f) == y;
  } catch (const BoundaryError&) {
    return false;
  }
}

template <typename Fn>
bool holds(Fn&& fn) {
  try {
    return fn();
  } catch (const BoundaryError&) {
    return false;
  }
}

// Endo 2-cell square for τ : f ⇒ g.
bool endo_square(const Bicategory& b, const Cell& tau, const Cell& tf, const Cell& tg, const Cell& ex, const Cell& ey) {
  return holds([&] { return b.vcomp(b.rwhisker(tau, ey), tg) == b.vcomp(tf, b.lwhisker(ex, tau)); });
}

bool unit_condition(const Bicategory& b, const Cell& f, const Cell& tf, const Cell& etax, const Cell& etay) {
  return holds([&] {
    return b.chain({b.rinvunitor(f), b.lwhisker(f, etay), tf}) == b.vcomp(b.linvunitor(f), b.rwhisker(etax, f));
  });
}

bool mult_condition(const Bicategory& b, const Cell& f, const Cell& tf, const Cell& ex, const Cell& ey, const Cell& mux,
                    const Cell& muy) {
  return holds([&] {
    const Cell lhs = b.vcomp(b.lwhisker(f, muy), tf);
    const Cell rhs = b.chain({b.lassociator(f, ey, ey), b.rwhisker(tf, ey), b.rassociator(ex, f, ey), b.lwhisker(ex, tf),
                              b.lassociator(ex, ex, f), b.rwhisker(mux, f)});
    return lhs == rhs;
  });
}

const Cell& tok3() {
  static const Cell c = Cell::tuple({Cell::tuple({tt(), Cell::tuple({tt(), tt()})}), tt()});
  return c;
}

Cell mor_disp(const Cell& theta) { return Cell::tuple({Cell::tuple({theta, Cell::tuple({tt(), tt()})}), tt()}); }
Cell ob_disp(const Monad& m) {
  return Cell::tuple({Cell::tuple({m.endo, Cell::tuple({m.unit, m.mult})}), tt()});
}

}  // namespace

// ---------------------------------------------------------------------------
// Equations

LawReport monad_laws(const Bicategory& b, const Cell& e, const Cell& eta, const Cell& mu) {
  LawReport r;
  auto law = [&](const char* name, auto&& fn) {
    ++r.instances_checked;
    if (!holds(fn)) r.add(name, {e.describe()});
  };
  law("monad_unit_right", [&] { return b.chain({b.rinvunitor(e), b.lwhisker(e, eta), mu}) == b.id2(e); });
  law("monad_unit_left", [&] { return b.chain({b.linvunitor(e), b.rwhisker(eta, e), mu}) == b.id2(e); });
  law("monad_assoc", [&] {
    return b.vcomp(b.lwhisker(e, mu), mu) == b.chain({b.lassociator(e, e, e), b.rwhisker(mu, e), mu});
  });
  return r;
}

Cell endo_id_cell(const Bicategory& b, const Cell& e) { return b.vcomp(b.lunitor(e), b.rinvunitor(e)); }

Cell endo_comp_cell(const Bicategory& b, const Cell& f, const Cell& tf, const Cell& g, const Cell& tg, const Cell& ex,
                    const Cell& ey, const Cell& ez) {
  return b.chain({b.rassociator(f, g, ez), b.lwhisker(f, tg), b.lassociator(f, ey, g), b.rwhisker(tf, g),
                  b.rassociator(ex, f, g)});
}

// ---------------------------------------------------------------------------
// Layers

MndLayers mnd_layers(BicatPtr b) {
  MndLayers L;

  PropLayerData endo;
  endo.objects_over = [b](const Cell& x) { return b->one_cells(x, x); };
  endo.is_object_over = [b](const Cell& x, const Cell& e) { return has_one(*b, e, x, x); };
  endo.one_cells_over = [b](const Cell& f, const Cell& X, const Cell& Y) {
    return b->two_cells(b->comp1(f, Y[1]), b->comp1(X[1], f));
  };
  endo.is_one_over = [b](const Cell& f, const Cell& X, const Cell& Y, const Cell& t) {
    return holds([&] { return has_two(*b, t, b->comp1(f, Y[1]), b->comp1(X[1], f)); });
  };
  endo.id1 = [b](const Cell& X) { return endo_id_cell(*b, X[1]); };
  endo.comp1 = [b](const Cell& F, const Cell& G) {
    return endo_comp_cell(*b, F[0], F[1], G[0], G[1], F[2], F[3], G[3]);
  };
  endo.two_holds = [b](const Cell& a, const Cell& F, const Cell& G) {
    return endo_square(*b, a, F[1], G[1], F[2], F[3]);
  };
  L.endo = prop_layer(b, "endo", endo);
  const BicatPtr te = total_bicat(L.endo);

  // Over total(Endo): X = (x, e) and total 1-cells F = (f, θ, e_x, e_y).
  PropLayerData unit;
  unit.objects_over = [b](const Cell& X) { return b->two_cells(b->id1(X[0]), X[1]); };
  unit.is_object_over = [b](const Cell& X, const Cell& eta) { return has_two(*b, eta, b->id1(X[0]), X[1]); };
  auto unit_ok = [b](const Cell& F, const Cell& X, const Cell& Y) {
    return unit_condition(*b, F[0], F[1], X[1], Y[1]);
  };
  unit.one_cells_over = [unit_ok](const Cell& F, const Cell& X, const Cell& Y) {
    return unit_ok(F, X, Y) ? std::vector<Cell>{tt()} : std::vector<Cell>{};
  };
  unit.is_one_over = [unit_ok](const Cell& F, const Cell& X, const Cell& Y, const Cell& fd) {
    return fd == tt() && unit_ok(F, X, Y);
  };
  L.unit = cell_unit_disp(te, "unit", unit);

  PropLayerData mult;
  mult.objects_over = [b](const Cell& X) { return b->two_cells(b->comp1(X[1], X[1]), X[1]); };
  mult.is_object_over = [b](const Cell& X, const Cell& mu) {
    return holds([&] { return has_two(*b, mu, b->comp1(X[1], X[1]), X[1]); });
  };
  auto mult_ok = [b](const Cell& F, const Cell& X, const Cell& Y) {
    return mult_condition(*b, F[0], F[1], X[0][1], Y[0][1], X[1], Y[1]);
  };
  mult.one_cells_over = [mult_ok](const Cell& F, const Cell& X, const Cell& Y) {
    return mult_ok(F, X, Y) ? std::vector<Cell>{tt()} : std::vector<Cell>{};
  };
  mult.is_one_over = [mult_ok](const Cell& F, const Cell& X, const Cell& Y, const Cell& fd) {
    return fd == tt() && mult_ok(F, X, Y);
  };
  L.mult = cell_unit_disp(te, "mult", mult);

  L.data = sigma_disp(L.endo, prod_disp(L.unit, L.mult));
  const BicatPtr td = total_bicat(L.data);
  // X = (x, (e, (η, μ)))
  L.is_mnd = fullsub_disp(td, "is_mnd", [b](const Cell& X) {
    const Cell& d = X[1];
    return monad_laws(*b, d[0], d[1][0], d[1][1]).empty();
  });
  L.mnd = sigma_disp(L.data, L.is_mnd);
  L.total = total_bicat(L.mnd);
  return L;
}

BicatPtr mnd_bicat(BicatPtr b) { return mnd_layers(std::move(b)).total; }

BicatPtr mnd_base(const BicatPtr& mnd) {
  auto d = disp_of(mnd);
  return d ? d->base() : nullptr;
}

// ---------------------------------------------------------------------------
// Encoding

Cell encode(const Monad& m) { return total::obj(m.ob, ob_disp(m)); }

Cell encode(const MonadMorphism& f) {
  return total::one(f.mor, mor_disp(f.cell), ob_disp(f.source), ob_disp(f.target));
}

Cell encode(const MonadCell& a) { return total::two(a.cell, tok3(), encode(a.source), encode(a.target)); }

Monad decode_monad(const Cell& X) {
  const Cell& d = X[1][0];
  return Monad{X[0], d[0], d[1][0], d[1][1]};
}

MonadMorphism decode_morphism(const Bicategory& b, const Cell& F) {
  return MonadMorphism{decode_monad(total::obj(b.src(F[0]), F[2])), decode_monad(total::obj(b.tgt(F[0]), F[3])), F[0],
                       F[1][0][0]};
}

MonadCell decode_cell(const Bicategory& b, const Cell& A) {
  return MonadCell{decode_morphism(b, A[2]), decode_morphism(b, A[3]), A[0]};
}

// ---------------------------------------------------------------------------
// Checks

LawReport check_monad(const Bicategory& b, const Monad& m) {
  LawReport r;
  const bool typed = holds([&] {
    return b.is_object(m.ob) && has_one(b, m.endo, m.ob, m.ob) && has_two(b, m.unit, b.id1(m.ob), m.endo) &&
           has_two(b, m.mult, b.comp1(m.endo, m.endo), m.endo);
  });
  ++r.instances_checked;
  if (!typed) {
    r.add("monad_typing", {m.endo.describe()});
    return r;
  }
  r.merge(monad_laws(b, m.endo, m.unit, m.mult));
  r.instances_checked += 3;
  return r;
}

LawReport check_monad_morphism(const Bicategory& b, const MonadMorphism& f) {
  LawReport r;
  const Monad &m1 = f.source, &m2 = f.target;
  ++r.instances_checked;
  const bool typed = holds([&] {
    return has_one(b, f.mor, m1.ob, m2.ob) && has_two(b, f.cell, b.comp1(f.mor, m2.endo), b.comp1(m1.endo, f.mor));
  });
  if (!typed) {
    r.add("monad_morphism_typing", {f.mor.describe()});
    return r;
  }
  r.instances_checked += 2;
  if (!unit_condition(b, f.mor, f.cell, m1.unit, m2.unit)) r.add("monad_morphism_unit", {f.mor.describe()});
  if (!mult_condition(b, f.mor, f.cell, m1.endo, m2.endo, m1.mult, m2.mult))
    r.add("monad_morphism_mult", {f.mor.describe()});
  return r;
}

LawReport check_monad_cell(const Bicategory& b, const MonadCell& a) {
  LawReport r;
  r.instances_checked = 1;
  const auto &f = a.source, &g = a.target;
  if (!has_two(b, a.cell, f.mor, g.mor)) {
    r.add("monad_cell_typing", {a.cell.describe()});
    return r;
  }
  if (!endo_square(b, a.cell, f.cell, g.cell, f.source.endo, f.target.endo))
    r.add("monad_cell_square", {a.cell.describe()});
  return r;
}

// ---------------------------------------------------------------------------
// Constructions

Monad id_monad(const Bicategory& b, const Cell& x) {
  const Cell i = b.id1(x);
  return Monad{x, i, b.id2(i), b.lunitor(i)};
}

MonadMorphism id_monad_morphism(const Bicategory& b, const Monad& m) {
  return MonadMorphism{m, m, b.id1(m.ob), endo_id_cell(b, m.endo)};
}

MonadMorphism compose_morphisms(const Bicategory& b, const MonadMorphism& f, const MonadMorphism& g) {
  return MonadMorphism{f.source, g.target, b.comp1(f.mor, g.mor),
                       endo_comp_cell(b, f.mor, f.cell, g.mor, g.cell, f.source.endo, f.target.endo, g.target.endo)};
}

PsfunctorPtr id_monad_psfunctor(BicatPtr b) {
  auto L = mnd_layers(b);
  Section s;
  s.disp = L.mnd;
  s.ob = [b](const Cell& x) { return ob_disp(id_monad(*b, x)); };
  s.one = [b](const Cell& f) { return mor_disp(b->vcomp(b->runitor(f), b->linvunitor(f))); };
  s.two = [](const Cell&) { return tok3(); };
  s.sid = s.sid_inv = [](const Cell&) { return tok3(); };
  s.scomp = s.scomp_inv = [](const Cell&, const Cell&) { return tok3(); };
  return section_to_psfunctor(std::move(s));
}

HomMonad hom_monad(const Bicategory& b, const Cell& x, const Monad& m) {
  auto pf = postcomp_functor(b, m.endo, x);
  const HomCategory& h = pf.source;
  const FinCat& c = h.category;
  const Functor& t = pf.functor;
  std::vector<int> unit(h.objects.size()), mult(h.objects.size());
  for (std::size_t i = 0; i < h.objects.size(); ++i) {
    const Cell& f = h.objects[i];
    unit[i] = h.morphism_of(b.vcomp(b.rinvunitor(f), b.lwhisker(f, m.unit)));
    mult[i] = h.morphism_of(b.vcomp(b.rassociator(f, m.endo, m.endo), b.lwhisker(f, m.mult)));
  }
  NatTrans eta{Functor::identity(c), t, unit};
  NatTrans mu{compose(t, t), t, mult};
  return HomMonad{h, cat_monad(c, t, eta, mu)};
}

Monad psfunctor_on_mnd(const Pseudofunctor& F, const Monad& m) {
  const BicatPtr c = F.target();
  return Monad{F.on_object(m.ob), F.on_one(m.endo), c->vcomp(F.identitor(m.ob), F.on_two(m.unit)),
               c->vcomp(F.compositor(m.endo, m.endo), F.on_two(m.mult))};
}

// ---------------------------------------------------------------------------
// Distributive laws

Monad as_mnd_monad(const Bicategory& b, const DistributiveLaw& d) {
  const MonadMorphism e{d.m1, d.m1, d.m2.endo, d.tau};
  return Monad{encode(d.m1), encode(e), encode(MonadCell{id_monad_morphism(b, d.m1), e, d.m2.unit}),
               encode(MonadCell{compose_morphisms(b, e, e), e, d.m2.mult})};
}

LawReport check_distributive_law(BicatPtr bp, const DistributiveLaw& d) {
  const Bicategory& b = *bp;
  LawReport r;
  const Cell &e1 = d.m1.endo, &e2 = d.m2.endo, &tau = d.tau;
  const Cell &eta1 = d.m1.unit, &mu1 = d.m1.mult, &eta2 = d.m2.unit, &mu2 = d.m2.mult;
  ++r.instances_checked;
  if (d.m1.ob != d.m2.ob || !has_two(b, tau, b.comp1(e2, e1), b.comp1(e1, e2))) {
    r.add("distributive_law_typing", {tau.describe()});
    return r;
  }
  auto law = [&](const char* name, auto&& fn) {
    ++r.instances_checked;
    if (!holds(fn)) r.add(name, {tau.describe()});
  };
  law("distributive_law_unit1", [&] {
    return b.chain({b.rinvunitor(e2), b.lwhisker(e2, eta1), tau}) == b.vcomp(b.linvunitor(e2), b.rwhisker(eta1, e2));
  });
  law("distributive_law_mult1", [&] {
    return b.vcomp(b.lwhisker(e2, mu1), tau) ==
           b.chain({b.lassociator(e2, e1, e1), b.rwhisker(tau, e1), b.rassociator(e1, e2, e1), b.lwhisker(e1, tau),
                    b.lassociator(e1, e1, e2), b.rwhisker(mu1, e2)});
  });
  law("distributive_law_unit2", [&] {
    return b.vcomp(b.rwhisker(eta2, e1), tau) == b.chain({b.lunitor(e1), b.rinvunitor(e1), b.lwhisker(e1, eta2)});
  });
  law("distributive_law_mult2", [&] {
    return b.vcomp(b.rwhisker(mu2, e1), tau) ==
           b.chain({b.rassociator(e2, e2, e1), b.lwhisker(e2, tau), b.lassociator(e2, e1, e2), b.rwhisker(tau, e2),
                    b.rassociator(e1, e2, e2), b.lwhisker(e1, mu2)});
  });
  return r;
}

DistributiveLaw make_distributive_law(BicatPtr b, Monad m1, Monad m2, Cell tau) {
  DistributiveLaw d{std::move(m1), std::move(m2), std::move(tau)};
  auto classical = check_distributive_law(b, d);
  if (!classical.empty()) throw BoundaryError("not a distributive law: " + classical.violations[0].law);
  auto inner = check_monad(*b, d.m2);
  if (!inner.empty()) throw BoundaryError("not a distributive law: " + inner.violations[0].law);
  auto in_mnd = check_monad(*mnd_bicat(b), as_mnd_monad(*b, d));
  if (!in_mnd.empty()) throw BoundaryError("not a monad in Mnd: " + in_mnd.violations[0].law);
  return d;
}

DistributiveLaw distributive_law_from_mnd(const Bicategory& b, const Monad& M) {
  const Monad m1 = decode_monad(M.ob);
  const MonadMorphism e = decode_morphism(b, M.endo);
  return DistributiveLaw{m1, Monad{m1.ob, e.mor, decode_cell(b, M.unit).cell, decode_cell(b, M.mult).cell}, e.cell};
}

DistributiveLaw trivial_distributive_law(const Bicategory& b, const Monad& m) {
  return DistributiveLaw{m, id_monad(b, m.ob), endo_id_cell(b, m.endo)};
}

Monad compose_monads(const Bicategory& b, const DistributiveLaw& d) {
  const Cell &x = d.m1.ob, &e1 = d.m1.endo, &e2 = d.m2.endo;
  const Cell i = b.id1(x), e12 = b.comp1(e1, e2);
  const Cell unit = b.chain({b.linvunitor(i), b.rwhisker(d.m1.unit, i), b.lwhisker(e1, d.m2.unit)});
  const Cell mult =
      b.chain({b.rassociator(e1, e2, e12), b.lwhisker(e1, b.lassociator(e2, e1, e2)),
               b.lwhisker(e1, b.rwhisker(d.tau, e2)), b.lwhisker(e1, b.rassociator(e1, e2, e2)),
               b.lwhisker(e1, b.lwhisker(e1, d.m2.mult)), b.lassociator(e1, e1, e2), b.rwhisker(d.m1.mult, e2)});
  return Monad{x, e12, unit, mult};
}

// ---------------------------------------------------------------------------
// Comonads

Comonad comonad_via_op2(BicatPtr b, const Monad& m) {
  auto r = check_monad(*op2(b), m);
  if (!r.empty()) throw BoundaryError("not a monad in op2: " + r.violations[0].law);
  return Comonad{m.ob, m.endo, m.unit, m.mult};
}

Monad comonad_as_op2_monad(const Comonad& c) { return Monad{c.ob, c.endo, c.counit, c.comult}; }

LawReport check_comonad(BicatPtr b, const Comonad& c) { return check_monad(*op2(b), comonad_as_op2_monad(c)); }

// ---------------------------------------------------------------------------
// Total monads

Monad total_monad(BicatPtr t, const Monad& m, const DispMonad& dm) {
  const DispPtr d = disp_of(t);
  if (!d) throw BoundaryError("total_monad: not a total bicategory");
  const auto lp = local_props(*d, {m.ob});
  if (!lp.locally_propositional || !lp.locally_groupoidal)
    throw BoundaryError("total_monad: layer is not locally propositional and groupoidal");
  const Cell X = total::obj(m.ob, dm.ob);
  if (!t->is_object(X)) throw BoundaryError("total_monad: displayed object is not over " + m.ob.describe());
  const Cell E = total::one(m.endo, dm.endo, dm.ob, dm.ob);
  if (!t->is_one_cell(E)) throw BoundaryError("total_monad: no displayed endo-1-cell over " + m.endo.describe());
  const Cell U = total::two(m.unit, dm.unit, t->id1(X), E);
  const Cell M = total::two(m.mult, dm.mult, t->comp1(E, E), E);
  if (!t->is_two_cell(U)) throw BoundaryError("total_monad: displayed unit missing");
  if (!t->is_two_cell(M)) throw BoundaryError("total_monad: displayed mult missing");
  return Monad{X, E, U, M};
}

// ---------------------------------------------------------------------------
// Invertibility

std::optional<MonadCell> mnd_cell_inverse(const Bicategory& b, const MonadCell& a) {
  auto inv = is_invertible_2cell(b, a.cell);
  if (!inv) return std::nullopt;
  return MonadCell{a.target, a.source, *inv};
}

MndAdjequivReport mnd_adjequiv_check(BicatPtr b, const MonadMorphism& f) {
  MndAdjequivReport r;
  r.underlying_adjequiv = find_adjoint_equivalence(*b, f.mor).has_value();
  r.cell_invertible = is_invertible_2cell(*b, f.cell).has_value();
  r.is_adjequiv_in_mnd = find_adjoint_equivalence(*mnd_bicat(b), encode(f)).has_value();
  return r;
}

Monad cat_monad(const FinCat& c, const Functor& t, const NatTrans& eta, const NatTrans& mu) {
  return Monad{Cell::category(c), Cell::functor(t), Cell::transformation(eta), Cell::transformation(mu)};
}

}  // namespace bicatmnd
