#include "bicatmnd/emkleisli.hpp"

#include <set>
#include <tuple>

namespace bicatmnd {

namespace {

struct TableBuilder {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<int> identities;

  template <typename Compose>
  FinCat build(std::string name, Compose&& compose) const {
    const std::size_t n = morphisms.size();
    std::vector<int> table(n * n, -1);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (morphisms[p].target == morphisms[q].source)
          table[p * n + q] = compose(static_cast<int>(p), static_cast<int>(q));
    return FinCat::from_indices(std::move(name), objects, morphisms, identities, std::move(table));
  }
};

struct CatMonadView {
  const FinCat& c;
  const Functor& t;
  const NatTrans& eta;
  const NatTrans& mu;
  explicit CatMonadView(const Monad& m)
      : c(m.ob.as_category()),
        t(m.endo.as_functor()),
        eta(m.unit.as_transformation()),
        mu(m.mult.as_transformation()) {}
};

bool invertible_in(const Bicategory& b, const Cell& a) { return is_invertible_2cell(b, a).has_value(); }

}  // namespace

// ---------------------------------------------------------------------------
// Cones and cocones

MonadMorphism as_monad_morphism(const Bicategory& b, const EMCone& c) {
  return MonadMorphism{id_monad(b, c.ob), c.monad, c.mor, c.cell};
}

EMCone cone_from_morphism(const MonadMorphism& f) { return EMCone{f.target, f.source.ob, f.mor, f.cell}; }

LawReport check_em_cone(const Bicategory& b, const EMCone& c) { return check_monad_morphism(b, as_monad_morphism(b, c)); }

LawReport check_kleisli_cocone(const Bicategory& b, const KleisliCocone& k) {
  LawReport r;
  const Cell &e = k.monad.endo, &mor = k.mor, &cell = k.cell;
  r.instances_checked = 2;
  auto holds = [&](auto&& fn) {
    try {
      return fn();
    } catch (const BoundaryError&) {
      return false;
    }
  };
  const bool typed = holds([&] {
    return b.is_one_cell(mor) && b.src(mor) == k.monad.ob && b.tgt(mor) == k.ob && b.is_two_cell(cell) &&
           b.src2(cell) == b.comp1(e, mor) && b.tgt2(cell) == mor;
  });
  if (!typed) {
    r.add("kleisli_cocone_typing", {mor.describe()});
    return r;
  }
  if (!holds([&] { return b.vcomp(b.rwhisker(k.monad.unit, mor), cell) == b.lunitor(mor); }))
    r.add("kleisli_cocone_unit", {mor.describe()});
  if (!holds([&] {
        return b.vcomp(b.rwhisker(k.monad.mult, mor), cell) ==
               b.chain({b.rassociator(e, e, mor), b.lwhisker(e, cell), cell});
      }))
    r.add("kleisli_cocone_mult", {mor.describe()});
  return r;
}

// ---------------------------------------------------------------------------
// Eilenberg–Moore categories

std::optional<int> EMResult::find_object(int c, int s) const {
  auto it = object_of.find({c, s});
  if (it == object_of.end()) return std::nullopt;
  return it->second;
}

std::optional<int> EMResult::find_morphism(int s, int f, int t) const {
  for (int g : category.hom(s, t))
    if (base_morphism[static_cast<std::size_t>(g)] == f) return g;
  return std::nullopt;
}

bool is_algebra_morphism(const FinCat& c, const Functor& t, int a, int f, int b) {
  return c.compose(t.mor(f), b) == c.compose(a, f);
}

std::string algebra_name(const FinCat& c, int x, int a) { return "[" + c.object(x) + "|" + c.morphism(a).name + "]"; }

EMResult em_category(const Monad& m) {
  const CatMonadView v(m);
  const FinCat& c = v.c;
  EMResult r;
  TableBuilder tb;
  for (int x = 0; x < c.object_count(); ++x)
    for (int a : c.hom(v.t.obj(x), x)) {
      if (c.compose(v.eta.at(x), a) != c.identity(x)) continue;
      if (c.compose(v.t.mor(a), a) != c.compose(v.mu.at(x), a)) continue;
      r.object_of[{x, a}] = static_cast<int>(r.carrier.size());
      r.carrier.push_back(x);
      r.structure.push_back(a);
      tb.objects.push_back(algebra_name(c, x, a));
    }
  const int n = static_cast<int>(r.carrier.size());
  std::map<std::tuple<int, int, int>, int> mor_of;
  tb.identities.assign(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const int x = r.carrier[s], y = r.carrier[t], a = r.structure[s], b = r.structure[t];
      for (int f : c.hom(x, y)) {
        if (!is_algebra_morphism(c, v.t, a, f, b)) continue;
        const int idx = static_cast<int>(tb.morphisms.size());
        mor_of[{s, f, t}] = idx;
        if (s == t && f == c.identity(x)) tb.identities[s] = idx;
        tb.morphisms.push_back({"(" + c.morphism(f).name + ":" + tb.objects[s] + "->" + tb.objects[t] + ")", s, t});
        r.base_morphism.push_back(f);
      }
    }
  r.category = tb.build("EM(" + c.name() + ")", [&](int p, int q) {
    const auto &mp = tb.morphisms[p], &mq = tb.morphisms[q];
    return mor_of.at({mp.source, c.compose(r.base_morphism[p], r.base_morphism[q]), mq.target});
  });

  Functor u{r.category, c, r.carrier, r.base_morphism};
  NatTrans cell{compose(u, v.t), compose(Functor::identity(r.category), u), r.structure};
  r.cone = EMCone{m, Cell::category(r.category), Cell::functor(u), Cell::transformation(cell)};
  return r;
}

MonadMorphism em_functor_on(const Bicategory& b, const EMCone& e, const Cell& h) {
  const Cell& mor = e.mor;
  const Cell hm = b.comp1(h, mor);
  const Cell cell = b.chain({b.rassociator(h, mor, e.monad.endo), b.lwhisker(h, e.cell), b.lwhisker(h, b.lunitor(mor)),
                             b.linvunitor(hm)});
  return MonadMorphism{id_monad(b, b.src(h)), e.monad, hm, cell};
}

HomFunctor em_functor(BicatPtr b, const EMCone& e, const Cell& x) {
  auto mnd = mnd_bicat(b);
  HomFunctor hf{hom_category(*b, x, e.ob), hom_category(*mnd, encode(id_monad(*b, x)), encode(e.monad)), {}};
  hf.functor.source = hf.source.category;
  hf.functor.target = hf.target.category;
  std::vector<MonadMorphism> images;
  for (const auto& h : hf.source.objects) {
    images.push_back(em_functor_on(*b, e, h));
    hf.functor.omap.push_back(hf.target.object_of(encode(images.back())));
  }
  const auto& cat = hf.source.category;
  for (int j = 0; j < cat.morphism_count(); ++j) {
    const auto& mj = cat.morphism(j);
    const MonadCell a{images[mj.source], images[mj.target], b->rwhisker(hf.source.morphisms[j], e.mor)};
    hf.functor.mmap.push_back(hf.target.morphism_of(encode(a)));
  }
  return hf;
}

AltFunctor em_functor_alt(const Bicategory& b, const EMCone& e, const Cell& x) {
  AltFunctor af{hom_category(b, x, e.ob), hom_monad(b, x, e.monad), {}, {}};
  af.em = em_category(af.hom_monad.monad);
  const HomCategory& hh = af.hom_monad.hom;
  af.functor.source = af.source.category;
  af.functor.target = af.em.category;
  for (const auto& h : af.source.objects) {
    const Cell hm = b.comp1(h, e.mor);
    const Cell a =
        b.chain({b.rassociator(h, e.mor, e.monad.endo), b.lwhisker(h, e.cell), b.lwhisker(h, b.lunitor(e.mor))});
    auto o = af.em.find_object(hh.object_of(hm), hh.morphism_of(a));
    if (!o) throw BoundaryError("em_functor_alt: induced structure is not an algebra for " + h.describe());
    af.functor.omap.push_back(*o);
  }
  const auto& cat = af.source.category;
  for (int j = 0; j < cat.morphism_count(); ++j) {
    const auto& mj = cat.morphism(j);
    auto g = af.em.find_morphism(af.functor.obj(mj.source), hh.morphism_of(b.rwhisker(af.source.morphisms[j], e.mor)),
                                 af.functor.obj(mj.target));
    if (!g) throw BoundaryError("em_functor_alt: image is not an algebra morphism");
    af.functor.mmap.push_back(*g);
  }
  return af;
}

HomEquivalence hom_equivalence(const Bicategory& b, const EMCone& e, const AltFunctor& alt, const HomFunctor& target) {
  const HomCategory& hh = alt.hom_monad.hom;
  const EMResult& em = alt.em;
  const HomCategory& hm = target.target;
  HomEquivalence r;
  r.forward.source = em.category;
  r.forward.target = hm.category;
  std::vector<MonadMorphism> images;
  for (int s = 0; s < em.category.object_count(); ++s) {
    const Cell& k = hh.objects[em.carrier[s]];
    const Cell& a = hh.morphisms[em.structure[s]];
    images.push_back(MonadMorphism{id_monad(b, b.src(k)), e.monad, k, b.vcomp(a, b.linvunitor(k))});
    r.forward.omap.push_back(hm.object_of(encode(images.back())));
  }
  for (int f = 0; f < em.category.morphism_count(); ++f) {
    const auto& mf = em.category.morphism(f);
    const MonadCell c{images[mf.source], images[mf.target], hh.morphisms[em.base_morphism[f]]};
    r.forward.mmap.push_back(hm.morphism_of(encode(c)));
  }

  r.backward.source = hm.category;
  r.backward.target = em.category;
  for (const auto& F : hm.objects) {
    const MonadMorphism q = decode_morphism(b, F);
    const Cell a = b.vcomp(q.cell, b.lunitor(q.mor));
    auto o = em.find_object(hh.object_of(q.mor), hh.morphism_of(a));
    if (!o) throw BoundaryError("hom_equivalence: cone does not give an algebra");
    r.backward.omap.push_back(*o);
  }
  for (int j = 0; j < hm.category.morphism_count(); ++j) {
    const auto& mj = hm.category.morphism(j);
    auto g = em.find_morphism(r.backward.obj(mj.source), hh.morphism_of(hm.morphisms[j][0]), r.backward.obj(mj.target));
    if (!g) throw BoundaryError("hom_equivalence: monad cell is not an algebra morphism");
    r.backward.mmap.push_back(*g);
  }
  return r;
}

std::vector<EMMediation> em_mediators(BicatPtr b, const EMCone& e, const MonadMorphism& q) {
  auto mnd = mnd_bicat(b);
  std::vector<EMMediation> out;
  const Cell Q = encode(q);
  for (const auto& h : b->one_cells(q.source.ob, e.ob)) {
    const Cell H = encode(em_functor_on(*b, e, h));
    for (const auto& A : mnd->two_cells(H, Q))
      if (invertible_in(*b, A[0])) out.push_back({h, A[0]});
  }
  return out;
}

std::vector<Cell> em_factorizations(const Bicategory& b, const EMCone& e, const Cell& h1, const Cell& h2,
                                    const Cell& alpha) {
  std::vector<Cell> out;
  for (const auto& t : b.two_cells(h1, h2))
    if (b.rwhisker(t, e.mor) == alpha) out.push_back(t);
  return out;
}

std::string cell_label(const Cell& x) {
  if (x.kind() == Cell::Kind::Category) return x.as_category().name();
  return x.describe();
}

std::vector<std::string> UmpReport::sample_names() const {
  std::vector<std::string> out;
  for (const auto& s : samples) out.push_back(s.sample);
  return out;
}

UmpReport check_em_universal(BicatPtr b, const EMCone& e, const std::vector<Cell>& sample_objects) {
  UmpReport r;
  r.universal = true;
  auto mnd = mnd_bicat(b);
  for (const auto& x : sample_objects) {
    SampleVerdict v;
    v.sample = cell_label(x);
    const auto alt = em_functor_alt(*b, e, x);
    const auto p = functor_props(alt.functor);
    v.fully_faithful = p.fully_faithful;
    v.essentially_surjective = p.essentially_surjective;

    const auto hf = em_functor(b, e, x);
    v.existence = true;
    for (const auto& Q : hf.target.objects) {
      ++v.cones;
      if (em_mediators(b, e, decode_morphism(*b, Q)).empty()) v.existence = false;
    }
    v.uniqueness = true;
    const auto& hs = hf.source.objects;
    for (std::size_t i = 0; i < hs.size(); ++i)
      for (std::size_t j = 0; j < hs.size(); ++j) {
        const Cell Hi = hf.target.objects[hf.functor.obj(static_cast<int>(i))];
        const Cell Hj = hf.target.objects[hf.functor.obj(static_cast<int>(j))];
        for (const auto& A : mnd->two_cells(Hi, Hj)) {
          ++v.two_cells;
          if (em_factorizations(*b, e, hs[i], hs[j], A[0]).size() != 1) v.uniqueness = false;
        }
      }
    const bool ok = v.fully_faithful && v.essentially_surjective && v.existence && v.uniqueness;
    if (!ok) {
      r.universal = false;
      std::string why;
      if (!v.fully_faithful) why += " not fully faithful;";
      if (!v.essentially_surjective) why += " not essentially surjective;";
      if (!v.existence) why += " a cone has no mediator;";
      if (!v.uniqueness) why += " a 2-cell does not factor uniquely;";
      r.failures.push_back(v.sample + ":" + why);
    }
    r.samples.push_back(v);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Kleisli categories

KleisliResult kleisli_category(const Monad& m) {
  const CatMonadView v(m);
  const FinCat& c = v.c;
  KleisliResult r;
  TableBuilder tb;
  tb.objects = c.objects();
  std::map<std::tuple<int, int, int>, int> mor_of;
  for (int x = 0; x < c.object_count(); ++x)
    for (int y = 0; y < c.object_count(); ++y)
      for (int f : c.hom(x, v.t.obj(y))) {
        mor_of[{x, f, y}] = static_cast<int>(tb.morphisms.size());
        tb.morphisms.push_back({"[" + c.object(x) + "|" + c.morphism(f).name + "|" + c.object(y) + "]", x, y});
        r.base_morphism.push_back(f);
      }
  for (int x = 0; x < c.object_count(); ++x) tb.identities.push_back(mor_of.at({x, v.eta.at(x), x}));
  r.category = tb.build("Kl(" + c.name() + ")", [&](int p, int q) {
    const auto &mp = tb.morphisms[p], &mq = tb.morphisms[q];
    const int z = mq.target;
    const int k = c.compose(c.compose(r.base_morphism[p], v.t.mor(r.base_morphism[q])), v.mu.at(z));
    return mor_of.at({mp.source, k, z});
  });

  Functor f{c, r.category, {}, {}};
  for (int x = 0; x < c.object_count(); ++x) f.omap.push_back(x);
  for (int g = 0; g < c.morphism_count(); ++g) {
    const auto& mg = c.morphism(g);
    f.mmap.push_back(mor_of.at({mg.source, c.compose(g, v.eta.at(mg.target)), mg.target}));
  }
  NatTrans cell{compose(v.t, f), f, {}};
  for (int x = 0; x < c.object_count(); ++x) {
    const int tx = v.t.obj(x);
    cell.components.push_back(mor_of.at({tx, c.identity(tx), x}));
  }
  r.cocone = KleisliCocone{m, Cell::category(r.category), Cell::functor(f), Cell::transformation(cell)};
  return r;
}

Functor free_alg_functor(const Monad& m, const EMResult& em) {
  const CatMonadView v(m);
  Functor f{v.c, em.category, {}, {}};
  for (int x = 0; x < v.c.object_count(); ++x) {
    auto o = em.find_object(v.t.obj(x), v.mu.at(x));
    if (!o) throw BoundaryError("free algebra missing from EM category");
    f.omap.push_back(*o);
  }
  for (int g = 0; g < v.c.morphism_count(); ++g) {
    const auto& mg = v.c.morphism(g);
    auto h = em.find_morphism(f.obj(mg.source), v.t.mor(g), f.obj(mg.target));
    if (!h) throw BoundaryError("T(f) is not an algebra morphism");
    f.mmap.push_back(*h);
  }
  return f;
}

UnivKleisli univ_kleisli(const Monad& m, const EMResult& em, const KleisliResult& kl) {
  const CatMonadView v(m);
  const FinCat& e = em.category;
  const Functor free = free_alg_functor(m, em);
  std::set<int> frees(free.omap.begin(), free.omap.end());
  UnivKleisli u;
  std::vector<int> index(static_cast<std::size_t>(e.object_count()), -1);
  TableBuilder tb;
  for (int o = 0; o < e.object_count(); ++o) {
    bool in = false;
    for (int f : frees) in = in || find_iso(e, o, f).has_value();
    if (!in) continue;
    index[o] = static_cast<int>(u.em_object.size());
    u.em_object.push_back(o);
    tb.objects.push_back(e.object(o));
  }
  std::vector<int> mor_index(static_cast<std::size_t>(e.morphism_count()), -1), back;
  for (int g = 0; g < e.morphism_count(); ++g) {
    const auto& mg = e.morphism(g);
    if (index[mg.source] < 0 || index[mg.target] < 0) continue;
    mor_index[g] = static_cast<int>(tb.morphisms.size());
    back.push_back(g);
    tb.morphisms.push_back({mg.name, index[mg.source], index[mg.target]});
  }
  for (int o : u.em_object) tb.identities.push_back(mor_index[e.identity(o)]);
  u.category = tb.build("UKl(" + v.c.name() + ")", [&](int p, int q) { return mor_index[e.compose(back[p], back[q])]; });

  // x ↦ free algebra, f : x → Ty ↦ T(f);μ_y.
  Functor k{kl.category, u.category, {}, {}};
  for (int x = 0; x < kl.category.object_count(); ++x) k.omap.push_back(index[free.obj(x)]);
  for (int f = 0; f < kl.category.morphism_count(); ++f) {
    const auto& mf = kl.category.morphism(f);
    const int base = v.c.compose(v.t.mor(kl.base_morphism[f]), v.mu.at(mf.target));
    auto g = em.find_morphism(free.obj(mf.source), base, free.obj(mf.target));
    if (!g) throw BoundaryError("comparison image is not an algebra morphism");
    k.mmap.push_back(mor_index[*g]);
  }
  u.comparison = k;
  return u;
}

Precomposition precomposition(const Functor& k, const FinCat& d) {
  Precomposition p{functor_category(k.target, d), functor_category(k.source, d), {}};
  p.functor.source = p.from.category;
  p.functor.target = p.to.category;
  for (const auto& g : p.from.functors) p.functor.omap.push_back(*p.to.index_of(compose(k, g)));
  for (const auto& t : p.from.transformations) p.functor.mmap.push_back(*p.to.index_of(whisker_left(k, t)));
  return p;
}

std::vector<KleisliMediation> kleisli_mediators(const Bicategory& b, const KleisliCocone& k, const KleisliCocone& q) {
  std::vector<KleisliMediation> out;
  const Cell& e = k.monad.endo;
  for (const auto& h : b.one_cells(k.ob, q.ob)) {
    const Cell kh = b.comp1(k.mor, h);
    const Cell induced = b.vcomp(b.lassociator(e, k.mor, h), b.rwhisker(k.cell, h));
    for (const auto& s : b.two_cells(kh, q.mor)) {
      if (!invertible_in(b, s)) continue;
      if (b.vcomp(b.lwhisker(e, s), q.cell) == b.vcomp(induced, s)) out.push_back({h, s});
    }
  }
  return out;
}

std::vector<KleisliCocone> kleisli_cocones(const Bicategory& b, const Monad& m, const Cell& w) {
  std::vector<KleisliCocone> out;
  for (const auto& mor : b.one_cells(m.ob, w))
    for (const auto& cell : b.two_cells(b.comp1(m.endo, mor), mor)) {
      KleisliCocone q{m, w, mor, cell};
      if (check_kleisli_cocone(b, q).empty()) out.push_back(q);
    }
  return out;
}

UmpReport check_kleisli_universal(const Bicategory& b, const KleisliCocone& k,
                                  const std::vector<KleisliCocone>& sample_cocones,
                                  const std::vector<Cell>& sample_objects) {
  UmpReport r;
  r.universal = true;
  const Cell& e = k.monad.endo;
  auto record = [&](SampleVerdict v) {
    v.fully_faithful = v.uniqueness;
    v.essentially_surjective = v.existence;
    if (!(v.existence && v.uniqueness)) {
      r.universal = false;
      r.failures.push_back(v.sample + (v.existence ? "" : ": a cocone has no mediator") +
                           (v.uniqueness ? "" : ": a 2-cell does not factor uniquely"));
    }
    r.samples.push_back(v);
  };
  for (const auto& q : sample_cocones) {
    SampleVerdict v;
    v.sample = "cocone@" + cell_label(q.ob);
    v.cones = 1;
    v.existence = !kleisli_mediators(b, k, q).empty();
    v.uniqueness = true;
    record(v);
  }
  for (const auto& w : sample_objects) {
    SampleVerdict v;
    v.sample = cell_label(w);
    v.existence = true;
    for (const auto& q : kleisli_cocones(b, k.monad, w)) {
      ++v.cones;
      if (kleisli_mediators(b, k, q).empty()) v.existence = false;
    }
    v.uniqueness = true;
    const auto gs = b.one_cells(k.ob, w);
    for (const auto& g1 : gs)
      for (const auto& g2 : gs) {
        const Cell c1 = b.vcomp(b.lassociator(e, k.mor, g1), b.rwhisker(k.cell, g1));
        const Cell c2 = b.vcomp(b.lassociator(e, k.mor, g2), b.rwhisker(k.cell, g2));
        for (const auto& t : b.two_cells(b.comp1(k.mor, g1), b.comp1(k.mor, g2))) {
          if (b.vcomp(b.lwhisker(e, t), c2) != b.vcomp(c1, t)) continue;
          ++v.two_cells;
          std::size_t n = 0;
          for (const auto& beta : b.two_cells(g1, g2)) n += (b.lwhisker(k.mor, beta) == t);
          if (n != 1) v.uniqueness = false;
        }
      }
    record(v);
  }
  return r;
}

EMCone op1_em_from_kleisli(const Bicategory& b, const KleisliCocone& k) {
  return EMCone{k.monad, k.ob, k.mor, b.vcomp(k.cell, b.rinvunitor(k.mor))};
}

MonadMorphism op1_cone_of_cocone(BicatPtr b, const KleisliCocone& q) {
  auto o = op1(b);
  return as_monad_morphism(*o, op1_em_from_kleisli(*b, q));
}

TerminalAlgebra em_with_terminal(const Monad& m) {
  const Monad base{m.ob[0], m.endo[0], m.unit[0], m.mult[0]};
  const FinCat& c = base.ob.as_category();
  const Functor& t = base.endo.as_functor();
  auto x = c.find_object(m.ob[1].as_token());
  if (!x || !is_terminal(c, *x)) throw BoundaryError("em_with_terminal: displayed object is not terminal");
  const auto& maps = c.hom(t.obj(*x), *x);
  if (maps.size() != 1) throw BoundaryError("em_with_terminal: no unique structure map");
  TerminalAlgebra r{em_category(base), -1};
  auto o = r.em.find_object(*x, maps[0]);
  if (!o || !is_terminal(r.em.category, *o)) throw BoundaryError("em_with_terminal: algebra is not terminal");
  r.object = *o;
  return r;
}

}  // namespace bicatmnd
