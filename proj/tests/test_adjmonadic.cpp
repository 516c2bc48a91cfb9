#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicatmnd/adjmonadic.hpp"
#include "bicatmnd/corpus.hpp"
#include "bicatmnd/fixtures.hpp"

using namespace bicatmnd;

namespace {

Cell cat(const FinCat& c) { return Cell::category(c); }

// Triangles read off components: l(η_x);ε_{lx} = id, η_{ry};r(ε_y) = id.
bool oracle_triangles(const Functor& l, const Functor& r, const NatTrans& eta, const NatTrans& eps) {
  const FinCat &x = l.source, &y = l.target;
  for (int o = 0; o < x.object_count(); ++o)
    if (y.compose(l.mor(eta.at(o)), eps.at(l.obj(o))) != y.identity(l.obj(o))) return false;
  for (int o = 0; o < y.object_count(); ++o)
    if (x.compose(eta.at(r.obj(o)), r.mor(eps.at(o))) != x.identity(r.obj(o))) return false;
  return true;
}

bool oracle_triangles(const Adjunction& a) {
  return oracle_triangles(a.left.as_functor(), a.right.as_functor(), a.unit.as_transformation(),
                          a.counit.as_transformation());
}

const std::vector<Cell>& samples() {
  static const std::vector<Cell> s{cat(corpus::one()), cat(corpus::arrow())};
  return s;
}

}  // namespace

TEST_CASE("fixture adjunctions satisfy the triangles") {
  auto b = cat_fin_bicat();
  for (const auto& [name, a] : fixtures::adjunctions()) {
    CAPTURE(name);
    CHECK(check_adjunction(*b, a).empty());
    CHECK(oracle_triangles(a));
  }
}

TEST_CASE("triangle checker against replaced units and counits") {
  auto b = cat_fin_bicat();
  std::size_t rejected = 0;
  for (const auto& [name, a] : fixtures::adjunctions()) {
    CAPTURE(name);
    for (const auto& eta : b->two_cells(b->src2(a.unit), b->tgt2(a.unit)))
      for (const auto& eps : b->two_cells(b->src2(a.counit), b->tgt2(a.counit))) {
        const Adjunction c{a.left, a.right, eta, eps};
        const bool ok = oracle_triangles(c);
        CHECK(check_adjunction(*b, c).empty() == ok);
        rejected += !ok;
      }
  }
  CHECK(rejected > 0);
  const Adjunction fc = fixtures::free_ceil();
  // A counit of the wrong type is a typing failure.
  const Adjunction typed{fc.left, fc.right, fc.unit, fc.unit};
  CHECK(check_adjunction(*b, typed).mentions("adjunction_typing"));

  // Identity adjunction on Z2 with the t component breaks both triangles.
  const FinCat z = corpus::z2();
  const Functor idz = Functor::identity(z);
  const Cell t = Cell::transformation(NatTrans{idz, idz, {z.morphism_index("t")}});
  const Adjunction ida = identity_adjunction(*b, cat(z));
  const auto r1 = check_adjunction(*b, Adjunction{ida.left, ida.right, t, ida.counit});
  CHECK(r1.mentions("adjunction_triangle_left"));
  CHECK(r1.mentions("adjunction_triangle_right"));
  CHECK(check_adjunction(*b, Adjunction{ida.left, ida.right, t, t}).empty());
}

TEST_CASE("duals") {
  auto b = cat_fin_bicat();
  auto o1 = op1(b), o2 = op2(b);
  for (const auto& [name, a] : fixtures::adjunctions()) {
    CAPTURE(name);
    CHECK(check_adjunction(*o1, adj_dual_op1(a)).empty());
    CHECK(check_adjunction(*o2, adj_dual_op2(a)).empty());
    const auto r1 = adj_dual_op1(adj_dual_op1(a));
    const auto r2 = adj_dual_op2(adj_dual_op2(a));
    CHECK((r1.left == a.left && r1.right == a.right && r1.unit == a.unit && r1.counit == a.counit));
    CHECK((r2.left == a.left && r2.right == a.right && r2.unit == a.unit && r2.counit == a.counit));
  }
  const Adjunction id = identity_adjunction(*b, cat(corpus::arrow()));
  const auto d = adj_dual_op1(id);
  CHECK((d.left == id.left && d.right == id.right && d.unit == id.unit && d.counit == id.counit));
}

TEST_CASE("total adjunctions over the terminal layer") {
  auto b = cat_fin_bicat();
  auto t = total_bicat(terminal_disp_layer(b));
  const DispAdjunction dfc{Cell::token("1"), Cell::token("*"), tt(), tt(), tt(), tt()};
  const auto ta = total_adjunction(t, fixtures::free_ceil(), dfc);
  CHECK(check_adjunction(*t, ta).empty());

  const DispAdjunction did{Cell::token("1"), Cell::token("1"), tt(), tt(), tt(), tt()};
  CHECK(check_adjunction(*t, total_adjunction(t, identity_adjunction(*b, cat(corpus::arrow())), did)).empty());

  // l picks 0, which is not terminal in Arrow.
  const DispAdjunction dpz{Cell::token("*"), Cell::token("1"), tt(), tt(), tt(), tt()};
  CHECK_THROWS_AS(total_adjunction(t, fixtures::pick_zero(), dpz), BoundaryError);
}

TEST_CASE("the monad of an adjunction") {
  auto b = cat_fin_bicat();
  const Monad fc = adjunction_to_monad(*b, fixtures::free_ceil());
  const Monad ceil = fixtures::ceil_monad();
  CHECK(fc.ob == ceil.ob);
  CHECK(fc.endo == ceil.endo);
  CHECK(fc.unit == ceil.unit);
  CHECK(fc.mult == ceil.mult);

  const Monad pz = adjunction_to_monad(*b, fixtures::pick_zero());
  const Monad id1 = id_monad(*b, cat(corpus::one()));
  CHECK(pz.ob == id1.ob);
  CHECK(pz.endo == id1.endo);
  CHECK(pz.unit == id1.unit);
  CHECK(pz.mult == id1.mult);

  for (const auto& [name, a] : fixtures::adjunctions()) {
    CAPTURE(name);
    CHECK(check_monad(*b, adjunction_to_monad(*b, a)).empty());
  }
}

TEST_CASE("comonads from adjunctions through op2") {
  auto b = cat_fin_bicat();
  auto o2 = op2(b);
  for (const auto& [name, a] : fixtures::adjunctions()) {
    CAPTURE(name);
    const Monad m = adjunction_to_monad(*o2, adj_dual_op2(a));
    REQUIRE(check_monad(*o2, m).empty());
    const Comonad w = comonad_via_op2(b, m);
    CHECK(check_comonad(b, w).empty());
    CHECK(w.endo == b->comp1(a.right, a.left));
  }
}

TEST_CASE("adjunctions from monads") {
  auto b = cat_fin_bicat();
  for (const auto& [name, m] : fixtures::monads()) {
    CAPTURE(name);
    const auto em = em_category(m);
    const auto r = monad_to_adjunction(b, m, em.cone);
    CHECK(check_adjunction(*b, r.adjunction).empty());
    CHECK(check_monad_morphism(*b, r.comparison).empty());
    const auto v = mnd_adjequiv_check(b, r.comparison);
    CHECK(v.underlying_adjequiv);
    CHECK(v.cell_invertible);
    CHECK(v.is_adjequiv_in_mnd);
  }

  // CeilM gives FreeCeil up to isomorphism: l;r = T and r picks the algebra.
  const Monad ceil = fixtures::ceil_monad();
  const auto em = em_category(ceil);
  const auto r = monad_to_adjunction(b, ceil, em.cone);
  CHECK(b->comp1(r.adjunction.left, r.adjunction.right) == ceil.endo);
  CHECK(find_adjoint_equivalence(*b, r.adjunction.right).has_value() == false);
  CHECK(r.adjunction.left.as_functor().target.object_count() == 1);

  const Monad ida = id_monad(*b, cat(corpus::arrow()));
  const auto ra = monad_to_adjunction(b, ida, em_category(ida).cone);
  CHECK(find_adjoint_equivalence(*b, ra.adjunction.left).has_value());
  CHECK(find_adjoint_equivalence(*b, ra.adjunction.right).has_value());
}

TEST_CASE("Kleisli adjunctions through op1") {
  auto b = cat_fin_bicat();
  auto o1 = op1(b);
  for (const Monad& m : {fixtures::ceil_monad(), id_monad(*b, cat(corpus::arrow()))}) {
    const auto kl = kleisli_category(m);
    const EMCone e = op1_em_from_kleisli(*b, kl.cocone);
    const auto r = monad_to_adjunction(o1, m, e);
    CHECK(check_adjunction(*o1, r.adjunction).empty());
    const Adjunction k = adj_dual_op1(r.adjunction);
    CHECK(check_adjunction(*b, k).empty());
    CHECK(k.left == kl.cocone.mor);
    const Monad km = adjunction_to_monad(*b, k);
    CHECK(check_monad(*b, km).empty());
    CHECK(km.endo == m.endo);
  }
}

TEST_CASE("hom adjunctions") {
  auto b = cat_fin_bicat();
  for (const auto& [name, a] : fixtures::adjunctions()) {
    for (const auto& w : corpus::categories()) {
      CAPTURE(name);
      CAPTURE(w.name());
      const auto h = hom_adjunction(*b, a, cat(w));
      CHECK(check_adjunction(*b, h.adjunction).empty());
      CHECK(oracle_triangles(h.adjunction));
    }
  }
  const auto h = hom_adjunction(*b, fixtures::free_ceil(), cat(corpus::one()));
  CHECK(find_isomorphism(h.hom_x.category, corpus::arrow()).has_value());
  CHECK(find_isomorphism(h.hom_y.category, corpus::one()).has_value());
  const Monad hm = adjunction_to_monad(*b, h.adjunction);
  const auto iso = find_isomorphism(h.hom_x.category, corpus::arrow());
  REQUIRE(iso.has_value());
  // Transport along the isomorphism recovers CeilM's endofunctor.
  const Functor t = compose(compose(*find_isomorphism(corpus::arrow(), h.hom_x.category), hm.endo.as_functor()), *iso);
  CHECK(t == fixtures::ceil_monad().endo.as_functor());
}

TEST_CASE("comparison and monadicity") {
  auto b = cat_fin_bicat();
  const auto fc = is_monadic_cat(fixtures::free_ceil());
  CHECK(fc.monadic);
  CHECK(is_invertible_2cell(*b, fc.comparison.iso).has_value());
  const auto pz = is_monadic_cat(fixtures::pick_zero());
  CHECK_FALSE(pz.monadic);
  CHECK_FALSE(functor_props(pz.comparison.mediator.as_functor()).fully_faithful);
  for (const auto& c : corpus::categories()) {
    CAPTURE(c.name());
    CHECK(is_monadic_cat(identity_adjunction(*b, cat(c))).monadic);
  }
  // The generic search agrees with the direct construction.
  for (const Adjunction& a : {fixtures::free_ceil(), fixtures::pick_zero()}) {
    const auto em = em_category(adjunction_to_monad(*b, a));
    const auto g = is_monadic(b, a, em.cone);
    const auto d = is_monadic_cat(a);
    CHECK(g.monadic == d.monadic);
    CHECK(find_adjoint_equivalence(*b, g.comparison.mediator).has_value() ==
          functor_props(d.comparison.mediator.as_functor()).is_equivalence);
  }

  CHECK(is_representably_monadic(*b, fixtures::free_ceil(), samples()).representably_monadic);
  CHECK_FALSE(is_representably_monadic(*b, fixtures::pick_zero(), samples()).representably_monadic);
  for (const auto& [name, a] : fixtures::adjunctions()) {
    CAPTURE(name);
    const auto r = is_representably_monadic(*b, a, samples());
    CHECK(r.samples.size() == 2);
    CHECK(is_monadic_cat(a).monadic == r.representably_monadic);
  }
}

TEST_CASE("adjoint equivalences through representables") {
  auto b = cat_fin_bicat();
  const Cell id1 = b->id1(cat(corpus::one()));
  auto r = repr_adjequiv_check(*b, id1, samples());
  CHECK((r.direct && r.agree));
  for (const auto& [name, f] : fixtures::one_cells()) {
    CAPTURE(name);
    CHECK(repr_adjequiv_check(*b, f, samples()).agree);
  }
  const auto cells = fixtures::one_cells();
  for (const auto& [name, f] : cells) {
    if (name == "FreeCeil.l") CHECK_FALSE(repr_adjequiv_check(*b, f, samples()).direct);
    if (name == "Iso2ToOne") CHECK(repr_adjequiv_check(*b, f, samples()).direct);
  }
}
