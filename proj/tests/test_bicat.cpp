#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicatmnd/bicat.hpp"
#include "bicatmnd/corpus.hpp"

using namespace bicatmnd;

namespace {

Sample corpus_sample() {
  Sample s;
  for (const auto& c : corpus::categories()) s.objects.push_back(Cell::category(c));
  return s;
}

Cell cat(const FinCat& c) { return Cell::category(c); }

}  // namespace

TEST_CASE("CatFin basics") {
  auto b = cat_fin_bicat();
  auto arrow = cat(corpus::arrow());
  auto one = cat(corpus::one());
  CHECK(b->id1(arrow).as_functor() == Functor::identity(corpus::arrow()));
  auto f = b->one_cells(arrow, one).at(0);
  CHECK(b->lunitor(f) == b->id2(f));
  auto h = hom_category(*b, one, arrow);
  CHECK(find_isomorphism(h.category, corpus::arrow()).has_value());
}

TEST_CASE("CatFin, op1 and op2 satisfy the bicategory laws on the corpus") {
  auto b = cat_fin_bicat();
  for (const auto& bb : {b, op1(b), op2(b)}) {
    auto r = check_bicat_laws(*bb, corpus_sample());
    CHECK_MESSAGE(r.empty(), bb->name() << ": " << (r.empty() ? "" : r.violations[0].law));
    CHECK(r.instances_checked > 1000);
  }
}

TEST_CASE("duals are involutions and op2 reverses 2-cells") {
  auto b = cat_fin_bicat();
  CHECK(op1(op1(b)).get() == b.get());
  CHECK(op2(op2(b)).get() == b.get());
  auto arrow = cat(corpus::arrow());
  auto fs = b->one_cells(arrow, arrow);
  for (const auto& f : fs)
    for (const auto& g : fs)
      for (const auto& t : b->two_cells(f, g)) {
        auto o = op2(b);
        CHECK(o->src2(t) == g);
        CHECK(o->tgt2(t) == f);
        CHECK(op1(op1(b))->lwhisker(f, t) == b->lwhisker(f, t));
      }
}

TEST_CASE("injected lunitor fault breaks the triangle law") {
  auto b = cat_fin_bicat();
  auto mono = corpus::mono();
  auto idm = Functor::identity(mono);
  // The non-identity endomorphism of the identity functor on Mono.
  NatTrans bad{idm, idm, {mono.morphism_index("s")}};
  BicatOverrides o;
  o.lunitor = [b, bad, idm](const Cell& f) {
    if (f.as_functor() == idm) return Cell::transformation(bad);
    return b->lunitor(f);
  };
  auto broken = override_bicat(b, "CatFin[lunitor fault]", o);
  Sample s;
  s.objects = {cat(mono), cat(corpus::one())};
  auto r = check_bicat_laws(*broken, s);
  CHECK(!r.empty());
  CHECK(r.mentions("runitor_rwhisker"));
}

TEST_CASE("invertible 2-cells") {
  auto b = cat_fin_bicat();
  auto arrow = cat(corpus::arrow());
  auto fs = b->one_cells(arrow, arrow);
  for (const auto& f : fs) {
    auto inv = is_invertible_2cell(*b, b->id2(f));
    REQUIRE(inv);
    CHECK(*inv == b->id2(f));
  }
  for (const auto& f : fs)
    for (const auto& g : fs)
      if (f != g)
        for (const auto& t : b->two_cells(f, g)) CHECK(!is_invertible_2cell(*b, t));
  // Inverses are unique wherever they exist.
  for (const auto& c : corpus::categories()) {
    auto x = cat(c);
    for (const auto& f : b->one_cells(x, x))
      for (const auto& g : b->one_cells(x, x))
        for (const auto& t : b->two_cells(f, g)) CHECK(inverses_2cell(*b, t).size() <= 1);
  }
}

TEST_CASE("postcomposition functors") {
  auto b = cat_fin_bicat();
  auto one = cat(corpus::one()), arrow = cat(corpus::arrow()), iso2 = cat(corpus::iso2());
  auto p = postcomp_functor(*b, b->id1(arrow), one);
  CHECK(p.functor == Functor::identity(p.source.category));
  auto bang = b->one_cells(arrow, one).at(0);
  auto q = postcomp_functor(*b, bang, one);
  CHECK(validate_functor(q.functor).empty());
  CHECK(q.target.category.object_count() == 1);
  auto id_one = b->id1(one);
  CHECK(functor_props(postcomp_functor(*b, id_one, one).functor).is_equivalence);
  auto iso_to_one = b->one_cells(iso2, one).at(0);
  CHECK(find_adjoint_equivalence(*b, iso_to_one).has_value());
  CHECK(!find_adjoint_equivalence(*b, bang).has_value());
}

TEST_CASE("pseudofunctor checker") {
  auto b = cat_fin_bicat();
  auto idf = identity_psfunctor(b);
  CHECK(check_pseudofunctor(*idf, corpus_sample()).empty());

  auto z2 = corpus::z2();
  auto idz = Functor::identity(z2);
  NatTrans twist{idz, idz, {z2.morphism_index("t")}};
  PsfunctorOverrides o;
  o.identitor = [b, twist, z2](const Cell& x) {
    if (x.as_category() == z2) return Cell::transformation(twist);
    return b->id2(b->id1(x));
  };
  o.identitor_inv = o.identitor;  // t is its own inverse
  auto bad = override_psfunctor(idf, o);
  Sample s;
  s.objects = {cat(z2), cat(corpus::one())};
  auto r = check_pseudofunctor(*bad, s);
  CHECK(r.mentions("psfunctor_lunitor"));
  CHECK(!r.mentions("psfunctor_identitor_inverse"));
}
