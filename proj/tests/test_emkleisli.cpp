#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bicatmnd/corpus.hpp"
#include "bicatmnd/emkleisli.hpp"
#include "bicatmnd/fixtures.hpp"

using namespace bicatmnd;

namespace {

Cell cat(const FinCat& c) { return Cell::category(c); }

// Algebras read off the tables: a : Tx → x with η_x;a = id, T(a);a = μ_x;a.
std::set<std::pair<int, int>> oracle_algebras(const Monad& m) {
  const FinCat& c = m.ob.as_category();
  const Functor& t = m.endo.as_functor();
  const NatTrans &eta = m.unit.as_transformation(), &mu = m.mult.as_transformation();
  std::set<std::pair<int, int>> out;
  for (int x = 0; x < c.object_count(); ++x)
    for (int a = 0; a < c.morphism_count(); ++a) {
      if (c.morphism(a).source != t.obj(x) || c.morphism(a).target != x) continue;
      if (c.compose(eta.at(x), a) == c.identity(x) && c.compose(t.mor(a), a) == c.compose(mu.at(x), a))
        out.insert({x, a});
    }
  return out;
}

bool bijective(const Functor& f) {
  std::set<int> o(f.omap.begin(), f.omap.end()), m(f.mmap.begin(), f.mmap.end());
  return static_cast<int>(o.size()) == f.target.object_count() && static_cast<int>(o.size()) == f.source.object_count() &&
         static_cast<int>(m.size()) == f.target.morphism_count() &&
         static_cast<int>(m.size()) == f.source.morphism_count();
}

Functor constant(const FinCat& c, const FinCat& d, const std::string& obj) {
  Functor f{c, d, {}, {}};
  const int o = d.object_index(obj);
  for (int x = 0; x < c.object_count(); ++x) f.omap.push_back(o);
  for (int g = 0; g < c.morphism_count(); ++g) f.mmap.push_back(d.identity(o));
  return f;
}

std::set<std::pair<std::string, std::string>> pairs_of(const std::vector<KleisliMediation>& ms) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& m : ms) out.insert({m.mediator.describe(), m.iso.describe()});
  return out;
}

std::set<std::pair<std::string, std::string>> pairs_of(const std::vector<EMMediation>& ms) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& m : ms) out.insert({m.mediator.describe(), m.iso.describe()});
  return out;
}

}  // namespace

TEST_CASE("EM category of the identity monad") {
  auto b = cat_fin_bicat();
  for (const auto& c : corpus::categories()) {
    CAPTURE(c.name());
    const auto em = em_category(id_monad(*b, cat(c)));
    CHECK(validate_category(em.category).empty());
    for (std::size_t s = 0; s < em.carrier.size(); ++s) CHECK(em.structure[s] == c.identity(em.carrier[s]));
    CHECK(find_isomorphism(em.category, c).has_value());
    CHECK(check_em_cone(*b, em.cone).empty());
  }
}

TEST_CASE("EM categories of the fixture monads") {
  auto b = cat_fin_bicat();
  for (const auto& [name, m] : fixtures::monads()) {
    CAPTURE(name);
    const auto em = em_category(m);
    CHECK(validate_category(em.category).empty());
    std::set<std::pair<int, int>> got;
    for (std::size_t s = 0; s < em.carrier.size(); ++s) got.insert({em.carrier[s], em.structure[s]});
    CHECK(got == oracle_algebras(m));
    CHECK(check_em_cone(*b, em.cone).empty());
    CHECK(validate_functor(em.cone.mor.as_functor()).empty());
  }
  const auto ceil = em_category(fixtures::ceil_monad());
  REQUIRE(ceil.category.object_count() == 1);
  CHECK(ceil.category.morphism_count() == 1);
  CHECK(ceil.category.object(0) == "[1|id1]");
  CHECK(find_isomorphism(ceil.category, corpus::one()).has_value());
}

TEST_CASE("algebra morphism condition") {
  // Two structure maps on Z2 for the identity endofunctor: e and t.
  const FinCat z = corpus::z2();
  const Functor id = Functor::identity(z);
  const int e = z.morphism_index("e"), t = z.morphism_index("t");
  CHECK_FALSE(is_algebra_morphism(z, id, e, e, t));
  CHECK_FALSE(is_algebra_morphism(z, id, t, t, e));
  CHECK(is_algebra_morphism(z, id, t, e, t));
  CHECK(is_algebra_morphism(z, id, t, t, t));
  // Every EM morphism commutes; every commuting base morphism is an EM morphism.
  for (const auto& [name, m] : fixtures::monads()) {
    CAPTURE(name);
    const auto em = em_category(m);
    const FinCat& c = m.ob.as_category();
    for (int s = 0; s < em.category.object_count(); ++s)
      for (int u = 0; u < em.category.object_count(); ++u)
        for (int f : c.hom(em.carrier[s], em.carrier[u]))
          CHECK(em.find_morphism(s, f, u).has_value() ==
                is_algebra_morphism(c, m.endo.as_functor(), em.structure[s], f, em.structure[u]));
  }
}

TEST_CASE("em_functor") {
  auto b = cat_fin_bicat();
  const Monad ceil = fixtures::ceil_monad();
  const auto em = em_category(ceil);

  const auto self = em_functor_on(*b, em.cone, b->id1(em.cone.ob));
  CHECK(self.mor == em.cone.mor);
  CHECK(self.cell == em.cone.cell);

  const auto hf = em_functor(b, em.cone, cat(corpus::one()));
  CHECK(validate_functor(hf.functor).empty());
  const auto p = functor_props(hf.functor);
  CHECK(p.fully_faithful);
  CHECK(p.essentially_surjective);
  CHECK(p.is_equivalence);

  // τ ↦ τ ⊳ mor respects vertical composition, componentwise.
  const auto ha = em_functor(b, em.cone, cat(corpus::arrow()));
  CHECK(validate_functor(ha.functor).empty());
  const FinCat& src = ha.source.category;
  for (int f = 0; f < src.morphism_count(); ++f)
    for (int g = 0; g < src.morphism_count(); ++g) {
      const int fg = src.compose(f, g);
      if (fg < 0) continue;
      const NatTrans lhs = whisker_right(ha.source.morphisms[fg].as_transformation(), em.cone.mor.as_functor());
      const NatTrans rhs = vcomp(whisker_right(ha.source.morphisms[f].as_transformation(), em.cone.mor.as_functor()),
                                 whisker_right(ha.source.morphisms[g].as_transformation(), em.cone.mor.as_functor()));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("em_functor_alt and the hom equivalence") {
  auto b = cat_fin_bicat();
  const Monad ida = id_monad(*b, cat(corpus::arrow()));
  const auto ema = em_category(ida);
  const auto alt = em_functor_alt(*b, ema.cone, cat(corpus::one()));
  CHECK(functor_props(alt.functor).is_equivalence);
  CHECK(find_isomorphism(alt.em.category, alt.hom_monad.hom.category).has_value());

  const Monad ceil = fixtures::ceil_monad();
  const auto em = em_category(ceil);
  const auto p = functor_props(em_functor_alt(*b, em.cone, cat(corpus::one())).functor);
  CHECK(p.fully_faithful);
  CHECK(p.essentially_surjective);
  CHECK(p.is_equivalence);

  // Disc2 with both objects sent to 1 is a cone that is not universal.
  const FinCat d2 = corpus::disc2(), a = corpus::arrow();
  const Functor k1 = constant(d2, a, "1");
  const EMCone bad{ceil, cat(d2), Cell::functor(k1),
                   Cell::transformation(NatTrans::identity(compose(k1, ceil.endo.as_functor())))};
  REQUIRE(check_em_cone(*b, bad).empty());
  const auto q = functor_props(em_functor_alt(*b, bad, cat(corpus::one())).functor);
  CHECK_FALSE(q.fully_faithful);
  CHECK(q.essentially_surjective);

  // The two functors into the hom-category of Mnd agree through the bridge.
  for (const auto& [name, m] : fixtures::monads()) {
    if (name.rfind("Id", 0) == 0 && name != "IdArrow" && name != "IdIso2") continue;
    CAPTURE(name);
    const auto e = em_category(m);
    for (const auto& x : {corpus::one(), corpus::arrow()}) {
      CAPTURE(x.name());
      const auto af = em_functor_alt(*b, e.cone, cat(x));
      const auto hf = em_functor(b, e.cone, cat(x));
      const auto eq = hom_equivalence(*b, e.cone, af, hf);
      CHECK(compose(af.functor, eq.forward) == hf.functor);
      CHECK(compose(eq.forward, eq.backward) == Functor::identity(af.em.category));
      CHECK(functor_props(eq.forward).is_equivalence);
      CHECK(functor_props(af.functor).is_equivalence == functor_props(hf.functor).is_equivalence);
    }
  }
}

TEST_CASE("EM universality") {
  auto b = cat_fin_bicat();
  const Cell one = cat(corpus::one()), arrow = cat(corpus::arrow()), disc = cat(corpus::disc2());

  const auto ceil = em_category(fixtures::ceil_monad());
  auto r = check_em_universal(b, ceil.cone, {one, arrow});
  CHECK(r.universal);
  CHECK(r.failures.empty());
  REQUIRE(r.samples.size() == 2);
  for (const auto& v : r.samples) {
    CHECK(v.existence);
    CHECK(v.uniqueness);
    CHECK(v.cones > 0);
  }

  const auto ida = em_category(id_monad(*b, arrow));
  CHECK(check_em_universal(b, ida.cone, {one, arrow, disc}).universal);

  const Monad m = fixtures::ceil_monad();
  const FinCat d2 = corpus::disc2();
  const Functor k1 = constant(d2, corpus::arrow(), "1");
  const EMCone bad{m, disc, Cell::functor(k1), Cell::transformation(NatTrans::identity(compose(k1, m.endo.as_functor())))};
  auto rb = check_em_universal(b, bad, {one});
  CHECK_FALSE(rb.universal);
  REQUIRE(rb.failures.size() == 1);
  CHECK(rb.failures[0].rfind("One:", 0) == 0);
  CHECK_FALSE(rb.samples[0].uniqueness);
}

TEST_CASE("Kleisli categories") {
  auto b = cat_fin_bicat();
  for (const auto& c : corpus::categories()) {
    CAPTURE(c.name());
    const auto kl = kleisli_category(id_monad(*b, cat(c)));
    CHECK(validate_category(kl.category).empty());
    CHECK(find_isomorphism(kl.category, c).has_value());
  }
  const auto kl = kleisli_category(fixtures::ceil_monad());
  CHECK(validate_category(kl.category).empty());
  CHECK(kl.category.object_count() == 2);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) CHECK(kl.category.hom(x, y).size() == 1);

  for (const auto& [name, m] : fixtures::monads()) {
    CAPTURE(name);
    const auto k = kleisli_category(m);
    CHECK(validate_category(k.category).empty());
    CHECK(check_kleisli_cocone(*b, k.cocone).empty());
    // Units of ⋆ sit over η.
    const NatTrans& eta = m.unit.as_transformation();
    for (int x = 0; x < k.category.object_count(); ++x) {
      const int i = k.category.identity(x);
      CHECK(k.base_morphism[i] == eta.at(x));
      for (int f : k.category.hom(x, x)) {
        CHECK(k.category.compose(i, f) == f);
        CHECK(k.category.compose(f, i) == f);
      }
    }
  }
}

TEST_CASE("free algebras and the comparison functor") {
  auto b = cat_fin_bicat();
  for (const auto& [name, m] : fixtures::monads()) {
    CAPTURE(name);
    const auto em = em_category(m);
    const auto kl = kleisli_category(m);
    CHECK(validate_functor(free_alg_functor(m, em)).empty());
    const auto u = univ_kleisli(m, em, kl);
    CHECK(validate_category(u.category).empty());
    CHECK(validate_functor(u.comparison).empty());
    const auto p = functor_props(u.comparison);
    CHECK(p.fully_faithful);
    CHECK(p.essentially_surjective);
  }
  const Monad ida = id_monad(*b, cat(corpus::arrow()));
  const auto ea = em_category(ida);
  const auto ua = univ_kleisli(ida, ea, kleisli_category(ida));
  CHECK(find_isomorphism(ua.category, corpus::arrow()).has_value());
  CHECK(bijective(ua.comparison));

  const Monad ceil = fixtures::ceil_monad();
  const auto ec = em_category(ceil);
  const auto uc = univ_kleisli(ceil, ec, kleisli_category(ceil));
  CHECK(find_isomorphism(uc.category, corpus::one()).has_value());
}

TEST_CASE("precomposition with the comparison") {
  for (const auto& [name, m] : fixtures::monads()) {
    CAPTURE(name);
    const auto em = em_category(m);
    const auto u = univ_kleisli(m, em, kleisli_category(m));
    for (const auto& d : corpus::categories()) {
      CAPTURE(d.name());
      const auto p = precomposition(u.comparison, d);
      CHECK(validate_functor(p.functor).empty());
      CHECK(functor_props(p.functor).is_equivalence);
    }
  }
}

TEST_CASE("Kleisli universality") {
  auto b = cat_fin_bicat();
  const Cell one = cat(corpus::one()), arrow = cat(corpus::arrow());
  const Monad ceil = fixtures::ceil_monad();
  const auto kl = kleisli_category(ceil);

  const Functor k = constant(corpus::arrow(), corpus::one(), "*");
  const KleisliCocone to_one{ceil, one, Cell::functor(k),
                             Cell::transformation(NatTrans::identity(compose(ceil.endo.as_functor(), k)))};
  REQUIRE(check_kleisli_cocone(*b, to_one).empty());
  CHECK(kleisli_mediators(*b, kl.cocone, to_one).size() == 1);
  auto r = check_kleisli_universal(*b, kl.cocone, {to_one}, {one, arrow});
  CHECK(r.universal);
  CHECK(r.failures.empty());

  const Monad id1 = id_monad(*b, one);
  CHECK(check_kleisli_universal(*b, kleisli_category(id1).cocone, {}, {one, arrow}).universal);

  // The cocone on One for the identity monad on Disc2 admits no mediator
  // out of it into the canonical cocone.
  const Monad idd = id_monad(*b, cat(corpus::disc2()));
  const Functor kd = constant(corpus::disc2(), corpus::one(), "*");
  const KleisliCocone collapse{idd, one, Cell::functor(kd),
                               Cell::transformation(NatTrans::identity(compose(idd.endo.as_functor(), kd)))};
  REQUIRE(check_kleisli_cocone(*b, collapse).empty());
  const auto canon = kleisli_category(idd).cocone;
  auto rc = check_kleisli_universal(*b, collapse, {canon}, {});
  CHECK_FALSE(rc.universal);
  REQUIRE(rc.failures.size() == 1);
  CHECK(rc.failures[0].find("no mediator") != std::string::npos);

  // A cocone on Disc2 for CeilM: mediators exist but are not unique.
  const Functor k0 = constant(corpus::arrow(), corpus::disc2(), "0");
  const KleisliCocone loose{ceil, cat(corpus::disc2()), Cell::functor(k0),
                            Cell::transformation(NatTrans::identity(compose(ceil.endo.as_functor(), k0)))};
  REQUIRE(check_kleisli_cocone(*b, loose).empty());
  auto rl = check_kleisli_universal(*b, loose, {}, {arrow});
  CHECK_FALSE(rl.universal);
  CHECK_FALSE(rl.samples[0].uniqueness);
}

TEST_CASE("Kleisli objects as EM objects of op1") {
  auto b = cat_fin_bicat();
  auto o = op1(b);
  const Cell one = cat(corpus::one()), arrow = cat(corpus::arrow());
  for (const Monad& m : {fixtures::ceil_monad(), id_monad(*b, arrow)}) {
    const auto kl = kleisli_category(m);
    const EMCone e = op1_em_from_kleisli(*b, kl.cocone);
    CHECK(check_em_cone(*o, e).empty());
    CHECK(check_em_universal(o, e, {one, arrow}).universal);
    for (const auto& w : {one, arrow})
      for (const auto& q : kleisli_cocones(*b, m, w)) {
        const auto lhs = pairs_of(kleisli_mediators(*b, kl.cocone, q));
        const auto rhs = pairs_of(em_mediators(o, e, op1_cone_of_cocone(b, q)));
        CHECK(lhs == rhs);
        CHECK(!lhs.empty());
      }
  }
}

TEST_CASE("EM objects with a terminal object") {
  auto b = cat_fin_bicat();
  auto t = total_bicat(terminal_disp_layer(b));
  const DispMonad dm{Cell::token("1"), tt(), tt(), tt()};
  for (const Monad& m : {fixtures::ceil_monad(), id_monad(*b, cat(corpus::arrow()))}) {
    const auto r = em_with_terminal(total_monad(t, m, dm));
    CHECK(r.em.carrier[r.object] == 1);
    CHECK(r.em.structure[r.object] == corpus::arrow().identity(1));
    CHECK(is_terminal(r.em.category, r.object));
  }
  const auto z = total_monad(t, fixtures::ceil_monad(), dm);
  const Monad wrong{Cell::tuple({z.ob[0], Cell::token("0")}), z.endo, z.unit, z.mult};
  CHECK_THROWS_AS(em_with_terminal(wrong), BoundaryError);
}
