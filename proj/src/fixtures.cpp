#include "bicatmnd/fixtures.hpp"

#include "bicatmnd/corpus.hpp"

namespace bicatmnd::fixtures {

FinCat arrow_copy() {
  return FinCat::from_tables("Arrow'", {"u", "v"}, {{"idu", "u", "u"}, {"idv", "v", "v"}, {"b", "u", "v"}},
                             {{"u", "idu"}, {"v", "idv"}},
                             {{"idu", "idu", "idu"}, {"idv", "idv", "idv"}, {"idu", "b", "b"}, {"b", "idv", "b"}});
}

FinCat idem_arrow() {
  return FinCat::from_tables(
      "IdemArrow", {"0", "1"}, {{"id0", "0", "0"}, {"id1", "1", "1"}, {"s", "0", "0"}, {"a", "0", "1"}},
      {{"0", "id0"}, {"1", "id1"}},
      {{"id0", "id0", "id0"}, {"id1", "id1", "id1"}, {"id0", "s", "s"}, {"s", "id0", "s"}, {"s", "s", "s"},
       {"id0", "a", "a"}, {"a", "id1", "a"}, {"s", "a", "a"}});
}

namespace {

Monad ceil_on(const FinCat& c, const std::string& o0, const std::string& o1, const std::string& id0,
              const std::string& id1, const std::string& a) {
  auto t = Functor::from_tables(c, c, {{o0, o1}, {o1, o1}}, {{id0, id1}, {id1, id1}, {a, id1}});
  auto eta = NatTrans::from_tables(Functor::identity(c), t, {{o0, a}, {o1, id1}});
  auto mu = NatTrans::from_tables(compose(t, t), t, {{o0, id1}, {o1, id1}});
  return cat_monad(c, t, eta, mu);
}

}  // namespace

Monad ceil_monad() { return ceil_on(corpus::arrow(), "0", "1", "id0", "id1", "a"); }
Monad ceil_copy_monad() { return ceil_on(arrow_copy(), "u", "v", "idu", "idv", "b"); }

MonadMorphism ceil_relabel() {
  const FinCat a = corpus::arrow(), c = arrow_copy();
  auto f = Functor::from_tables(a, c, {{"0", "u"}, {"1", "v"}}, {{"id0", "idu"}, {"id1", "idv"}, {"a", "b"}});
  const Monad m1 = ceil_monad(), m2 = ceil_copy_monad();
  // f;T' = T;f on the nose.
  auto ft = compose(f, m2.endo.as_functor());
  return MonadMorphism{m1, m2, Cell::functor(f), Cell::transformation(NatTrans::identity(ft))};
}

Monad swap_monad() {
  const FinCat c = corpus::iso2();
  auto t = Functor::from_tables(c, c, {{"0", "1"}, {"1", "0"}}, {{"id0", "id1"}, {"id1", "id0"}, {"i", "j"}, {"j", "i"}});
  auto eta = NatTrans::from_tables(Functor::identity(c), t, {{"0", "i"}, {"1", "j"}});
  auto mu = NatTrans::from_tables(compose(t, t), t, {{"0", "i"}, {"1", "j"}});
  return cat_monad(c, t, eta, mu);
}

Monad const_monad() {
  const FinCat c = corpus::iso2();
  auto t = Functor::from_tables(c, c, {{"0", "0"}, {"1", "0"}}, {{"id0", "id0"}, {"id1", "id0"}, {"i", "id0"}, {"j", "id0"}});
  auto eta = NatTrans::from_tables(Functor::identity(c), t, {{"0", "id0"}, {"1", "j"}});
  auto mu = NatTrans::from_tables(compose(t, t), t, {{"0", "id0"}, {"1", "id0"}});
  return cat_monad(c, t, eta, mu);
}

Comonad const0_comonad() {
  const FinCat c = corpus::arrow();
  auto t = Functor::from_tables(c, c, {{"0", "0"}, {"1", "0"}}, {{"id0", "id0"}, {"id1", "id0"}, {"a", "id0"}});
  auto counit = NatTrans::from_tables(t, Functor::identity(c), {{"0", "id0"}, {"1", "a"}});
  auto comult = NatTrans::from_tables(t, compose(t, t), {{"0", "id0"}, {"1", "id0"}});
  return Comonad{Cell::category(c), Cell::functor(t), Cell::transformation(counit), Cell::transformation(comult)};
}

std::vector<NamedMonad> monads() {
  std::vector<NamedMonad> out{{"CeilM", ceil_monad()},
                              {"CeilM'", ceil_copy_monad()},
                              {"Swap", swap_monad()},
                              {"Const", const_monad()}};
  auto b = cat_fin_bicat();
  for (const auto& c : corpus::categories()) out.push_back({"Id" + c.name(), id_monad(*b, Cell::category(c))});
  return out;
}

std::vector<NamedLaw> distributive_laws() {
  auto b = cat_fin_bicat();
  std::vector<NamedLaw> out;
  for (const auto& [name, m] : monads()) out.push_back({"Trivial" + name, trivial_distributive_law(*b, m)});
  const Monad c = ceil_monad();
  out.push_back({"CeilCeil", DistributiveLaw{c, c, b->id2(b->comp1(c.endo, c.endo))}});
  return out;
}

DistributiveLaw faulty_distributive_law() {
  auto b = cat_fin_bicat();
  const FinCat z = corpus::z2();
  const Monad m = id_monad(*b, Cell::category(z));
  const Functor idz = Functor::identity(z);
  return DistributiveLaw{m, m, Cell::transformation(NatTrans{idz, idz, {z.morphism_index("t")}})};
}

Adjunction free_ceil() {
  const FinCat a = corpus::arrow(), o = corpus::one();
  auto l = Functor::from_tables(a, o, {{"0", "*"}, {"1", "*"}}, {{"id0", "id*"}, {"id1", "id*"}, {"a", "id*"}});
  auto r = Functor::from_tables(o, a, {{"*", "1"}}, {{"id*", "id1"}});
  auto eta = NatTrans::from_tables(Functor::identity(a), compose(l, r), {{"0", "a"}, {"1", "id1"}});
  auto eps = NatTrans::from_tables(compose(r, l), Functor::identity(o), {{"*", "id*"}});
  return Adjunction{Cell::functor(l), Cell::functor(r), Cell::transformation(eta), Cell::transformation(eps)};
}

Adjunction pick_zero() {
  const FinCat a = corpus::arrow(), o = corpus::one();
  auto l = Functor::from_tables(o, a, {{"*", "0"}}, {{"id*", "id0"}});
  auto r = Functor::from_tables(a, o, {{"0", "*"}, {"1", "*"}}, {{"id0", "id*"}, {"id1", "id*"}, {"a", "id*"}});
  auto eta = NatTrans::from_tables(Functor::identity(o), compose(l, r), {{"*", "id*"}});
  auto eps = NatTrans::from_tables(compose(r, l), Functor::identity(a), {{"0", "id0"}, {"1", "a"}});
  return Adjunction{Cell::functor(l), Cell::functor(r), Cell::transformation(eta), Cell::transformation(eps)};
}

std::vector<NamedAdjunction> adjunctions() {
  auto b = cat_fin_bicat();
  std::vector<NamedAdjunction> out{{"FreeCeil", free_ceil()}, {"PickZero", pick_zero()}};
  for (const auto& c : corpus::categories()) out.push_back({"Id" + c.name(), identity_adjunction(*b, Cell::category(c))});
  return out;
}

std::vector<NamedOneCell> one_cells() {
  std::vector<NamedOneCell> out;
  for (const auto& [name, a] : adjunctions()) {
    out.push_back({name + ".l", a.left});
    out.push_back({name + ".r", a.right});
  }
  const FinCat i = corpus::iso2(), o = corpus::one();
  out.push_back({"Iso2ToOne", Cell::functor(Functor::from_tables(
                                  i, o, {{"0", "*"}, {"1", "*"}}, {{"id0", "id*"}, {"id1", "id*"}, {"i", "id*"}, {"j", "id*"}}))});
  out.push_back({"OneToIso2", Cell::functor(Functor::from_tables(o, i, {{"*", "1"}}, {{"id*", "id1"}}))});
  return out;
}

}  // namespace bicatmnd::fixtures
