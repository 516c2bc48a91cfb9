#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicatmnd/corpus.hpp"
#include "bicatmnd/dispbicat.hpp"

using namespace bicatmnd;

namespace {

Cell cat(const FinCat& c) { return Cell::category(c); }

std::vector<Cell> corpus_objects() {
  std::vector<Cell> out;
  for (const auto& c : corpus::categories()) out.push_back(cat(c));
  return out;
}

Sample total_sample(const Bicategory& t, const DispBicategory& d, const std::vector<Cell>& base) {
  Sample s;
  for (const auto& x : base)
    for (const auto& xd : d.objects_over(x)) s.objects.push_back(total::obj(x, xd));
  (void)t;
  return s;
}

// A cell-unit layer with two displayed objects over every base object.
DispPtr two_point_layer(BicatPtr b, std::string name) {
  PropLayerData d;
  d.objects_over = [](const Cell&) { return std::vector<Cell>{Cell::token("p"), Cell::token("q")}; };
  d.one_cells_over = [](const Cell&, const Cell&, const Cell&) { return std::vector<Cell>{tt()}; };
  return cell_unit_disp(std::move(b), std::move(name), d);
}

}  // namespace

TEST_CASE("terminal layer") {
  auto b = cat_fin_bicat();
  auto term = terminal_disp_layer(b);
  auto t = total_bicat(term);
  auto over_arrow = term->objects_over(cat(corpus::arrow()));
  REQUIRE(over_arrow.size() == 1);
  CHECK(over_arrow[0] == Cell::token("1"));
  CHECK(term->objects_over(cat(corpus::disc2())).empty());
  CHECK(t->is_object(total::obj(cat(corpus::arrow()), Cell::token("1"))));
  CHECK(!t->is_object(total::obj(cat(corpus::arrow()), Cell::token("0"))));

  auto A = total::obj(cat(corpus::arrow()), Cell::token("1"));
  auto ids = t->one_cells(A, A);
  bool has_identity = false;
  for (const auto& F : ids) has_identity |= (F[0] == b->id1(cat(corpus::arrow())));
  CHECK(has_identity);
  // Functor constant at 0 carries no displayed 1-cell.
  auto arrow = corpus::arrow();
  auto const0 = Functor::from_tables(arrow, arrow, {{"0", "0"}, {"1", "0"}}, {{"id0", "id0"}, {"id1", "id0"}, {"a", "id0"}});
  CHECK(term->one_cells_over(Cell::functor(const0), A, A).empty());

  auto r = check_bicat_laws(*t, total_sample(*t, *term, corpus_objects()));
  CHECK(r.empty());
  auto lp = local_props(*term, corpus_objects());
  CHECK(lp.locally_propositional);
  CHECK(lp.locally_groupoidal);
}

TEST_CASE("projection pseudofunctor") {
  auto b = cat_fin_bicat();
  auto term = terminal_disp_layer(b);
  auto t = total_bicat(term);
  auto p = projection(t);
  auto s = total_sample(*t, *term, corpus_objects());
  CHECK(check_pseudofunctor(*p, s).empty());
  for (const auto& X : s.objects)
    for (const auto& Y : s.objects)
      for (const auto& F : t->one_cells(X, Y))
        for (const auto& A : t->two_cells(F, F)) CHECK(p->on_two(A) == A[0]);
}

TEST_CASE("fullsub over terminal-object predicate") {
  auto b = cat_fin_bicat();
  auto fs = fullsub_disp(b, "has-terminal", [](const Cell& x) { return !terminal_objects(x.as_category()).empty(); });
  CHECK(fs->objects_over(cat(corpus::arrow())).size() == 1);
  CHECK(fs->objects_over(cat(corpus::disc2())).empty());
  auto t = total_bicat(fs);
  CHECK(check_bicat_laws(*t, total_sample(*t, *fs, corpus_objects())).empty());
}

TEST_CASE("prod and sigma of cell-unit layers") {
  auto b = cat_fin_bicat();
  auto d1 = two_point_layer(b, "P");
  auto d2 = terminal_disp_layer(b);
  auto pr = prod_disp(d1, d2);
  auto tp = total_bicat(pr);
  auto objs = pr->objects_over(cat(corpus::arrow()));
  CHECK(objs.size() == 2);
  for (const auto& xd : objs) {
    CHECK(xd.size() == 2);
    auto X = total::obj(cat(corpus::arrow()), xd);
    CHECK(pairs::first_obj(X) == total::obj(X[0], xd[0]));
    CHECK(pairs::second_obj_prod(X) == total::obj(X[0], xd[1]));
  }
  std::vector<Cell> base{cat(corpus::one()), cat(corpus::arrow()), cat(corpus::iso2())};
  CHECK(check_bicat_laws(*tp, total_sample(*tp, *pr, {cat(corpus::one()), cat(corpus::arrow())})).empty());

  // Total cells of the product are matched pairs of total cells of the factors.
  auto t1 = total_bicat(d1), t2 = total_bicat(d2);
  for (const auto& xd : objs)
    for (const auto& yd : objs) {
      auto X = total::obj(cat(corpus::arrow()), xd), Y = total::obj(cat(corpus::arrow()), yd);
      for (const auto& F : tp->one_cells(X, Y)) {
        CHECK(t1->is_one_cell(pairs::first_one(F)));
        CHECK(t2->is_one_cell(pairs::second_one_prod(F)));
      }
    }

  auto t1b = total_bicat(d1);
  PropLayerData over;
  over.objects_over = [](const Cell& X) {
    // Over (x, p) one displayed object, over (x, q) none.
    return X[1] == Cell::token("p") ? std::vector<Cell>{tt()} : std::vector<Cell>{};
  };
  over.one_cells_over = [](const Cell&, const Cell&, const Cell&) { return std::vector<Cell>{tt()}; };
  auto d2s = cell_unit_disp(t1b, "Pp", over);
  CHECK_THROWS_AS(sigma_disp(d2, d2s), BoundaryError);
  // Sigma needs the second layer over the very total of the first.
  auto d1b = disp_of(t1b);
  auto sg = sigma_disp(d1b, d2s);
  CHECK(sg->objects_over(cat(corpus::arrow())).size() == 1);
  auto ts = total_bicat(sg);
  CHECK(check_bicat_laws(*ts, total_sample(*ts, *sg, base)).empty());
  CHECK(check_pseudofunctor(*projection(ts), total_sample(*ts, *sg, base)).empty());
}

TEST_CASE("local_props detects two displayed 2-cells over one base cell") {
  auto b = cat_fin_bicat();
  PropLayerData d;
  d.objects_over = [](const Cell&) { return std::vector<Cell>{tt()}; };
  d.one_cells_over = [](const Cell&, const Cell&, const Cell&) { return std::vector<Cell>{tt()}; };
  d.two_cells_over = [](const Cell&, const Cell&, const Cell&) {
    return std::vector<Cell>{Cell::token("u"), Cell::token("v")};
  };
  auto layer = prop_layer(b, "doubled", d);
  auto lp = local_props(*layer, {cat(corpus::one())});
  CHECK(!lp.locally_propositional);
}

TEST_CASE("trivial section of a cell-unit layer") {
  auto b = cat_fin_bicat();
  PropLayerData d;
  d.objects_over = [](const Cell&) { return std::vector<Cell>{tt()}; };
  d.one_cells_over = [](const Cell&, const Cell&, const Cell&) { return std::vector<Cell>{tt()}; };
  auto layer = cell_unit_disp(b, "unit", d);
  Section s;
  s.disp = layer;
  s.ob = [](const Cell&) { return tt(); };
  s.one = [](const Cell&) { return tt(); };
  s.two = [](const Cell&) { return tt(); };
  s.sid = s.sid_inv = [](const Cell&) { return tt(); };
  s.scomp = s.scomp_inv = [](const Cell&, const Cell&) { return tt(); };
  auto F = section_to_psfunctor(s);
  Sample sm;
  sm.objects = corpus_objects();
  CHECK(check_pseudofunctor(*F, sm).empty());
  auto p = projection(F->target());
  auto arrow = cat(corpus::arrow());
  for (const auto& f : b->one_cells(arrow, arrow)) {
    CHECK(p->on_one(F->on_one(f)) == f);
    for (const auto& a : b->two_cells(f, f)) CHECK(p->on_two(F->on_two(a)) == a);
  }
}
