#include "bicatmnd/bicat.hpp"

#include <set>
#include <unordered_set>

namespace bicatmnd {

Cell Bicategory::chain(std::initializer_list<Cell> cells) const {
  auto it = cells.begin();
  Cell acc = *it++;
  for (; it != cells.end(); ++it) acc = vcomp(acc, *it);
  return acc;
}

// ---------------------------------------------------------------------------
// CatFin

namespace {

class CatFinBicat final : public Bicategory {
 public:
  explicit CatFinBicat(double limit) : limit_(limit) {}

  std::string name() const override { return "CatFin"; }

  Cell src(const Cell& f) const override { return Cell::category(f.as_functor().source); }
  Cell tgt(const Cell& f) const override { return Cell::category(f.as_functor().target); }
  Cell src2(const Cell& a) const override { return Cell::functor(a.as_transformation().source); }
  Cell tgt2(const Cell& a) const override { return Cell::functor(a.as_transformation().target); }

  Cell id1(const Cell& x) const override { return Cell::functor(Functor::identity(x.as_category())); }
  Cell comp1(const Cell& f, const Cell& g) const override {
    return Cell::functor(compose(f.as_functor(), g.as_functor()));
  }
  Cell id2(const Cell& f) const override { return Cell::transformation(NatTrans::identity(f.as_functor())); }
  Cell vcomp(const Cell& a, const Cell& b) const override {
    return Cell::transformation(bicatmnd::vcomp(a.as_transformation(), b.as_transformation()));
  }
  Cell lwhisker(const Cell& f, const Cell& a) const override {
    return Cell::transformation(whisker_left(f.as_functor(), a.as_transformation()));
  }
  Cell rwhisker(const Cell& a, const Cell& g) const override {
    return Cell::transformation(whisker_right(a.as_transformation(), g.as_functor()));
  }

  // Strict: every unitor and associator is an identity transformation.
  Cell lunitor(const Cell& f) const override { return id2(f); }
  Cell linvunitor(const Cell& f) const override { return id2(f); }
  Cell runitor(const Cell& f) const override { return id2(f); }
  Cell rinvunitor(const Cell& f) const override { return id2(f); }
  Cell lassociator(const Cell& f, const Cell& g, const Cell& h) const override { return id2(comp1(comp1(f, g), h)); }
  Cell rassociator(const Cell& f, const Cell& g, const Cell& h) const override { return id2(comp1(f, comp1(g, h))); }

  std::vector<Cell> one_cells(const Cell& x, const Cell& y) const override {
    std::vector<Cell> out;
    for (auto& f : enumerate_functors(x.as_category(), y.as_category(), limit_)) out.push_back(Cell::functor(std::move(f)));
    return out;
  }
  std::vector<Cell> two_cells(const Cell& f, const Cell& g) const override {
    std::vector<Cell> out;
    for (auto& t : enumerate_transformations(f.as_functor(), g.as_functor()))
      out.push_back(Cell::transformation(std::move(t)));
    return out;
  }

  bool is_object(const Cell& x) const override {
    return x.kind() == Cell::Kind::Category && validate_category(x.as_category()).empty();
  }
  bool is_one_cell(const Cell& f) const override {
    return f.kind() == Cell::Kind::Functor && validate_functor(f.as_functor()).empty();
  }
  bool is_two_cell(const Cell& a) const override {
    return a.kind() == Cell::Kind::Transformation && validate_transformation(a.as_transformation()).empty();
  }

  double enumeration_limit() const override { return limit_; }

 private:
  double limit_;
};

class Op1Bicat final : public Bicategory {
 public:
  explicit Op1Bicat(BicatPtr b) : b_(std::move(b)) {}
  const BicatPtr& inner() const { return b_; }

  std::string name() const override { return "op1(" + b_->name() + ")"; }
  Cell src(const Cell& f) const override { return b_->tgt(f); }
  Cell tgt(const Cell& f) const override { return b_->src(f); }
  Cell src2(const Cell& a) const override { return b_->src2(a); }
  Cell tgt2(const Cell& a) const override { return b_->tgt2(a); }
  Cell id1(const Cell& x) const override { return b_->id1(x); }
  Cell comp1(const Cell& f, const Cell& g) const override { return b_->comp1(g, f); }
  Cell id2(const Cell& f) const override { return b_->id2(f); }
  Cell vcomp(const Cell& a, const Cell& c) const override { return b_->vcomp(a, c); }
  Cell lwhisker(const Cell& f, const Cell& a) const override { return b_->rwhisker(a, f); }
  Cell rwhisker(const Cell& a, const Cell& g) const override { return b_->lwhisker(g, a); }
  Cell lunitor(const Cell& f) const override { return b_->runitor(f); }
  Cell linvunitor(const Cell& f) const override { return b_->rinvunitor(f); }
  Cell runitor(const Cell& f) const override { return b_->lunitor(f); }
  Cell rinvunitor(const Cell& f) const override { return b_->linvunitor(f); }
  Cell lassociator(const Cell& f, const Cell& g, const Cell& h) const override { return b_->rassociator(h, g, f); }
  Cell rassociator(const Cell& f, const Cell& g, const Cell& h) const override { return b_->lassociator(h, g, f); }
  std::vector<Cell> one_cells(const Cell& x, const Cell& y) const override { return b_->one_cells(y, x); }
  std::vector<Cell> two_cells(const Cell& f, const Cell& g) const override { return b_->two_cells(f, g); }
  bool is_object(const Cell& x) const override { return b_->is_object(x); }
  bool is_one_cell(const Cell& f) const override { return b_->is_one_cell(f); }
  bool is_two_cell(const Cell& a) const override { return b_->is_two_cell(a); }
  double enumeration_limit() const override { return b_->enumeration_limit(); }

 private:
  BicatPtr b_;
};

class Op2Bicat final : public Bicategory {
 public:
  explicit Op2Bicat(BicatPtr b) : b_(std::move(b)) {}
  const BicatPtr& inner() const { return b_; }

  std::string name() const override { return "op2(" + b_->name() + ")"; }
  Cell src(const Cell& f) const override { return b_->src(f); }
  Cell tgt(const Cell& f) const override { return b_->tgt(f); }
  Cell src2(const Cell& a) const override { return b_->tgt2(a); }
  Cell tgt2(const Cell& a) const override { return b_->src2(a); }
  Cell id1(const Cell& x) const override { return b_->id1(x); }
  Cell comp1(const Cell& f, const Cell& g) const override { return b_->comp1(f, g); }
  Cell id2(const Cell& f) const override { return b_->id2(f); }
  Cell vcomp(const Cell& a, const Cell& c) const override { return b_->vcomp(c, a); }
  Cell lwhisker(const Cell& f, const Cell& a) const override { return b_->lwhisker(f, a); }
  Cell rwhisker(const Cell& a, const Cell& g) const override { return b_->rwhisker(a, g); }
  Cell lunitor(const Cell& f) const override { return b_->linvunitor(f); }
  Cell linvunitor(const Cell& f) const override { return b_->lunitor(f); }
  Cell runitor(const Cell& f) const override { return b_->rinvunitor(f); }
  Cell rinvunitor(const Cell& f) const override { return b_->runitor(f); }
  Cell lassociator(const Cell& f, const Cell& g, const Cell& h) const override { return b_->rassociator(f, g, h); }
  Cell rassociator(const Cell& f, const Cell& g, const Cell& h) const override { return b_->lassociator(f, g, h); }
  std::vector<Cell> one_cells(const Cell& x, const Cell& y) const override { return b_->one_cells(x, y); }
  std::vector<Cell> two_cells(const Cell& f, const Cell& g) const override { return b_->two_cells(g, f); }
  bool is_object(const Cell& x) const override { return b_->is_object(x); }
  bool is_one_cell(const Cell& f) const override { return b_->is_one_cell(f); }
  bool is_two_cell(const Cell& a) const override { return b_->is_two_cell(a); }
  double enumeration_limit() const override { return b_->enumeration_limit(); }

 private:
  BicatPtr b_;
};

class OverrideBicat final : public Bicategory {
 public:
  OverrideBicat(BicatPtr b, std::string name, BicatOverrides o) : b_(std::move(b)), name_(std::move(name)), o_(std::move(o)) {}

  std::string name() const override { return name_; }
  Cell src(const Cell& f) const override { return b_->src(f); }
  Cell tgt(const Cell& f) const override { return b_->tgt(f); }
  Cell src2(const Cell& a) const override { return b_->src2(a); }
  Cell tgt2(const Cell& a) const override { return b_->tgt2(a); }
  Cell id1(const Cell& x) const override { return b_->id1(x); }
  Cell comp1(const Cell& f, const Cell& g) const override { return b_->comp1(f, g); }
  Cell id2(const Cell& f) const override { return b_->id2(f); }
  Cell vcomp(const Cell& a, const Cell& c) const override { return b_->vcomp(a, c); }
  Cell lwhisker(const Cell& f, const Cell& a) const override { return b_->lwhisker(f, a); }
  Cell rwhisker(const Cell& a, const Cell& g) const override { return b_->rwhisker(a, g); }
  Cell lunitor(const Cell& f) const override { return o_.lunitor ? o_.lunitor(f) : b_->lunitor(f); }
  Cell linvunitor(const Cell& f) const override { return o_.linvunitor ? o_.linvunitor(f) : b_->linvunitor(f); }
  Cell runitor(const Cell& f) const override { return o_.runitor ? o_.runitor(f) : b_->runitor(f); }
  Cell rinvunitor(const Cell& f) const override { return b_->rinvunitor(f); }
  Cell lassociator(const Cell& f, const Cell& g, const Cell& h) const override {
    return o_.lassociator ? o_.lassociator(f, g, h) : b_->lassociator(f, g, h);
  }
  Cell rassociator(const Cell& f, const Cell& g, const Cell& h) const override { return b_->rassociator(f, g, h); }
  std::vector<Cell> one_cells(const Cell& x, const Cell& y) const override { return b_->one_cells(x, y); }
  std::vector<Cell> two_cells(const Cell& f, const Cell& g) const override { return b_->two_cells(f, g); }
  bool is_object(const Cell& x) const override { return b_->is_object(x); }
  bool is_one_cell(const Cell& f) const override { return b_->is_one_cell(f); }
  bool is_two_cell(const Cell& a) const override { return b_->is_two_cell(a); }
  double enumeration_limit() const override { return b_->enumeration_limit(); }

 private:
  BicatPtr b_;
  std::string name_;
  BicatOverrides o_;
};

}  // namespace

BicatPtr cat_fin_bicat(double limit) { return std::make_shared<CatFinBicat>(limit); }

// Dualizing twice hands back the original instance, so cells coincide exactly.
BicatPtr op1(BicatPtr b) {
  if (auto* o = dynamic_cast<const Op1Bicat*>(b.get())) return o->inner();
  return std::make_shared<Op1Bicat>(std::move(b));
}

BicatPtr op2(BicatPtr b) {
  if (auto* o = dynamic_cast<const Op2Bicat*>(b.get())) return o->inner();
  return std::make_shared<Op2Bicat>(std::move(b));
}

BicatPtr override_bicat(BicatPtr base, std::string name, BicatOverrides o) {
  return std::make_shared<OverrideBicat>(std::move(base), std::move(name), std::move(o));
}

// ---------------------------------------------------------------------------
// Hom-categories

int HomCategory::object_of(const Cell& f) const {
  auto it = object_index.find(f);
  if (it == object_index.end()) throw BoundaryError("1-cell not in hom-category: " + f.describe());
  return it->second;
}

int HomCategory::morphism_of(const Cell& a) const {
  auto it = morphism_index.find(a);
  if (it == morphism_index.end()) throw BoundaryError("2-cell not in hom-category: " + a.describe());
  return it->second;
}

namespace {

std::string unique_name(std::set<std::string>& used, std::string n) {
  while (!used.insert(n).second) n += "'";
  return n;
}

}  // namespace

HomCategory hom_category(const Bicategory& b, const Cell& x, const Cell& y) {
  HomCategory h;
  h.objects = b.one_cells(x, y);
  const int n = static_cast<int>(h.objects.size());
  std::set<std::string> used;
  std::vector<std::string> obj_names;
  for (int i = 0; i < n; ++i) {
    h.object_index.emplace(h.objects[i], i);
    obj_names.push_back(unique_name(used, h.objects[i].describe()));
  }
  std::vector<Morphism> mors;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& a : b.two_cells(h.objects[i], h.objects[j])) {
        h.morphism_index.emplace(a, static_cast<int>(mors.size()));
        mors.push_back({unique_name(used, a.describe()), i, j});
        h.morphisms.push_back(std::move(a));
      }
  std::vector<int> ids;
  for (int i = 0; i < n; ++i) ids.push_back(h.morphism_of(b.id2(h.objects[i])));
  const std::size_t m = mors.size();
  std::vector<int> table(m * m, -1);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      if (mors[p].target == mors[q].source) table[p * m + q] = h.morphism_of(b.vcomp(h.morphisms[p], h.morphisms[q]));
  h.category = FinCat::from_indices("hom(" + x.describe() + "," + y.describe() + ")", std::move(obj_names),
                                    std::move(mors), std::move(ids), std::move(table));
  return h;
}

PostcompFunctor postcomp_functor(const Bicategory& b, const Cell& f, const Cell& w) {
  PostcompFunctor p{hom_category(b, w, b.src(f)), hom_category(b, w, b.tgt(f)), {}};
  p.functor.source = p.source.category;
  p.functor.target = p.target.category;
  for (const auto& g : p.source.objects) p.functor.omap.push_back(p.target.object_of(b.comp1(g, f)));
  for (const auto& a : p.source.morphisms) p.functor.mmap.push_back(p.target.morphism_of(b.rwhisker(a, f)));
  return p;
}

// ---------------------------------------------------------------------------
// Searches

std::vector<Cell> inverses_2cell(const Bicategory& b, const Cell& a) {
  const Cell f = b.src2(a);
  const Cell g = b.tgt2(a);
  const Cell idf = b.id2(f);
  const Cell idg = b.id2(g);
  std::vector<Cell> out;
  for (auto& s : b.two_cells(g, f))
    if (b.vcomp(a, s) == idf && b.vcomp(s, a) == idg) out.push_back(std::move(s));
  return out;
}

std::optional<Cell> is_invertible_2cell(const Bicategory& b, const Cell& a) {
  const Cell f = b.src2(a);
  const Cell g = b.tgt2(a);
  const Cell idf = b.id2(f);
  const Cell idg = b.id2(g);
  for (auto& s : b.two_cells(g, f))
    if (b.vcomp(a, s) == idf && b.vcomp(s, a) == idg) return s;
  return std::nullopt;
}

std::optional<AdjointEquivalence> find_adjoint_equivalence(const Bicategory& b, const Cell& f) {
  const Cell x = b.src(f);
  const Cell y = b.tgt(f);
  const Cell idx = b.id1(x);
  const Cell idy = b.id1(y);
  for (const auto& g : b.one_cells(y, x)) {
    const Cell fg = b.comp1(f, g);
    const Cell gf = b.comp1(g, f);
    std::vector<Cell> units;
    for (auto& e : b.two_cells(idx, fg))
      if (is_invertible_2cell(b, e)) units.push_back(std::move(e));
    if (units.empty()) continue;
    std::vector<Cell> counits;
    for (auto& e : b.two_cells(gf, idy))
      if (is_invertible_2cell(b, e)) counits.push_back(std::move(e));
    const Cell idf = b.id2(f);
    const Cell idg = b.id2(g);
    for (const auto& eta : units)
      for (const auto& eps : counits) {
        const Cell t1 = b.chain({b.linvunitor(f), b.rwhisker(eta, f), b.rassociator(f, g, f), b.lwhisker(f, eps),
                                 b.runitor(f)});
        if (t1 != idf) continue;
        const Cell t2 = b.chain({b.rinvunitor(g), b.lwhisker(g, eta), b.lassociator(g, f, g), b.rwhisker(eps, g),
                                 b.lunitor(g)});
        if (t2 == idg) return AdjointEquivalence{f, g, eta, eps};
      }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Law checking

namespace {

struct SampleIndex {
  std::vector<Cell> objects;
  std::vector<Cell> ones;
  std::vector<Cell> twos;
  std::vector<Cell> one_src;  // parallel to ones
  std::vector<Cell> one_tgt;
  std::vector<Cell> two_src;  // parallel to twos
  std::vector<Cell> two_tgt;
  std::unordered_map<Cell, std::vector<int>, CellHash> ones_from;  // by source object
  std::unordered_map<Cell, std::vector<int>, CellHash> ones_to;    // by target object
  std::unordered_map<Cell, std::vector<int>, CellHash> twos_from;  // by source 1-cell
};

SampleIndex build_index(const Bicategory& b, const Sample& s) {
  SampleIndex ix;
  std::unordered_set<Cell, CellHash> seen_obj;
  std::unordered_set<Cell, CellHash> seen_one;
  std::unordered_set<Cell, CellHash> seen_two;
  auto add_obj = [&](const Cell& x) {
    if (seen_obj.insert(x).second) ix.objects.push_back(x);
  };
  auto add_one = [&](const Cell& f) {
    if (!seen_one.insert(f).second) return;
    ix.ones.push_back(f);
    add_obj(b.src(f));
    add_obj(b.tgt(f));
  };
  auto add_two = [&](const Cell& a) {
    if (!seen_two.insert(a).second) return;
    ix.twos.push_back(a);
    add_one(b.src2(a));
    add_one(b.tgt2(a));
  };
  for (const auto& x : s.objects) add_obj(x);
  for (const auto& f : s.one_cells) add_one(f);
  for (const auto& a : s.two_cells) add_two(a);
  const std::vector<Cell> objs = ix.objects;
  if (s.enumerate_homs)
    for (const auto& x : objs)
      for (const auto& y : objs)
        for (const auto& f : b.one_cells(x, y)) add_one(f);
  for (const auto& x : objs) add_one(b.id1(x));
  const std::vector<Cell> ones = ix.ones;
  if (s.enumerate_homs) {
    std::vector<std::pair<Cell, Cell>> bounds;
    for (const auto& f : ones) bounds.emplace_back(b.src(f), b.tgt(f));
    for (std::size_t i = 0; i < ones.size(); ++i)
      for (std::size_t j = 0; j < ones.size(); ++j)
        if (bounds[i] == bounds[j])
          for (const auto& a : b.two_cells(ones[i], ones[j])) add_two(a);
  }
  for (const auto& f : ones) add_two(b.id2(f));

  for (int i = 0; i < static_cast<int>(ix.ones.size()); ++i) {
    ix.one_src.push_back(b.src(ix.ones[i]));
    ix.one_tgt.push_back(b.tgt(ix.ones[i]));
    ix.ones_from[ix.one_src.back()].push_back(i);
    ix.ones_to[ix.one_tgt.back()].push_back(i);
  }
  for (int i = 0; i < static_cast<int>(ix.twos.size()); ++i) {
    ix.two_src.push_back(b.src2(ix.twos[i]));
    ix.two_tgt.push_back(b.tgt2(ix.twos[i]));
    ix.twos_from[ix.two_src.back()].push_back(i);
  }
  return ix;
}

const std::vector<int>& lookup(const std::unordered_map<Cell, std::vector<int>, CellHash>& m, const Cell& k) {
  static const std::vector<int> empty;
  auto it = m.find(k);
  return it == m.end() ? empty : it->second;
}

class LawRunner {
 public:
  LawRunner(LawReport& r, std::size_t max) : r_(r), max_(max) {}

  template <typename Fn>
  void check(const char* law, std::initializer_list<const Cell*> witnesses, Fn&& fn) {
    if (++r_.instances_checked > max_)
      throw ResourceBoundError("law check exceeded " + std::to_string(max_) + " instances");
    bool ok = false;
    std::string note;
    try {
      ok = fn();
    } catch (const BoundaryError& e) {
      note = e.what();
    }
    if (ok) return;
    std::vector<std::string> w;
    for (const Cell* c : witnesses) w.push_back(c->describe());
    if (!note.empty()) w.push_back(note);
    r_.add(law, std::move(w));
  }

 private:
  LawReport& r_;
  std::size_t max_;
};

}  // namespace

LawReport check_bicat_laws(const Bicategory& b, const Sample& sample) {
  LawReport r;
  const SampleIndex ix = build_index(b, sample);
  LawRunner run(r, sample.max_instances);
  const auto& ones = ix.ones;
  const auto& twos = ix.twos;
  auto composable_after = [&](int i) -> const std::vector<int>& { return lookup(ix.ones_from, ix.one_tgt[i]); };
  auto twos_after = [&](int i) -> const std::vector<int>& { return lookup(ix.twos_from, ix.two_tgt[i]); };

  // Typing and validity of the structural cells.
  for (int i = 0; i < static_cast<int>(ones.size()); ++i) {
    const Cell& f = ones[i];
    const Cell idx = b.id1(ix.one_src[i]);
    const Cell idy = b.id1(ix.one_tgt[i]);
    run.check("well_typed", {&f}, [&] {
      const Cell l = b.lunitor(f), li = b.linvunitor(f), rr = b.runitor(f), ri = b.rinvunitor(f);
      const Cell idf = b.comp1(idx, f), fid = b.comp1(f, idy);
      return b.src2(l) == idf && b.tgt2(l) == f && b.src2(li) == f && b.tgt2(li) == idf && b.src2(rr) == fid &&
             b.tgt2(rr) == f && b.src2(ri) == f && b.tgt2(ri) == fid && b.is_two_cell(l) && b.is_two_cell(li) &&
             b.is_two_cell(rr) && b.is_two_cell(ri);
    });
  }

  // Vertical category structure.
  for (int i = 0; i < static_cast<int>(twos.size()); ++i) {
    const Cell& a = twos[i];
    run.check("id2_left", {&a}, [&] { return b.vcomp(b.id2(ix.two_src[i]), a) == a; });
    run.check("id2_right", {&a}, [&] { return b.vcomp(a, b.id2(ix.two_tgt[i])) == a; });
    for (int j : twos_after(i)) {
      const Cell& c = twos[j];
      const Cell ac = b.vcomp(a, c);
      for (int k : twos_after(j)) {
        const Cell& d = twos[k];
        run.check("vassoc", {&a, &c, &d}, [&] { return b.vcomp(a, b.vcomp(c, d)) == b.vcomp(ac, d); });
      }
    }
  }

  // Whiskering with identities and vertical composites.
  for (int i = 0; i < static_cast<int>(ones.size()); ++i) {
    const Cell& f = ones[i];
    for (int j : composable_after(i)) {
      const Cell& g = ones[j];
      run.check("lwhisker_id2", {&f, &g}, [&] { return b.lwhisker(f, b.id2(g)) == b.id2(b.comp1(f, g)); });
      run.check("id2_rwhisker", {&f, &g}, [&] { return b.rwhisker(b.id2(f), g) == b.id2(b.comp1(f, g)); });
      run.check("runitor_rwhisker", {&f, &g}, [&] {
        const Cell idy = b.id1(ix.one_tgt[i]);
        return b.vcomp(b.lassociator(f, idy, g), b.rwhisker(b.runitor(f), g)) == b.lwhisker(f, b.lunitor(g));
      });
    }
  }
  for (int i = 0; i < static_cast<int>(twos.size()); ++i) {
    const Cell& a = twos[i];
    const Cell x = b.src(ix.two_src[i]);
    const Cell y = b.tgt(ix.two_src[i]);
    for (int j : twos_after(i)) {
      const Cell& c = twos[j];
      const Cell ac = b.vcomp(a, c);
      for (int k = 0; k < static_cast<int>(ones.size()); ++k) {
        if (ix.one_tgt[k] == x) {
          const Cell& f = ones[k];
          run.check("lwhisker_vcomp", {&f, &a, &c},
                    [&] { return b.vcomp(b.lwhisker(f, a), b.lwhisker(f, c)) == b.lwhisker(f, ac); });
        }
        if (ix.one_src[k] == y) {
          const Cell& g = ones[k];
          run.check("rwhisker_vcomp", {&a, &c, &g},
                    [&] { return b.vcomp(b.rwhisker(a, g), b.rwhisker(c, g)) == b.rwhisker(ac, g); });
        }
      }
    }
  }

  // Naturality of unitors and associators, interchange.
  for (int i = 0; i < static_cast<int>(twos.size()); ++i) {
    const Cell& a = twos[i];
    const Cell& f = ix.two_src[i];
    const Cell& g = ix.two_tgt[i];
    const Cell x = b.src(f);
    const Cell y = b.tgt(f);
    run.check("vcomp_lunitor", {&a},
              [&] { return b.vcomp(b.lwhisker(b.id1(x), a), b.lunitor(g)) == b.vcomp(b.lunitor(f), a); });
    run.check("vcomp_runitor", {&a},
              [&] { return b.vcomp(b.rwhisker(a, b.id1(y)), b.runitor(g)) == b.vcomp(b.runitor(f), a); });

    for (int p = 0; p < static_cast<int>(ones.size()); ++p) {
      if (ix.one_tgt[p] == x) {
        const Cell& h = ones[p];  // h : w → x, then a
        for (int q : lookup(ix.ones_to, ix.one_src[p])) {
          const Cell& k = ones[q];  // k : v → w
          run.check("lwhisker_lwhisker", {&k, &h, &a}, [&] {
            return b.vcomp(b.lwhisker(k, b.lwhisker(h, a)), b.lassociator(k, h, g)) ==
                   b.vcomp(b.lassociator(k, h, f), b.lwhisker(b.comp1(k, h), a));
          });
        }
        for (int q : lookup(ix.ones_from, y)) {
          const Cell& k = ones[q];
          run.check("rwhisker_lwhisker", {&h, &a, &k}, [&] {
            return b.vcomp(b.lwhisker(h, b.rwhisker(a, k)), b.lassociator(h, g, k)) ==
                   b.vcomp(b.lassociator(h, f, k), b.rwhisker(b.lwhisker(h, a), k));
          });
        }
      }
      if (ix.one_src[p] == y) {
        const Cell& h = ones[p];
        for (int q : composable_after(p)) {
          const Cell& k = ones[q];
          run.check("rwhisker_rwhisker", {&a, &h, &k}, [&] {
            return b.vcomp(b.lassociator(f, h, k), b.rwhisker(b.rwhisker(a, h), k)) ==
                   b.vcomp(b.rwhisker(a, b.comp1(h, k)), b.lassociator(g, h, k));
          });
        }
      }
    }
    for (int j = 0; j < static_cast<int>(twos.size()); ++j) {
      if (b.src(ix.two_src[j]) != y) continue;
      const Cell& c = twos[j];
      const Cell& h = ix.two_src[j];
      const Cell& k = ix.two_tgt[j];
      run.check("vcomp_whisker", {&a, &c},
                [&] { return b.vcomp(b.rwhisker(a, h), b.lwhisker(g, c)) == b.vcomp(b.lwhisker(f, c), b.rwhisker(a, k)); });
    }
  }

  // Chosen inverses.
  for (int i = 0; i < static_cast<int>(ones.size()); ++i) {
    const Cell& f = ones[i];
    const Cell idf = b.id2(f);
    const Cell idx = b.id1(ix.one_src[i]);
    const Cell idy = b.id1(ix.one_tgt[i]);
    run.check("lunitor_linvunitor", {&f}, [&] { return b.vcomp(b.lunitor(f), b.linvunitor(f)) == b.id2(b.comp1(idx, f)); });
    run.check("linvunitor_lunitor", {&f}, [&] { return b.vcomp(b.linvunitor(f), b.lunitor(f)) == idf; });
    run.check("runitor_rinvunitor", {&f}, [&] { return b.vcomp(b.runitor(f), b.rinvunitor(f)) == b.id2(b.comp1(f, idy)); });
    run.check("rinvunitor_runitor", {&f}, [&] { return b.vcomp(b.rinvunitor(f), b.runitor(f)) == idf; });
  }
  for (int i = 0; i < static_cast<int>(ones.size()); ++i) {
    const Cell& f = ones[i];
    for (int j : composable_after(i)) {
      const Cell& g = ones[j];
      const Cell fg = b.comp1(f, g);
      for (int k : composable_after(j)) {
        const Cell& h = ones[k];
        const Cell l = b.lassociator(f, g, h);
        const Cell rr = b.rassociator(f, g, h);
        run.check("lassociator_rassociator", {&f, &g, &h},
                  [&] { return b.vcomp(l, rr) == b.id2(b.comp1(f, b.comp1(g, h))); });
        run.check("rassociator_lassociator", {&f, &g, &h}, [&] { return b.vcomp(rr, l) == b.id2(b.comp1(fg, h)); });
        run.check("well_typed", {&f, &g, &h}, [&] {
          return b.src2(l) == b.comp1(f, b.comp1(g, h)) && b.tgt2(l) == b.comp1(fg, h) && b.is_two_cell(l) &&
                 b.is_two_cell(rr);
        });
        for (int m : composable_after(k)) {
          const Cell& q = ones[m];
          run.check("lassociator_lassociator", {&f, &g, &h, &q}, [&] {
            const Cell lhs = b.chain({b.lwhisker(f, b.lassociator(g, h, q)), b.lassociator(f, b.comp1(g, h), q),
                                      b.rwhisker(b.lassociator(f, g, h), q)});
            const Cell rhs = b.vcomp(b.lassociator(f, g, b.comp1(h, q)), b.lassociator(fg, h, q));
            return lhs == rhs;
          });
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Pseudofunctors

namespace {

class IdentityPsfunctor final : public Pseudofunctor {
 public:
  explicit IdentityPsfunctor(BicatPtr b) : b_(std::move(b)) {}
  BicatPtr source() const override { return b_; }
  BicatPtr target() const override { return b_; }
  Cell on_object(const Cell& x) const override { return x; }
  Cell on_one(const Cell& f) const override { return f; }
  Cell on_two(const Cell& a) const override { return a; }
  Cell identitor(const Cell& x) const override { return b_->id2(b_->id1(x)); }
  Cell identitor_inv(const Cell& x) const override { return b_->id2(b_->id1(x)); }
  Cell compositor(const Cell& f, const Cell& g) const override { return b_->id2(b_->comp1(f, g)); }
  Cell compositor_inv(const Cell& f, const Cell& g) const override { return b_->id2(b_->comp1(f, g)); }

 private:
  BicatPtr b_;
};

class OverridePsfunctor final : public Pseudofunctor {
 public:
  OverridePsfunctor(PsfunctorPtr f, PsfunctorOverrides o) : f_(std::move(f)), o_(std::move(o)) {}
  BicatPtr source() const override { return f_->source(); }
  BicatPtr target() const override { return f_->target(); }
  Cell on_object(const Cell& x) const override { return f_->on_object(x); }
  Cell on_one(const Cell& f) const override { return f_->on_one(f); }
  Cell on_two(const Cell& a) const override { return f_->on_two(a); }
  Cell identitor(const Cell& x) const override { return o_.identitor ? o_.identitor(x) : f_->identitor(x); }
  Cell identitor_inv(const Cell& x) const override {
    return o_.identitor_inv ? o_.identitor_inv(x) : f_->identitor_inv(x);
  }
  Cell compositor(const Cell& f, const Cell& g) const override { return f_->compositor(f, g); }
  Cell compositor_inv(const Cell& f, const Cell& g) const override { return f_->compositor_inv(f, g); }

 private:
  PsfunctorPtr f_;
  PsfunctorOverrides o_;
};

}  // namespace

PsfunctorPtr identity_psfunctor(BicatPtr b) { return std::make_shared<IdentityPsfunctor>(std::move(b)); }

PsfunctorPtr override_psfunctor(PsfunctorPtr base, PsfunctorOverrides o) {
  return std::make_shared<OverridePsfunctor>(std::move(base), std::move(o));
}

LawReport check_pseudofunctor(const Pseudofunctor& F, const Sample& sample) {
  LawReport r;
  const BicatPtr sb = F.source();
  const BicatPtr tb = F.target();
  const Bicategory& b = *sb;
  const Bicategory& c = *tb;
  const SampleIndex ix = build_index(b, sample);
  LawRunner run(r, sample.max_instances);
  const auto& ones = ix.ones;
  const auto& twos = ix.twos;

  for (const auto& x : ix.objects) {
    run.check("psfunctor_identitor_inverse", {&x}, [&] {
      const Cell i = F.identitor(x), j = F.identitor_inv(x);
      const Cell idFx = c.id1(F.on_object(x));
      return c.vcomp(i, j) == c.id2(idFx) && c.vcomp(j, i) == c.id2(F.on_one(b.id1(x))) && c.is_two_cell(i) &&
             c.is_two_cell(j);
    });
  }
  for (int i = 0; i < static_cast<int>(ones.size()); ++i) {
    const Cell& f = ones[i];
    const Cell Ff = F.on_one(f);
    run.check("psfunctor_id2", {&f}, [&] { return F.on_two(b.id2(f)) == c.id2(Ff); });
    run.check("psfunctor_lunitor", {&f}, [&] {
      const Cell x = ix.one_src[i];
      return c.lunitor(Ff) == c.chain({c.rwhisker(F.identitor(x), Ff), F.compositor(b.id1(x), f), F.on_two(b.lunitor(f))});
    });
    run.check("psfunctor_runitor", {&f}, [&] {
      const Cell y = ix.one_tgt[i];
      return c.runitor(Ff) == c.chain({c.lwhisker(Ff, F.identitor(y)), F.compositor(f, b.id1(y)), F.on_two(b.runitor(f))});
    });
    for (int j : lookup(ix.ones_from, ix.one_tgt[i])) {
      const Cell& g = ones[j];
      const Cell Fg = F.on_one(g);
      run.check("psfunctor_compositor_inverse", {&f, &g}, [&] {
        const Cell p = F.compositor(f, g), q = F.compositor_inv(f, g);
        return c.vcomp(p, q) == c.id2(c.comp1(Ff, Fg)) && c.vcomp(q, p) == c.id2(F.on_one(b.comp1(f, g))) &&
               c.is_two_cell(p) && c.is_two_cell(q);
      });
      for (int k : lookup(ix.ones_from, ix.one_tgt[j])) {
        const Cell& h = ones[k];
        const Cell Fh = F.on_one(h);
        run.check("psfunctor_lassociator", {&f, &g, &h}, [&] {
          const Cell lhs = c.chain({c.lwhisker(Ff, F.compositor(g, h)), F.compositor(f, b.comp1(g, h)),
                                    F.on_two(b.lassociator(f, g, h))});
          const Cell rhs = c.chain({c.lassociator(Ff, Fg, Fh), c.rwhisker(F.compositor(f, g), Fh),
                                    F.compositor(b.comp1(f, g), h)});
          return lhs == rhs;
        });
      }
    }
  }
  for (int i = 0; i < static_cast<int>(twos.size()); ++i) {
    const Cell& a = twos[i];
    const Cell& f1 = ix.two_src[i];
    const Cell& f2 = ix.two_tgt[i];
    const Cell Fa = F.on_two(a);
    for (int j : lookup(ix.twos_from, f2)) {
      const Cell& d = twos[j];
      run.check("psfunctor_vcomp", {&a, &d}, [&] { return F.on_two(b.vcomp(a, d)) == c.vcomp(Fa, F.on_two(d)); });
    }
    const Cell x = b.src(f1);
    const Cell y = b.tgt(f1);
    for (int p = 0; p < static_cast<int>(ones.size()); ++p) {
      if (ix.one_tgt[p] == x) {
        const Cell& f = ones[p];
        run.check("psfunctor_lwhisker", {&f, &a}, [&] {
          return c.vcomp(F.compositor(f, f1), F.on_two(b.lwhisker(f, a))) ==
                 c.vcomp(c.lwhisker(F.on_one(f), Fa), F.compositor(f, f2));
        });
      }
      if (ix.one_src[p] == y) {
        const Cell& g = ones[p];
        run.check("psfunctor_rwhisker", {&a, &g}, [&] {
          return c.vcomp(F.compositor(f1, g), F.on_two(b.rwhisker(a, g))) ==
                 c.vcomp(c.rwhisker(Fa, F.on_one(g)), F.compositor(f2, g));
        });
      }
    }
  }
  return r;
}

}  // namespace bicatmnd
