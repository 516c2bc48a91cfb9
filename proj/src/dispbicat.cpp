#include "bicatmnd/dispbicat.hpp"

#include <algorithm>

namespace bicatmnd {

namespace {

bool contains(const std::vector<Cell>& v, const Cell& c) { return std::find(v.begin(), v.end(), c) != v.end(); }

}  // namespace

bool DispBicategory::is_object_over(const Cell& x, const Cell& xd) const { return contains(objects_over(x), xd); }

bool DispBicategory::is_one_over(const Cell& f, const Cell& X, const Cell& Y, const Cell& fd) const {
  return contains(one_cells_over(f, X, Y), fd);
}

bool DispBicategory::is_two_over(const Cell& a, const Cell& F, const Cell& G, const Cell& ad) const {
  return contains(two_cells_over(a, F, G), ad);
}

// ---------------------------------------------------------------------------
// Total bicategory

namespace {

class TotalBicategory final : public Bicategory {
 public:
  explicit TotalBicategory(DispPtr d) : d_(std::move(d)), b_(d_->base()) {}
  const DispPtr& disp() const { return d_; }

  std::string name() const override { return "total(" + d_->name() + ")"; }

  Cell src(const Cell& F) const override { return total::obj(b_->src(F[0]), F[2]); }
  Cell tgt(const Cell& F) const override { return total::obj(b_->tgt(F[0]), F[3]); }
  Cell src2(const Cell& A) const override { return A[2]; }
  Cell tgt2(const Cell& A) const override { return A[3]; }

  Cell id1(const Cell& X) const override { return total::one(b_->id1(X[0]), d_->id1(X), X[1], X[1]); }
  Cell comp1(const Cell& F, const Cell& G) const override {
    if (F[3] != G[2]) throw BoundaryError("total comp1: displayed boundaries do not match");
    return total::one(b_->comp1(F[0], G[0]), d_->comp1(F, G), F[2], G[3]);
  }
  Cell id2(const Cell& F) const override { return total::two(b_->id2(F[0]), d_->id2(F), F, F); }
  Cell vcomp(const Cell& A, const Cell& B) const override {
    if (A[3] != B[2]) throw BoundaryError("total vcomp: boundaries do not match");
    return total::two(b_->vcomp(A[0], B[0]), d_->vcomp(A, B), A[2], B[3]);
  }
  Cell lwhisker(const Cell& F, const Cell& A) const override {
    return total::two(b_->lwhisker(F[0], A[0]), d_->lwhisker(F, A), comp1(F, A[2]), comp1(F, A[3]));
  }
  Cell rwhisker(const Cell& A, const Cell& G) const override {
    return total::two(b_->rwhisker(A[0], G[0]), d_->rwhisker(A, G), comp1(A[2], G), comp1(A[3], G));
  }
  Cell lunitor(const Cell& F) const override {
    return total::two(b_->lunitor(F[0]), d_->lunitor(F), comp1(id1(src(F)), F), F);
  }
  Cell linvunitor(const Cell& F) const override {
    return total::two(b_->linvunitor(F[0]), d_->linvunitor(F), F, comp1(id1(src(F)), F));
  }
  Cell runitor(const Cell& F) const override {
    return total::two(b_->runitor(F[0]), d_->runitor(F), comp1(F, id1(tgt(F))), F);
  }
  Cell rinvunitor(const Cell& F) const override {
    return total::two(b_->rinvunitor(F[0]), d_->rinvunitor(F), F, comp1(F, id1(tgt(F))));
  }
  Cell lassociator(const Cell& F, const Cell& G, const Cell& H) const override {
    return total::two(b_->lassociator(F[0], G[0], H[0]), d_->lassociator(F, G, H), comp1(F, comp1(G, H)),
                      comp1(comp1(F, G), H));
  }
  Cell rassociator(const Cell& F, const Cell& G, const Cell& H) const override {
    return total::two(b_->rassociator(F[0], G[0], H[0]), d_->rassociator(F, G, H), comp1(comp1(F, G), H),
                      comp1(F, comp1(G, H)));
  }

  std::vector<Cell> one_cells(const Cell& X, const Cell& Y) const override {
    std::vector<Cell> out;
    for (const auto& f : b_->one_cells(X[0], Y[0]))
      for (const auto& fd : d_->one_cells_over(f, X, Y)) out.push_back(total::one(f, fd, X[1], Y[1]));
    return out;
  }
  std::vector<Cell> two_cells(const Cell& F, const Cell& G) const override {
    std::vector<Cell> out;
    for (const auto& a : b_->two_cells(F[0], G[0]))
      for (const auto& ad : d_->two_cells_over(a, F, G)) out.push_back(total::two(a, ad, F, G));
    return out;
  }

  bool is_object(const Cell& X) const override {
    return X.is_tuple() && X.size() == 2 && b_->is_object(X[0]) && d_->is_object_over(X[0], X[1]);
  }
  bool is_one_cell(const Cell& F) const override {
    if (!F.is_tuple() || F.size() != 4 || !b_->is_one_cell(F[0])) return false;
    const Cell X = src(F), Y = tgt(F);
    return d_->is_object_over(X[0], X[1]) && d_->is_object_over(Y[0], Y[1]) && d_->is_one_over(F[0], X, Y, F[1]);
  }
  bool is_two_cell(const Cell& A) const override {
    if (!A.is_tuple() || A.size() != 4 || !b_->is_two_cell(A[0])) return false;
    if (b_->src2(A[0]) != A[2][0] || b_->tgt2(A[0]) != A[3][0]) return false;
    return is_one_cell(A[2]) && is_one_cell(A[3]) && d_->is_two_over(A[0], A[2], A[3], A[1]);
  }

  double enumeration_limit() const override { return b_->enumeration_limit(); }

 private:
  DispPtr d_;
  BicatPtr b_;
};

class ProjectionPsfunctor final : public Pseudofunctor {
 public:
  explicit ProjectionPsfunctor(BicatPtr total) : t_(std::move(total)), b_(disp_of(t_)->base()) {}
  BicatPtr source() const override { return t_; }
  BicatPtr target() const override { return b_; }
  Cell on_object(const Cell& X) const override { return X[0]; }
  Cell on_one(const Cell& F) const override { return F[0]; }
  Cell on_two(const Cell& A) const override { return A[0]; }
  Cell identitor(const Cell& X) const override { return b_->id2(b_->id1(X[0])); }
  Cell identitor_inv(const Cell& X) const override { return b_->id2(b_->id1(X[0])); }
  Cell compositor(const Cell& F, const Cell& G) const override { return b_->id2(b_->comp1(F[0], G[0])); }
  Cell compositor_inv(const Cell& F, const Cell& G) const override { return b_->id2(b_->comp1(F[0], G[0])); }

 private:
  BicatPtr t_;
  BicatPtr b_;
};

}  // namespace

BicatPtr total_bicat(DispPtr d) { return std::make_shared<TotalBicategory>(std::move(d)); }

DispPtr disp_of(const BicatPtr& t) {
  if (auto* tb = dynamic_cast<const TotalBicategory*>(t.get())) return tb->disp();
  return nullptr;
}

PsfunctorPtr projection(BicatPtr t) {
  if (!disp_of(t)) throw BoundaryError("projection requested for a bicategory that is not a total bicategory");
  return std::make_shared<ProjectionPsfunctor>(std::move(t));
}

// ---------------------------------------------------------------------------
// Proof-token layers

namespace {

class PropLayer final : public DispBicategory {
 public:
  PropLayer(BicatPtr b, std::string name, PropLayerData data) : b_(std::move(b)), name_(std::move(name)), d_(std::move(data)) {}

  std::string name() const override { return name_; }
  BicatPtr base() const override { return b_; }

  Cell id1(const Cell& X) const override { return d_.id1 ? d_.id1(X) : tt(); }
  Cell comp1(const Cell& F, const Cell& G) const override { return d_.comp1 ? d_.comp1(F, G) : tt(); }
  Cell id2(const Cell&) const override { return tt(); }
  Cell vcomp(const Cell&, const Cell&) const override { return tt(); }
  Cell lwhisker(const Cell&, const Cell&) const override { return tt(); }
  Cell rwhisker(const Cell&, const Cell&) const override { return tt(); }
  Cell lunitor(const Cell&) const override { return tt(); }
  Cell linvunitor(const Cell&) const override { return tt(); }
  Cell runitor(const Cell&) const override { return tt(); }
  Cell rinvunitor(const Cell&) const override { return tt(); }
  Cell lassociator(const Cell&, const Cell&, const Cell&) const override { return tt(); }
  Cell rassociator(const Cell&, const Cell&, const Cell&) const override { return tt(); }

  std::vector<Cell> objects_over(const Cell& x) const override { return d_.objects_over(x); }
  std::vector<Cell> one_cells_over(const Cell& f, const Cell& X, const Cell& Y) const override {
    return d_.one_cells_over(f, X, Y);
  }
  std::vector<Cell> two_cells_over(const Cell& a, const Cell& F, const Cell& G) const override {
    if (d_.two_cells_over) return d_.two_cells_over(a, F, G);
    if (d_.two_holds && !d_.two_holds(a, F, G)) return {};
    return {tt()};
  }

  bool is_object_over(const Cell& x, const Cell& xd) const override {
    return d_.is_object_over ? d_.is_object_over(x, xd) : DispBicategory::is_object_over(x, xd);
  }
  bool is_one_over(const Cell& f, const Cell& X, const Cell& Y, const Cell& fd) const override {
    return d_.is_one_over ? d_.is_one_over(f, X, Y, fd) : DispBicategory::is_one_over(f, X, Y, fd);
  }
  bool is_two_over(const Cell& a, const Cell& F, const Cell& G, const Cell& ad) const override {
    if (d_.two_cells_over) return DispBicategory::is_two_over(a, F, G, ad);
    return ad == tt() && (!d_.two_holds || d_.two_holds(a, F, G));
  }

 private:
  BicatPtr b_;
  std::string name_;
  PropLayerData d_;
};

}  // namespace

DispPtr prop_layer(BicatPtr base, std::string name, PropLayerData data) {
  return std::make_shared<PropLayer>(std::move(base), std::move(name), std::move(data));
}

DispPtr cell_unit_disp(BicatPtr base, std::string name, PropLayerData data) {
  data.two_holds = nullptr;
  data.two_cells_over = nullptr;
  return prop_layer(std::move(base), std::move(name), std::move(data));
}

DispPtr fullsub_disp(BicatPtr base, std::string name, std::function<bool(const Cell&)> pred) {
  PropLayerData d;
  d.objects_over = [pred](const Cell& x) { return pred(x) ? std::vector<Cell>{tt()} : std::vector<Cell>{}; };
  d.one_cells_over = [](const Cell&, const Cell&, const Cell&) { return std::vector<Cell>{tt()}; };
  d.is_object_over = [pred](const Cell& x, const Cell& xd) { return xd == tt() && pred(x); };
  d.is_one_over = [](const Cell&, const Cell&, const Cell&, const Cell& fd) { return fd == tt(); };
  return cell_unit_disp(std::move(base), std::move(name), std::move(d));
}

// ---------------------------------------------------------------------------
// Product and sigma

namespace pairs {

Cell first_obj(const Cell& X) { return total::obj(X[0], X[1][0]); }
Cell first_one(const Cell& F) { return total::one(F[0], F[1][0], F[2][0], F[3][0]); }
Cell first_two(const Cell& A) { return total::two(A[0], A[1][0], first_one(A[2]), first_one(A[3])); }

Cell second_obj_prod(const Cell& X) { return total::obj(X[0], X[1][1]); }
Cell second_one_prod(const Cell& F) { return total::one(F[0], F[1][1], F[2][1], F[3][1]); }
Cell second_two_prod(const Cell& A) {
  return total::two(A[0], A[1][1], second_one_prod(A[2]), second_one_prod(A[3]));
}

Cell second_obj_sigma(const Cell& X) { return total::obj(first_obj(X), X[1][1]); }
Cell second_one_sigma(const Cell& F) { return total::one(first_one(F), F[1][1], F[2][1], F[3][1]); }
Cell second_two_sigma(const Cell& A) {
  return total::two(first_two(A), A[1][1], second_one_sigma(A[2]), second_one_sigma(A[3]));
}

}  // namespace pairs

namespace {

using pairs::first_obj;
using pairs::first_one;
using pairs::first_two;

// prod and sigma differ only in how the second factor's cells are viewed.
template <bool IsSigma>
class PairDisp final : public DispBicategory {
 public:
  PairDisp(DispPtr d1, DispPtr d2) : d1_(std::move(d1)), d2_(std::move(d2)) {}

  std::string name() const override {
    return std::string(IsSigma ? "sigma(" : "prod(") + d1_->name() + ", " + d2_->name() + ")";
  }
  BicatPtr base() const override { return d1_->base(); }

  static Cell obj2(const Cell& X) { return IsSigma ? pairs::second_obj_sigma(X) : pairs::second_obj_prod(X); }
  static Cell one2(const Cell& F) { return IsSigma ? pairs::second_one_sigma(F) : pairs::second_one_prod(F); }
  static Cell two2(const Cell& A) { return IsSigma ? pairs::second_two_sigma(A) : pairs::second_two_prod(A); }

  Cell id1(const Cell& X) const override { return Cell::tuple({d1_->id1(first_obj(X)), d2_->id1(obj2(X))}); }
  Cell comp1(const Cell& F, const Cell& G) const override {
    return Cell::tuple({d1_->comp1(first_one(F), first_one(G)), d2_->comp1(one2(F), one2(G))});
  }
  Cell id2(const Cell& F) const override { return Cell::tuple({d1_->id2(first_one(F)), d2_->id2(one2(F))}); }
  Cell vcomp(const Cell& A, const Cell& B) const override {
    return Cell::tuple({d1_->vcomp(first_two(A), first_two(B)), d2_->vcomp(two2(A), two2(B))});
  }
  Cell lwhisker(const Cell& F, const Cell& A) const override {
    return Cell::tuple({d1_->lwhisker(first_one(F), first_two(A)), d2_->lwhisker(one2(F), two2(A))});
  }
  Cell rwhisker(const Cell& A, const Cell& G) const override {
    return Cell::tuple({d1_->rwhisker(first_two(A), first_one(G)), d2_->rwhisker(two2(A), one2(G))});
  }
  Cell lunitor(const Cell& F) const override { return Cell::tuple({d1_->lunitor(first_one(F)), d2_->lunitor(one2(F))}); }
  Cell linvunitor(const Cell& F) const override {
    return Cell::tuple({d1_->linvunitor(first_one(F)), d2_->linvunitor(one2(F))});
  }
  Cell runitor(const Cell& F) const override { return Cell::tuple({d1_->runitor(first_one(F)), d2_->runitor(one2(F))}); }
  Cell rinvunitor(const Cell& F) const override {
    return Cell::tuple({d1_->rinvunitor(first_one(F)), d2_->rinvunitor(one2(F))});
  }
  Cell lassociator(const Cell& F, const Cell& G, const Cell& H) const override {
    return Cell::tuple({d1_->lassociator(first_one(F), first_one(G), first_one(H)),
                        d2_->lassociator(one2(F), one2(G), one2(H))});
  }
  Cell rassociator(const Cell& F, const Cell& G, const Cell& H) const override {
    return Cell::tuple({d1_->rassociator(first_one(F), first_one(G), first_one(H)),
                        d2_->rassociator(one2(F), one2(G), one2(H))});
  }

  std::vector<Cell> objects_over(const Cell& x) const override {
    std::vector<Cell> out;
    if constexpr (IsSigma) {
      for (const auto& a : d1_->objects_over(x))
        for (const auto& b : d2_->objects_over(total::obj(x, a))) out.push_back(Cell::tuple({a, b}));
    } else {
      auto bs = d2_->objects_over(x);
      for (const auto& a : d1_->objects_over(x))
        for (const auto& b : bs) out.push_back(Cell::tuple({a, b}));
    }
    return out;
  }

  std::vector<Cell> one_cells_over(const Cell& f, const Cell& X, const Cell& Y) const override {
    std::vector<Cell> out;
    const Cell X1 = first_obj(X), Y1 = first_obj(Y), X2 = obj2(X), Y2 = obj2(Y);
    if constexpr (IsSigma) {
      for (const auto& a : d1_->one_cells_over(f, X1, Y1)) {
        const Cell F1 = total::one(f, a, X1[1], Y1[1]);
        for (const auto& b : d2_->one_cells_over(F1, X2, Y2)) out.push_back(Cell::tuple({a, b}));
      }
    } else {
      auto bs = d2_->one_cells_over(f, X2, Y2);
      for (const auto& a : d1_->one_cells_over(f, X1, Y1))
        for (const auto& b : bs) out.push_back(Cell::tuple({a, b}));
    }
    return out;
  }

  std::vector<Cell> two_cells_over(const Cell& a, const Cell& F, const Cell& G) const override {
    std::vector<Cell> out;
    const Cell F1 = first_one(F), G1 = first_one(G), F2 = one2(F), G2 = one2(G);
    if constexpr (IsSigma) {
      for (const auto& p : d1_->two_cells_over(a, F1, G1)) {
        const Cell A1 = total::two(a, p, F1, G1);
        for (const auto& q : d2_->two_cells_over(A1, F2, G2)) out.push_back(Cell::tuple({p, q}));
      }
    } else {
      auto qs = d2_->two_cells_over(a, F2, G2);
      for (const auto& p : d1_->two_cells_over(a, F1, G1))
        for (const auto& q : qs) out.push_back(Cell::tuple({p, q}));
    }
    return out;
  }

  bool is_object_over(const Cell& x, const Cell& xd) const override {
    if (!xd.is_tuple() || xd.size() != 2) return false;
    const Cell X = total::obj(x, xd);
    return d1_->is_object_over(x, xd[0]) && d2_->is_object_over(obj2(X)[0], xd[1]);
  }
  bool is_one_over(const Cell& f, const Cell& X, const Cell& Y, const Cell& fd) const override {
    if (!fd.is_tuple() || fd.size() != 2) return false;
    const Cell F = total::one(f, fd, X[1], Y[1]);
    const Cell F2 = one2(F);
    return d1_->is_one_over(f, first_obj(X), first_obj(Y), fd[0]) &&
           d2_->is_one_over(F2[0], obj2(X), obj2(Y), fd[1]);
  }
  bool is_two_over(const Cell& a, const Cell& F, const Cell& G, const Cell& ad) const override {
    if (!ad.is_tuple() || ad.size() != 2) return false;
    const Cell A = total::two(a, ad, F, G);
    const Cell A2 = two2(A);
    return d1_->is_two_over(a, first_one(F), first_one(G), ad[0]) && d2_->is_two_over(A2[0], A2[2], A2[3], ad[1]);
  }

 private:
  DispPtr d1_;
  DispPtr d2_;
};

}  // namespace

DispPtr prod_disp(DispPtr d1, DispPtr d2) {
  if (d1->base() != d2->base()) throw BoundaryError("prod_disp: layers over different bases");
  return std::make_shared<PairDisp<false>>(std::move(d1), std::move(d2));
}

DispPtr sigma_disp(DispPtr d1, DispPtr d2) {
  if (disp_of(d2->base()) != d1) throw BoundaryError("sigma_disp: second layer is not over the total of the first");
  return std::make_shared<PairDisp<true>>(std::move(d1), std::move(d2));
}

// ---------------------------------------------------------------------------
// Local properties

LocalProps local_props(const DispBicategory& d, const std::vector<Cell>& base_objects) {
  LocalProps p;
  const BicatPtr b = d.base();
  std::vector<Cell> objs;
  for (const auto& x : base_objects)
    for (const auto& xd : d.objects_over(x)) objs.push_back(total::obj(x, xd));
  for (const auto& X : objs)
    for (const auto& Y : objs) {
      std::vector<Cell> ones;
      for (const auto& f : b->one_cells(X[0], Y[0]))
        for (const auto& fd : d.one_cells_over(f, X, Y)) ones.push_back(total::one(f, fd, X[1], Y[1]));
      for (const auto& F : ones)
        for (const auto& G : ones)
          for (const auto& a : b->two_cells(F[0], G[0])) {
            const auto over = d.two_cells_over(a, F, G);
            ++p.cells_checked;
            if (over.size() > 1) p.locally_propositional = false;
            if (over.empty()) continue;
            auto inv = is_invertible_2cell(*b, a);
            if (!inv) continue;
            const auto back = d.two_cells_over(*inv, G, F);
            for (const auto& ad : over) {
              const Cell A = total::two(a, ad, F, G);
              bool found = false;
              for (const auto& bd : back) {
                const Cell B = total::two(*inv, bd, G, F);
                if (d.vcomp(A, B) == d.id2(F) && d.vcomp(B, A) == d.id2(G)) {
                  found = true;
                  break;
                }
              }
              if (!found) p.locally_groupoidal = false;
            }
          }
    }
  return p;
}

// ---------------------------------------------------------------------------
// Sections

namespace {

class SectionPsfunctor final : public Pseudofunctor {
 public:
  explicit SectionPsfunctor(Section s) : s_(std::move(s)), b_(s_.disp->base()), t_(total_bicat(s_.disp)) {}
  BicatPtr source() const override { return b_; }
  BicatPtr target() const override { return t_; }
  Cell on_object(const Cell& x) const override { return total::obj(x, s_.ob(x)); }
  Cell on_one(const Cell& f) const override {
    return total::one(f, s_.one(f), s_.ob(b_->src(f)), s_.ob(b_->tgt(f)));
  }
  Cell on_two(const Cell& a) const override { return total::two(a, s_.two(a), on_one(b_->src2(a)), on_one(b_->tgt2(a))); }
  Cell identitor(const Cell& x) const override {
    const Cell idx = b_->id1(x);
    return total::two(b_->id2(idx), s_.sid(x), t_->id1(on_object(x)), on_one(idx));
  }
  Cell identitor_inv(const Cell& x) const override {
    const Cell idx = b_->id1(x);
    return total::two(b_->id2(idx), s_.sid_inv(x), on_one(idx), t_->id1(on_object(x)));
  }
  Cell compositor(const Cell& f, const Cell& g) const override {
    const Cell fg = b_->comp1(f, g);
    return total::two(b_->id2(fg), s_.scomp(f, g), t_->comp1(on_one(f), on_one(g)), on_one(fg));
  }
  Cell compositor_inv(const Cell& f, const Cell& g) const override {
    const Cell fg = b_->comp1(f, g);
    return total::two(b_->id2(fg), s_.scomp_inv(f, g), on_one(fg), t_->comp1(on_one(f), on_one(g)));
  }

 private:
  Section s_;
  BicatPtr b_;
  BicatPtr t_;
};

}  // namespace

PsfunctorPtr section_to_psfunctor(Section s) { return std::make_shared<SectionPsfunctor>(std::move(s)); }

// ---------------------------------------------------------------------------
// Terminal-object layer

DispPtr terminal_disp_layer(BicatPtr cat_fin) {
  PropLayerData d;
  d.objects_over = [](const Cell& x) {
    std::vector<Cell> out;
    const FinCat& c = x.as_category();
    for (const auto& t : terminal_objects(c)) out.push_back(Cell::token(c.object(t.object)));
    return out;
  };
  d.one_cells_over = [](const Cell& f, const Cell& X, const Cell&) {
    const Functor& F = f.as_functor();
    auto t = F.source.find_object(X[1].as_token());
    if (t && is_terminal(F.target, F.obj(*t))) return std::vector<Cell>{tt()};
    return std::vector<Cell>{};
  };
  d.is_object_over = [](const Cell& x, const Cell& xd) {
    if (!xd.is_token()) return false;
    auto t = x.as_category().find_object(xd.as_token());
    return t && is_terminal(x.as_category(), *t);
  };
  return cell_unit_disp(std::move(cat_fin), "terminal", std::move(d));
}

}  // namespace bicatmnd
