#include "bicatmnd/fincat.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>
#include <set>
#include <unordered_map>

#include "bicatmnd/hash.hpp"

namespace bicatmnd {

struct FinCat::Data {
  std::string name;
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<int> identities;
  std::vector<int> compose;
  std::vector<std::vector<int>> homs;
  std::unordered_map<std::string, int> object_index;
  std::unordered_map<std::string, int> morphism_index;
  std::size_t hash = 0;
};

namespace {

std::string pair_name(const FinCat& c, int f, int g) {
  return "(" + c.morphism(f).name + ", " + c.morphism(g).name + ")";
}

}  // namespace

FinCat::FinCat() : d_(std::make_shared<Data>()) {}

FinCat FinCat::from_indices(std::string name, std::vector<std::string> objects,
                            std::vector<Morphism> morphisms, std::vector<int> identities,
                            std::vector<int> compose) {
  auto d = std::make_shared<Data>();
  const int n_obj = static_cast<int>(objects.size());
  const int n_mor = static_cast<int>(morphisms.size());
  if (static_cast<int>(identities.size()) != n_obj)
    throw StructuralError("category '" + name + "': identity table size mismatch");
  if (compose.size() != static_cast<std::size_t>(n_mor) * static_cast<std::size_t>(n_mor))
    throw StructuralError("category '" + name + "': composition table size mismatch");

  for (int i = 0; i < n_obj; ++i) {
    if (!d->object_index.emplace(objects[i], i).second)
      throw StructuralError("category '" + name + "': duplicate object '" + objects[i] + "'");
  }
  for (int i = 0; i < n_mor; ++i) {
    const auto& m = morphisms[i];
    if (m.source < 0 || m.source >= n_obj || m.target < 0 || m.target >= n_obj)
      throw StructuralError("category '" + name + "': morphism '" + m.name + "' has a dangling endpoint");
    if (!d->morphism_index.emplace(m.name, i).second)
      throw StructuralError("category '" + name + "': duplicate morphism '" + m.name + "'");
    if (d->object_index.count(m.name))
      throw StructuralError("category '" + name + "': identifier '" + m.name + "' names both an object and a morphism");
  }
  for (int x = 0; x < n_obj; ++x) {
    if (identities[x] < 0 || identities[x] >= n_mor)
      throw StructuralError("category '" + name + "': object '" + objects[x] + "' has no identity");
  }
  for (int f = 0; f < n_mor; ++f) {
    for (int g = 0; g < n_mor; ++g) {
      const int h = compose[static_cast<std::size_t>(f) * n_mor + g];
      const bool composable = morphisms[f].target == morphisms[g].source;
      if (composable && (h < 0 || h >= n_mor))
        throw StructuralError("category '" + name + "': missing composite for (" + morphisms[f].name + ", " +
                              morphisms[g].name + ")");
      if (!composable && h != -1)
        throw StructuralError("category '" + name + "': composite given for non-composable pair (" +
                              morphisms[f].name + ", " + morphisms[g].name + ")");
    }
  }

  d->homs.assign(static_cast<std::size_t>(n_obj) * n_obj, {});
  for (int f = 0; f < n_mor; ++f)
    d->homs[static_cast<std::size_t>(morphisms[f].source) * n_obj + morphisms[f].target].push_back(f);

  std::size_t h = 0x5eed;
  detail::hash_combine(h, std::hash<std::size_t>{}(objects.size()));
  for (const auto& o : objects) detail::hash_combine(h, std::hash<std::string>{}(o));
  for (const auto& m : morphisms) {
    detail::hash_combine(h, std::hash<std::string>{}(m.name));
    detail::hash_combine(h, static_cast<std::size_t>(m.source));
    detail::hash_combine(h, static_cast<std::size_t>(m.target));
  }
  h = detail::hash_range(h, identities);
  h = detail::hash_range(h, compose);

  d->name = std::move(name);
  d->objects = std::move(objects);
  d->morphisms = std::move(morphisms);
  d->identities = std::move(identities);
  d->compose = std::move(compose);
  d->hash = h;
  FinCat c;
  c.d_ = std::move(d);
  return c;
}

FinCat FinCat::from_tables(std::string name, const std::vector<std::string>& objects,
                           const std::vector<Triple>& morphisms,
                           const std::vector<std::pair<std::string, std::string>>& identities,
                           const std::vector<Triple>& compose) {
  std::unordered_map<std::string, int> obj_index;
  for (int i = 0; i < static_cast<int>(objects.size()); ++i)
    if (!obj_index.emplace(objects[i], i).second)
      throw StructuralError("category '" + name + "': duplicate object '" + objects[i] + "'");
  auto resolve_obj = [&](const std::string& id, const std::string& ctx) {
    auto it = obj_index.find(id);
    if (it == obj_index.end()) throw UnresolvedNameError(id, "category '" + name + "' " + ctx);
    return it->second;
  };

  std::vector<Morphism> mors;
  std::unordered_map<std::string, int> mor_index;
  for (const auto& [id, s, t] : morphisms) {
    const int src = resolve_obj(s, "morphism '" + id + "'");
    const int tgt = resolve_obj(t, "morphism '" + id + "'");
    if (!mor_index.emplace(id, static_cast<int>(mors.size())).second)
      throw StructuralError("category '" + name + "': duplicate morphism '" + id + "'");
    mors.push_back({id, src, tgt});
  }
  auto resolve_mor = [&](const std::string& id, const std::string& ctx) {
    auto it = mor_index.find(id);
    if (it == mor_index.end()) throw UnresolvedNameError(id, "category '" + name + "' " + ctx);
    return it->second;
  };

  std::vector<int> ids(objects.size(), -1);
  for (const auto& [o, m] : identities) {
    const int x = resolve_obj(o, "identity table");
    if (ids[x] != -1) throw StructuralError("category '" + name + "': duplicate identity for '" + o + "'");
    ids[x] = resolve_mor(m, "identity table");
  }
  for (std::size_t x = 0; x < ids.size(); ++x)
    if (ids[x] == -1) throw StructuralError("category '" + name + "': object '" + objects[x] + "' has no identity");

  const std::size_t n = mors.size();
  std::vector<int> table(n * n, -1);
  std::vector<bool> seen(n * n, false);
  for (const auto& [f, g, h] : compose) {
    const int fi = resolve_mor(f, "composition table");
    const int gi = resolve_mor(g, "composition table");
    const int hi = resolve_mor(h, "composition table");
    const std::size_t k = static_cast<std::size_t>(fi) * n + gi;
    if (seen[k]) throw StructuralError("category '" + name + "': duplicate composite for (" + f + ", " + g + ")");
    seen[k] = true;
    if (mors[fi].target != mors[gi].source)
      throw StructuralError("category '" + name + "': composite given for non-composable pair (" + f + ", " + g + ")");
    table[k] = hi;
  }
  return from_indices(std::move(name), objects, std::move(mors), std::move(ids), std::move(table));
}

const std::string& FinCat::name() const { return d_->name; }

FinCat FinCat::renamed(std::string name) const {
  return from_indices(std::move(name), d_->objects, d_->morphisms, d_->identities, d_->compose);
}

int FinCat::object_count() const { return static_cast<int>(d_->objects.size()); }
int FinCat::morphism_count() const { return static_cast<int>(d_->morphisms.size()); }
const std::string& FinCat::object(int x) const { return d_->objects.at(static_cast<std::size_t>(x)); }
const Morphism& FinCat::morphism(int f) const { return d_->morphisms.at(static_cast<std::size_t>(f)); }
const std::vector<std::string>& FinCat::objects() const { return d_->objects; }
const std::vector<Morphism>& FinCat::morphisms() const { return d_->morphisms; }
int FinCat::identity(int x) const { return d_->identities[static_cast<std::size_t>(x)]; }

int FinCat::compose(int f, int g) const {
  return d_->compose[static_cast<std::size_t>(f) * d_->morphisms.size() + static_cast<std::size_t>(g)];
}

const std::vector<int>& FinCat::hom(int x, int y) const {
  return d_->homs[static_cast<std::size_t>(x) * d_->objects.size() + static_cast<std::size_t>(y)];
}

std::optional<int> FinCat::find_object(const std::string& id) const {
  auto it = d_->object_index.find(id);
  if (it == d_->object_index.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FinCat::find_morphism(const std::string& id) const {
  auto it = d_->morphism_index.find(id);
  if (it == d_->morphism_index.end()) return std::nullopt;
  return it->second;
}

int FinCat::object_index(const std::string& id) const {
  if (auto x = find_object(id)) return *x;
  throw UnresolvedNameError(id, "objects of '" + name() + "'");
}

int FinCat::morphism_index(const std::string& id) const {
  if (auto f = find_morphism(id)) return *f;
  throw UnresolvedNameError(id, "morphisms of '" + name() + "'");
}

std::size_t FinCat::hash() const { return d_->hash; }

bool operator==(const FinCat& a, const FinCat& b) {
  if (a.d_ == b.d_) return true;
  if (a.d_->hash != b.d_->hash) return false;
  if (a.d_->objects != b.d_->objects || a.d_->identities != b.d_->identities || a.d_->compose != b.d_->compose)
    return false;
  const auto& ma = a.d_->morphisms;
  const auto& mb = b.d_->morphisms;
  if (ma.size() != mb.size()) return false;
  for (std::size_t i = 0; i < ma.size(); ++i)
    if (ma[i].name != mb[i].name || ma[i].source != mb[i].source || ma[i].target != mb[i].target) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Functors and natural transformations

Functor Functor::identity(const FinCat& c) {
  Functor f{c, c, {}, {}};
  for (int x = 0; x < c.object_count(); ++x) f.omap.push_back(x);
  for (int m = 0; m < c.morphism_count(); ++m) f.mmap.push_back(m);
  return f;
}

Functor Functor::from_tables(const FinCat& source, const FinCat& target,
                             const std::map<std::string, std::string>& objects,
                             const std::map<std::string, std::string>& morphisms) {
  Functor f{source, target, std::vector<int>(source.object_count(), -1),
            std::vector<int>(source.morphism_count(), -1)};
  for (const auto& [k, v] : objects) f.omap[source.object_index(k)] = target.object_index(v);
  for (const auto& [k, v] : morphisms) f.mmap[source.morphism_index(k)] = target.morphism_index(v);
  for (int x = 0; x < source.object_count(); ++x)
    if (f.omap[x] < 0) throw StructuralError("functor: no image for object '" + source.object(x) + "'");
  for (int m = 0; m < source.morphism_count(); ++m)
    if (f.mmap[m] < 0) throw StructuralError("functor: no image for morphism '" + source.morphism(m).name + "'");
  return f;
}

std::size_t Functor::hash() const {
  std::size_t h = 0xf00d;
  detail::hash_combine(h, source.hash());
  detail::hash_combine(h, target.hash());
  h = detail::hash_range(h, omap);
  return detail::hash_range(h, mmap);
}

std::string Functor::describe() const {
  std::string s = "<";
  for (std::size_t i = 0; i < omap.size(); ++i) s += (i ? "," : "") + target.object(omap[i]);
  s += "|";
  for (std::size_t i = 0; i < mmap.size(); ++i) s += (i ? "," : "") + target.morphism(mmap[i]).name;
  return s + ">";
}

bool operator==(const Functor& a, const Functor& b) {
  return a.omap == b.omap && a.mmap == b.mmap && a.source == b.source && a.target == b.target;
}

NatTrans NatTrans::identity(const Functor& f) {
  NatTrans t{f, f, {}};
  for (int x = 0; x < f.source.object_count(); ++x) t.components.push_back(f.target.identity(f.obj(x)));
  return t;
}

NatTrans NatTrans::from_tables(const Functor& source, const Functor& target,
                               const std::map<std::string, std::string>& components) {
  if (!(source.source == target.source) || !(source.target == target.target))
    throw StructuralError("transformation between functors with different boundaries");
  NatTrans t{source, target, std::vector<int>(source.source.object_count(), -1)};
  for (const auto& [k, v] : components) t.components[source.source.object_index(k)] = source.target.morphism_index(v);
  for (int x = 0; x < source.source.object_count(); ++x)
    if (t.components[x] < 0)
      throw StructuralError("transformation: no component at '" + source.source.object(x) + "'");
  return t;
}

std::size_t NatTrans::hash() const {
  std::size_t h = 0xbeef;
  detail::hash_combine(h, source.hash());
  detail::hash_combine(h, target.hash());
  return detail::hash_range(h, components);
}

std::string NatTrans::describe() const {
  std::string s = source.describe() + "=>" + target.describe() + ":[";
  for (std::size_t i = 0; i < components.size(); ++i) s += (i ? "," : "") + source.target.morphism(components[i]).name;
  return s + "]";
}

bool operator==(const NatTrans& a, const NatTrans& b) {
  return a.components == b.components && a.source == b.source && a.target == b.target;
}

// ---------------------------------------------------------------------------
// Law checks

LawReport validate_category(const FinCat& c) {
  LawReport r;
  const int n_obj = c.object_count();
  const int n_mor = c.morphism_count();
  for (int x = 0; x < n_obj; ++x) {
    ++r.instances_checked;
    const auto& id = c.morphism(c.identity(x));
    if (id.source != x || id.target != x) r.add("identity-typing", {c.object(x), id.name});
  }
  for (int f = 0; f < n_mor; ++f) {
    for (int g = 0; g < n_mor; ++g) {
      const int h = c.compose(f, g);
      if (h < 0) continue;
      ++r.instances_checked;
      if (c.morphism(h).source != c.morphism(f).source || c.morphism(h).target != c.morphism(g).target)
        r.add("composition-typing", {pair_name(c, f, g), c.morphism(h).name});
    }
  }
  for (int f = 0; f < n_mor; ++f) {
    const auto& m = c.morphism(f);
    r.instances_checked += 2;
    if (c.compose(c.identity(m.source), f) != f) r.add("left-unit", {m.name});
    if (c.compose(f, c.identity(m.target)) != f) r.add("right-unit", {m.name});
  }
  for (int f = 0; f < n_mor; ++f) {
    for (int g = 0; g < n_mor; ++g) {
      const int fg = c.compose(f, g);
      if (fg < 0) continue;
      for (int h = 0; h < n_mor; ++h) {
        const int gh = c.compose(g, h);
        if (gh < 0) continue;
        const int left = c.compose(fg, h);
        const int right = c.compose(f, gh);
        ++r.instances_checked;
        if (left < 0 || right < 0 || left != right)
          r.add("associativity", {c.morphism(f).name, c.morphism(g).name, c.morphism(h).name});
      }
    }
  }
  return r;
}

LawReport validate_functor(const Functor& F) {
  LawReport r;
  const FinCat& c = F.source;
  const FinCat& d = F.target;
  if (static_cast<int>(F.omap.size()) != c.object_count() || static_cast<int>(F.mmap.size()) != c.morphism_count()) {
    r.add("functor-shape", {F.describe()});
    return r;
  }
  for (int f = 0; f < c.morphism_count(); ++f) {
    ++r.instances_checked;
    const auto& m = c.morphism(f);
    const auto& img = d.morphism(F.mor(f));
    if (img.source != F.obj(m.source) || img.target != F.obj(m.target)) r.add("functor-typing", {m.name, img.name});
  }
  for (int x = 0; x < c.object_count(); ++x) {
    ++r.instances_checked;
    if (F.mor(c.identity(x)) != d.identity(F.obj(x))) r.add("functor-identity", {c.object(x)});
  }
  for (int f = 0; f < c.morphism_count(); ++f) {
    for (int g = 0; g < c.morphism_count(); ++g) {
      const int h = c.compose(f, g);
      if (h < 0) continue;
      ++r.instances_checked;
      if (d.compose(F.mor(f), F.mor(g)) != F.mor(h)) r.add("functor-composition", {pair_name(c, f, g)});
    }
  }
  return r;
}

LawReport validate_transformation(const NatTrans& t) {
  LawReport r;
  const FinCat& c = t.source.source;
  const FinCat& d = t.source.target;
  if (!(t.target.source == c) || !(t.target.target == d) || static_cast<int>(t.components.size()) != c.object_count()) {
    r.add("transformation-shape", {t.describe()});
    return r;
  }
  for (int x = 0; x < c.object_count(); ++x) {
    ++r.instances_checked;
    const auto& m = d.morphism(t.at(x));
    if (m.source != t.source.obj(x) || m.target != t.target.obj(x)) r.add("component-typing", {c.object(x), m.name});
  }
  if (!r.empty()) return r;
  for (int f = 0; f < c.morphism_count(); ++f) {
    const auto& m = c.morphism(f);
    ++r.instances_checked;
    if (d.compose(t.source.mor(f), t.at(m.target)) != d.compose(t.at(m.source), t.target.mor(f)))
      r.add("naturality", {m.name});
  }
  return r;
}

// ---------------------------------------------------------------------------
// Operations

Functor compose(const Functor& f, const Functor& g) {
  if (!(f.target == g.source)) throw BoundaryError("functor composite: target of first is not source of second");
  Functor h{f.source, g.target, {}, {}};
  h.omap.reserve(f.omap.size());
  h.mmap.reserve(f.mmap.size());
  for (int x : f.omap) h.omap.push_back(g.obj(x));
  for (int m : f.mmap) h.mmap.push_back(g.mor(m));
  return h;
}

NatTrans vcomp(const NatTrans& a, const NatTrans& b) {
  if (!(a.target == b.source)) throw BoundaryError("vertical composite: boundaries do not match");
  NatTrans t{a.source, b.target, {}};
  const FinCat& d = a.source.target;
  t.components.reserve(a.components.size());
  for (std::size_t x = 0; x < a.components.size(); ++x) t.components.push_back(d.compose(a.components[x], b.components[x]));
  return t;
}

NatTrans whisker_left(const Functor& f, const NatTrans& t) {
  if (!(f.target == t.source.source)) throw BoundaryError("left whiskering: boundaries do not match");
  NatTrans r{compose(f, t.source), compose(f, t.target), {}};
  r.components.reserve(f.omap.size());
  for (int x : f.omap) r.components.push_back(t.at(x));
  return r;
}

NatTrans whisker_right(const NatTrans& t, const Functor& g) {
  if (!(t.source.target == g.source)) throw BoundaryError("right whiskering: boundaries do not match");
  NatTrans r{compose(t.source, g), compose(t.target, g), {}};
  r.components.reserve(t.components.size());
  for (int c : t.components) r.components.push_back(g.mor(c));
  return r;
}

NatTrans hcomp(const NatTrans& a, const NatTrans& b) { return vcomp(whisker_right(a, b.source), whisker_left(a.target, b)); }

namespace {

double candidate_count(const FinCat& c, const FinCat& d) {
  return std::pow(static_cast<double>(d.object_count()), c.object_count()) *
         std::pow(static_cast<double>(d.morphism_count()), c.morphism_count());
}

std::string fmt_count(double x) {
  std::ostringstream out;
  out << std::setprecision(12) << x;
  return out.str();
}

}  // namespace

std::vector<Functor> enumerate_functors(const FinCat& c, const FinCat& d, double limit) {
  const double candidates = candidate_count(c, d);
  if (candidates > limit)
    throw ResourceBoundError("functor enumeration " + c.name() + " -> " + d.name() + " has " +
                             fmt_count(candidates) + " candidate maps (limit " + fmt_count(limit) + ")");
  std::vector<Functor> out;
  const int n_obj = c.object_count();
  const int n_mor = c.morphism_count();
  if (n_obj > 0 && d.object_count() == 0) return out;

  // Composition constraints (f, g, f;g), bucketed by the largest index so each
  // one is checked as soon as all three images are assigned.
  std::vector<std::vector<std::array<int, 3>>> constraints(static_cast<std::size_t>(n_mor));
  for (int f = 0; f < n_mor; ++f)
    for (int g = 0; g < n_mor; ++g) {
      const int h = c.compose(f, g);
      if (h >= 0) constraints[std::max({f, g, h})].push_back({f, g, h});
    }
  std::vector<int> identity_of(static_cast<std::size_t>(n_mor), -1);
  for (int x = 0; x < n_obj; ++x) identity_of[c.identity(x)] = x;

  std::vector<int> omap(static_cast<std::size_t>(n_obj), 0);
  std::vector<int> mmap(static_cast<std::size_t>(n_mor), -1);
  std::function<void(int)> assign = [&](int k) {
    if (k == n_mor) {
      out.push_back(Functor{c, d, omap, mmap});
      return;
    }
    const auto& m = c.morphism(k);
    const auto& cands = d.hom(omap[m.source], omap[m.target]);
    for (int cand : cands) {
      if (identity_of[k] >= 0 && cand != d.identity(omap[identity_of[k]])) continue;
      mmap[k] = cand;
      bool ok = true;
      for (const auto& [f, g, h] : constraints[k])
        if (d.compose(mmap[f], mmap[g]) != mmap[h]) {
          ok = false;
          break;
        }
      if (ok) assign(k + 1);
    }
    mmap[k] = -1;
  };

  // Odometer over object maps, first object most significant.
  while (true) {
    assign(0);
    int i = n_obj - 1;
    while (i >= 0 && omap[i] == d.object_count() - 1) omap[i--] = 0;
    if (i < 0) break;
    ++omap[i];
  }
  return out;
}

std::vector<NatTrans> enumerate_transformations(const Functor& F, const Functor& G) {
  if (!(F.source == G.source) || !(F.target == G.target))
    throw BoundaryError("transformations requested between non-parallel functors");
  const FinCat& c = F.source;
  const FinCat& d = F.target;
  const int n_obj = c.object_count();
  std::vector<std::vector<int>> checks(static_cast<std::size_t>(n_obj));
  for (int f = 0; f < c.morphism_count(); ++f) {
    const auto& m = c.morphism(f);
    checks[std::max(m.source, m.target)].push_back(f);
  }
  std::vector<NatTrans> out;
  std::vector<int> comps(static_cast<std::size_t>(n_obj), -1);
  std::function<void(int)> assign = [&](int x) {
    if (x == n_obj) {
      out.push_back(NatTrans{F, G, comps});
      return;
    }
    for (int cand : d.hom(F.obj(x), G.obj(x))) {
      comps[x] = cand;
      bool ok = true;
      for (int f : checks[x]) {
        const auto& m = c.morphism(f);
        if (d.compose(F.mor(f), comps[m.target]) != d.compose(comps[m.source], G.mor(f))) {
          ok = false;
          break;
        }
      }
      if (ok) assign(x + 1);
    }
    comps[x] = -1;
  };
  assign(0);
  return out;
}

std::optional<int> FunctorCategory::index_of(const Functor& f) const {
  for (std::size_t i = 0; i < functors.size(); ++i)
    if (functors[i] == f) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> FunctorCategory::index_of(const NatTrans& t) const {
  for (std::size_t i = 0; i < transformations.size(); ++i)
    if (transformations[i] == t) return static_cast<int>(i);
  return std::nullopt;
}

FunctorCategory functor_category(const FinCat& c, const FinCat& d, double limit) {
  FunctorCategory fc;
  fc.functors = enumerate_functors(c, d, limit);
  const int n = static_cast<int>(fc.functors.size());
  std::vector<std::string> objects;
  for (const auto& f : fc.functors) objects.push_back(f.describe());

  std::vector<Morphism> morphisms;
  std::vector<int> identities(static_cast<std::size_t>(n), -1);
  std::map<std::vector<int>, int> index;  // [source, target, components...] -> morphism
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (auto& t : enumerate_transformations(fc.functors[i], fc.functors[j])) {
        std::vector<int> key{i, j};
        key.insert(key.end(), t.components.begin(), t.components.end());
        const int id = static_cast<int>(morphisms.size());
        index.emplace(std::move(key), id);
        if (i == j && t == NatTrans::identity(fc.functors[i])) identities[i] = id;
        morphisms.push_back({t.describe(), i, j});
        fc.transformations.push_back(std::move(t));
      }
    }
  }
  const std::size_t m = morphisms.size();
  std::vector<int> table(m * m, -1);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (morphisms[a].target != morphisms[b].source) continue;
      const NatTrans t = vcomp(fc.transformations[a], fc.transformations[b]);
      std::vector<int> key{morphisms[a].source, morphisms[b].target};
      key.insert(key.end(), t.components.begin(), t.components.end());
      table[a * m + b] = index.at(key);
    }
  }
  fc.category = FinCat::from_indices("[" + c.name() + "," + d.name() + "]", std::move(objects), std::move(morphisms),
                                     std::move(identities), std::move(table));
  return fc;
}

// ---------------------------------------------------------------------------
// Decision procedures

bool is_isomorphism(const FinCat& c, int f) {
  const auto& m = c.morphism(f);
  for (int g : c.hom(m.target, m.source))
    if (c.compose(f, g) == c.identity(m.source) && c.compose(g, f) == c.identity(m.target)) return true;
  return false;
}

std::optional<int> find_iso(const FinCat& c, int x, int y) {
  for (int f : c.hom(x, y))
    if (is_isomorphism(c, f)) return f;
  return std::nullopt;
}

FunctorProps functor_props(const Functor& F) {
  const FinCat& c = F.source;
  const FinCat& d = F.target;
  FunctorProps p;
  p.fully_faithful = true;
  for (int a = 0; a < c.object_count() && p.fully_faithful; ++a) {
    for (int b = 0; b < c.object_count() && p.fully_faithful; ++b) {
      const auto& src = c.hom(a, b);
      const auto& tgt = d.hom(F.obj(a), F.obj(b));
      if (src.size() != tgt.size()) {
        p.fully_faithful = false;
        break;
      }
      std::set<int> images;
      for (int f : src) images.insert(F.mor(f));
      if (images.size() != src.size()) p.fully_faithful = false;
    }
  }
  p.essentially_surjective = true;
  for (int y = 0; y < d.object_count(); ++y) {
    bool hit = false;
    for (int a = 0; a < c.object_count() && !hit; ++a) hit = find_iso(d, F.obj(a), y).has_value();
    if (!hit) {
      p.essentially_surjective = false;
      break;
    }
  }
  p.is_equivalence = p.fully_faithful && p.essentially_surjective;
  return p;
}

bool is_terminal(const FinCat& c, int x) {
  for (int y = 0; y < c.object_count(); ++y)
    if (c.hom(y, x).size() != 1) return false;
  return true;
}

std::vector<TerminalObject> terminal_objects(const FinCat& c) {
  std::vector<TerminalObject> out;
  for (int x = 0; x < c.object_count(); ++x) {
    if (!is_terminal(c, x)) continue;
    TerminalObject t{x, {}};
    for (int y = 0; y < c.object_count(); ++y) t.unique_maps.push_back(c.hom(y, x).front());
    out.push_back(std::move(t));
  }
  return out;
}

std::optional<Functor> find_isomorphism(const FinCat& c, const FinCat& d, double limit) {
  if (c.object_count() != d.object_count() || c.morphism_count() != d.morphism_count()) return std::nullopt;
  for (auto& f : enumerate_functors(c, d, limit)) {
    std::set<int> objs(f.omap.begin(), f.omap.end());
    std::set<int> mors(f.mmap.begin(), f.mmap.end());
    if (static_cast<int>(objs.size()) == d.object_count() && static_cast<int>(mors.size()) == d.morphism_count())
      return f;
  }
  return std::nullopt;
}

}  // namespace bicatmnd
