#include "bicatmnd/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "bicatmnd/corpus.hpp"
#include "bicatmnd/fixtures.hpp"

namespace bicatmnd::cli {

namespace {

const char* const kSections[] = {"categories",  "functors", "transformations", "monads",
                                 "distributive_laws", "adjunctions", "em_cones", "kleisli_cocones"};

std::string ctx_of(const std::string& section, const std::string& name) { return section + " '" + name + "'"; }

const json& field(const json& j, const std::string& key, const std::string& ctx) {
  if (!j.is_object()) throw StructuralError(ctx + ": declaration must be an object");
  auto it = j.find(key);
  if (it == j.end()) throw StructuralError(ctx + ": missing field '" + key + "'");
  return *it;
}

std::string str(const json& j, const std::string& key, const std::string& ctx) {
  const json& v = field(j, key, ctx);
  if (!v.is_string()) throw StructuralError(ctx + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

std::map<std::string, std::string> str_map(const json& j, const std::string& key, const std::string& ctx) {
  const json& v = field(j, key, ctx);
  if (!v.is_object()) throw StructuralError(ctx + ": field '" + key + "' must be an object of strings");
  std::map<std::string, std::string> out;
  for (const auto& [k, x] : v.items()) {
    if (!x.is_string()) throw StructuralError(ctx + ": '" + key + "." + k + "' must be a string");
    out[k] = x.get<std::string>();
  }
  return out;
}

std::vector<FinCat::Triple> triples(const json& j, const std::string& key, const std::string& ctx) {
  const json& v = field(j, key, ctx);
  if (!v.is_array()) throw StructuralError(ctx + ": field '" + key + "' must be an array");
  std::vector<FinCat::Triple> out;
  for (const auto& t : v) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() || !t[2].is_string())
      throw StructuralError(ctx + ": entries of '" + key + "' must be string triples");
    out.emplace_back(t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>());
  }
  return out;
}

void require_empty(const LawReport& r, const std::string& ctx) {
  if (!r.empty()) throw StructuralError(ctx + ": violates " + r.violations.front().law);
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(const std::string& text) {
  std::vector<std::set<std::string>> keys;
  json::parser_callback_t cb = [&](int, json::parse_event_t ev, json& parsed) {
    if (ev == json::parse_event_t::object_start) {
      keys.emplace_back();
    } else if (ev == json::parse_event_t::object_end) {
      keys.pop_back();
    } else if (ev == json::parse_event_t::key) {
      const auto k = parsed.get<std::string>();
      if (!keys.back().insert(k).second) throw StructuralError("duplicate declaration '" + k + "'");
    }
    return true;
  };
  try {
    return json::parse(text, cb);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte);
    std::string msg = e.what();
    if (auto p = msg.find("parse error"); p != std::string::npos) msg = msg.substr(p);
    throw SyntaxError(line, col, msg);
  }
}

FinCat builtin_category(const std::string& name) {
  if (auto c = corpus::category(name)) return *c;
  if (name == "Arrow'") return fixtures::arrow_copy();
  throw UnresolvedNameError(name, "categories");
}

}  // namespace

// ---------------------------------------------------------------------------
// Lookups

FinCat Workspace::category(const std::string& name) const {
  if (auto it = categories.find(name); it != categories.end()) return it->second.value;
  return builtin_category(name);
}

Monad Workspace::monad(const std::string& name) const {
  if (auto it = monads.find(name); it != monads.end()) return it->second.value;
  for (const auto& [n, m] : fixtures::monads())
    if (n == name) return m;
  throw UnresolvedNameError(name, "monads");
}

DistributiveLaw Workspace::distributive_law(const std::string& name) const {
  if (auto it = distributive_laws.find(name); it != distributive_laws.end()) return it->second.value;
  for (const auto& [n, d] : fixtures::distributive_laws())
    if (n == name) return d;
  throw UnresolvedNameError(name, "distributive_laws");
}

Adjunction Workspace::adjunction(const std::string& name) const {
  if (auto it = adjunctions.find(name); it != adjunctions.end()) return it->second.value;
  for (const auto& [n, a] : fixtures::adjunctions())
    if (n == name) return a;
  throw UnresolvedNameError(name, "adjunctions");
}

std::optional<EMCone> Workspace::em_cone(const std::string& name) const {
  if (auto it = em_cones.find(name); it != em_cones.end()) return it->second.value;
  return std::nullopt;
}

std::optional<KleisliCocone> Workspace::kleisli_cocone(const std::string& name) const {
  if (auto it = kleisli_cocones.find(name); it != kleisli_cocones.end()) return it->second.value;
  return std::nullopt;
}

std::optional<std::string> Workspace::kind_of(const std::string& name) const {
  if (categories.count(name)) return "category";
  if (functors.count(name)) return "functor";
  if (transformations.count(name)) return "transformation";
  if (monads.count(name)) return "monad";
  if (distributive_laws.count(name)) return "distributive_law";
  if (adjunctions.count(name)) return "adjunction";
  if (em_cones.count(name)) return "em_cone";
  if (kleisli_cocones.count(name)) return "kleisli_cocone";
  auto found = [&](auto&& fn) {
    try {
      fn();
      return true;
    } catch (const UnresolvedNameError&) {
      return false;
    }
  };
  if (found([&] { builtin_category(name); })) return "category";
  if (found([&] { monad(name); })) return "monad";
  if (found([&] { distributive_law(name); })) return "distributive_law";
  if (found([&] { adjunction(name); })) return "adjunction";
  return std::nullopt;
}

std::vector<FinCat> Workspace::sample_categories(const std::vector<std::string>& names) const {
  std::vector<FinCat> out;
  std::set<std::string> seen;
  std::function<void(const std::string&, int)> add = [&](const std::string& n, int depth) {
    if (depth > 16) throw StructuralError("sample set '" + n + "' is cyclic");
    if (auto it = samples.find(n); it != samples.end()) {
      for (const auto& m : it->second) add(m, depth + 1);
      return;
    }
    if (n == "default") {
      for (const auto& c : corpus::categories()) add(c.name(), depth + 1);
      return;
    }
    if (n == "small") {
      add("One", depth + 1);
      add("Arrow", depth + 1);
      return;
    }
    if (monads.count(n) || kind_of(n) == std::optional<std::string>("monad")) return;
    if (seen.insert(n).second) out.push_back(category(n));
  };
  for (const auto& n : names) add(n, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Resolver {
 public:
  explicit Resolver(Workspace& ws) : ws_(ws) {}

  Functor functor(const json& expr, const std::string& ctx) {
    if (expr.is_array()) {
      if (expr.empty()) throw StructuralError(ctx + ": empty functor composite");
      Functor f = functor(expr[0], ctx);
      for (std::size_t i = 1; i < expr.size(); ++i) {
        const Functor g = functor(expr[i], ctx);
        if (!(f.target == g.source)) throw StructuralError(ctx + ": functor composite does not line up");
        f = compose(f, g);
      }
      return f;
    }
    if (!expr.is_string()) throw StructuralError(ctx + ": functor expression must be a string or an array");
    const auto s = expr.get<std::string>();
    if (s.size() > 4 && s.rfind("id(", 0) == 0 && s.back() == ')')
      return Functor::identity(ws_.category(s.substr(3, s.size() - 4)));
    auto it = ws_.functors.find(s);
    if (it == ws_.functors.end()) throw UnresolvedNameError(s, ctx);
    return it->second.value;
  }

  NatTrans transformation(const std::string& name, const std::string& ctx) {
    auto it = ws_.transformations.find(name);
    if (it == ws_.transformations.end()) throw UnresolvedNameError(name, ctx);
    return it->second.value;
  }

  Monad monad(const std::string& name, const std::string& ctx) {
    try {
      return ws_.monad(name);
    } catch (const UnresolvedNameError&) {
      throw UnresolvedNameError(name, ctx);
    }
  }

 private:
  Workspace& ws_;
};

void check_bounds(const FinCat& c, const Bounds& b) {
  if (c.object_count() > b.max_objects || c.morphism_count() > b.max_morphisms)
    throw ResourceBoundError("category '" + c.name() + "' exceeds the size bounds (" + std::to_string(b.max_objects) +
                             " objects, " + std::to_string(b.max_morphisms) + " morphisms)");
}

}  // namespace

Workspace parse_workspace(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw StructuralError("workspace must be a JSON object");
  Workspace ws;
  for (const auto& [k, v] : doc.items()) {
    static const std::set<std::string> known{"schema_version", "bounds",      "categories", "functors",
                                             "transformations", "monads",     "distributive_laws",
                                             "adjunctions",    "em_cones",    "kleisli_cocones", "samples"};
    if (!known.count(k)) throw StructuralError("unknown section '" + k + "'");
    (void)v;
  }
  if (auto it = doc.find("schema_version"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<int>() != kSchemaVersion)
      throw StructuralError("unsupported schema_version " + it->dump());
  }
  if (auto it = doc.find("bounds"); it != doc.end()) {
    if (!it->is_object()) throw StructuralError("bounds must be an object");
    for (const auto& [k, v] : it->items()) {
      if (!v.is_number() || v.get<double>() < 0) throw StructuralError("bound '" + k + "' must be a non-negative number");
      if (k == "max_objects") ws.bounds.max_objects = v.get<int>();
      else if (k == "max_morphisms") ws.bounds.max_morphisms = v.get<int>();
      else if (k == "enumeration_limit") ws.bounds.enumeration_limit = v.get<double>();
      else throw StructuralError("unknown bound '" + k + "'");
    }
  }

  std::set<std::string> names;
  auto section = [&](const char* key) -> json {
    auto it = doc.find(key);
    if (it == doc.end()) return json::object();
    if (!it->is_object()) throw StructuralError(std::string("section '") + key + "' must be an object");
    for (const auto& [n, v] : it->items()) {
      (void)v;
      if (!names.insert(n).second) throw StructuralError("duplicate declaration '" + n + "'");
    }
    return *it;
  };
  const json cats = section("categories"), funs = section("functors"), trans = section("transformations"),
             mons = section("monads"), dls = section("distributive_laws"), adjs = section("adjunctions"),
             cones = section("em_cones"), cocones = section("kleisli_cocones");

  Resolver res(ws);
  for (const auto& [n, d] : cats.items()) {
    const auto ctx = ctx_of("category", n);
    const json& objs = field(d, "objects", ctx);
    if (!objs.is_array()) throw StructuralError(ctx + ": field 'objects' must be an array");
    std::vector<std::string> objects;
    for (const auto& o : objs) {
      if (!o.is_string()) throw StructuralError(ctx + ": objects must be strings");
      objects.push_back(o.get<std::string>());
    }
    const auto ids = str_map(d, "identities", ctx);
    std::vector<std::pair<std::string, std::string>> id_pairs(ids.begin(), ids.end());
    FinCat c = FinCat::from_tables(n, objects, triples(d, "morphisms", ctx), id_pairs, triples(d, "compose", ctx));
    check_bounds(c, ws.bounds);
    require_empty(validate_category(c), ctx);
    ws.categories.emplace(n, Decl<FinCat>{c, d});
  }
  for (const auto& [n, d] : funs.items()) {
    const auto ctx = ctx_of("functor", n);
    Functor f = Functor::from_tables(ws.category(str(d, "source", ctx)), ws.category(str(d, "target", ctx)),
                                     str_map(d, "objects", ctx), str_map(d, "morphisms", ctx));
    require_empty(validate_functor(f), ctx);
    ws.functors.emplace(n, Decl<Functor>{f, d});
  }
  for (const auto& [n, d] : trans.items()) {
    const auto ctx = ctx_of("transformation", n);
    const Functor s = res.functor(field(d, "source", ctx), ctx), t = res.functor(field(d, "target", ctx), ctx);
    if (!(s.source == t.source) || !(s.target == t.target))
      throw StructuralError(ctx + ": source and target functors are not parallel");
    NatTrans a = NatTrans::from_tables(s, t, str_map(d, "components", ctx));
    require_empty(validate_transformation(a), ctx);
    ws.transformations.emplace(n, Decl<NatTrans>{a, d});
  }
  for (const auto& [n, d] : mons.items()) {
    const auto ctx = ctx_of("monad", n);
    const FinCat c = ws.category(str(d, "category", ctx));
    const Functor t = res.functor(field(d, "endo", ctx), ctx);
    Monad m = cat_monad(c, t, res.transformation(str(d, "unit", ctx), ctx), res.transformation(str(d, "mult", ctx), ctx));
    ws.monads.emplace(n, Decl<Monad>{m, d});
  }
  for (const auto& [n, d] : dls.items()) {
    const auto ctx = ctx_of("distributive law", n);
    DistributiveLaw l{res.monad(str(d, "inner", ctx), ctx), res.monad(str(d, "outer", ctx), ctx),
                      Cell::transformation(res.transformation(str(d, "tau", ctx), ctx))};
    ws.distributive_laws.emplace(n, Decl<DistributiveLaw>{l, d});
  }
  for (const auto& [n, d] : adjs.items()) {
    const auto ctx = ctx_of("adjunction", n);
    Adjunction a{Cell::functor(res.functor(field(d, "left", ctx), ctx)),
                 Cell::functor(res.functor(field(d, "right", ctx), ctx)),
                 Cell::transformation(res.transformation(str(d, "unit", ctx), ctx)),
                 Cell::transformation(res.transformation(str(d, "counit", ctx), ctx))};
    ws.adjunctions.emplace(n, Decl<Adjunction>{a, d});
  }
  for (const auto& [n, d] : cones.items()) {
    const auto ctx = ctx_of("em cone", n);
    EMCone e{res.monad(str(d, "monad", ctx), ctx), Cell::category(ws.category(str(d, "object", ctx))),
             Cell::functor(res.functor(field(d, "mor", ctx), ctx)),
             Cell::transformation(res.transformation(str(d, "cell", ctx), ctx))};
    ws.em_cones.emplace(n, Decl<EMCone>{e, d});
  }
  for (const auto& [n, d] : cocones.items()) {
    const auto ctx = ctx_of("kleisli cocone", n);
    KleisliCocone k{res.monad(str(d, "monad", ctx), ctx), Cell::category(ws.category(str(d, "object", ctx))),
                    Cell::functor(res.functor(field(d, "mor", ctx), ctx)),
                    Cell::transformation(res.transformation(str(d, "cell", ctx), ctx))};
    ws.kleisli_cocones.emplace(n, Decl<KleisliCocone>{k, d});
  }
  if (auto it = doc.find("samples"); it != doc.end()) {
    if (!it->is_object()) throw StructuralError("samples must be an object");
    for (const auto& [n, v] : it->items()) {
      if (!v.is_array()) throw StructuralError("sample set '" + n + "' must be an array");
      std::vector<std::string> items;
      for (const auto& x : v) {
        if (!x.is_string()) throw StructuralError("sample set '" + n + "' must list names");
        items.push_back(x.get<std::string>());
        if (!ws.kind_of(items.back()) && !it->contains(items.back()))
          throw UnresolvedNameError(items.back(), "sample set '" + n + "'");
      }
      ws.samples[n] = items;
    }
  }
  return ws;
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read workspace '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_workspace(ss.str());
}

json serialize(const Workspace& ws) {
  json doc = json::object();
  doc["schema_version"] = kSchemaVersion;
  doc["bounds"] = {{"max_objects", ws.bounds.max_objects},
                   {"max_morphisms", ws.bounds.max_morphisms},
                   {"enumeration_limit", ws.bounds.enumeration_limit}};
  auto put = [&](const char* key, const auto& m) {
    json s = json::object();
    for (const auto& [n, d] : m) s[n] = d.source;
    doc[key] = s;
  };
  put("categories", ws.categories);
  put("functors", ws.functors);
  put("transformations", ws.transformations);
  put("monads", ws.monads);
  put("distributive_laws", ws.distributive_laws);
  put("adjunctions", ws.adjunctions);
  put("em_cones", ws.em_cones);
  put("kleisli_cocones", ws.kleisli_cocones);
  json s = json::object();
  for (const auto& [n, v] : ws.samples) s[n] = v;
  doc["samples"] = s;
  return doc;
}

json category_json(const FinCat& c) {
  json j = json::object();
  j["objects"] = c.objects();
  json mors = json::array(), ids = json::object(), comp = json::array();
  for (const auto& m : c.morphisms()) mors.push_back({m.name, c.object(m.source), c.object(m.target)});
  for (int x = 0; x < c.object_count(); ++x) ids[c.object(x)] = c.morphism(c.identity(x)).name;
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g = 0; g < c.morphism_count(); ++g) {
      const int h = c.compose(f, g);
      if (h >= 0) comp.push_back({c.morphism(f).name, c.morphism(g).name, c.morphism(h).name});
    }
  j["morphisms"] = mors;
  j["identities"] = ids;
  j["compose"] = comp;
  return j;
}

// ---------------------------------------------------------------------------
// Writer

std::string WorkspaceWriter::fresh(const std::string& base) const {
  std::string n = base;
  while (used_.count(n)) n += "'";
  return n;
}

std::string WorkspaceWriter::add_category(const FinCat& c) {
  for (const auto& [n, d] : cats_)
    if (d == c && d.name() == c.name()) return n;
  const std::string n = fresh(c.name());
  used_.insert(n);
  cats_.emplace_back(n, c);
  doc_["categories"][n] = category_json(c);
  return n;
}

std::string WorkspaceWriter::functor_expr(const Functor& f, const std::string& hint) {
  if (f == Functor::identity(f.source)) return "id(" + add_category(f.source) + ")";
  for (const auto& [n, g] : functors_)
    if (g == f) return n;
  return add_functor(f, hint);
}

std::string WorkspaceWriter::add_functor(const Functor& f, const std::string& hint) {
  const std::string s = add_category(f.source), t = add_category(f.target);
  const std::string n = fresh(hint);
  used_.insert(n);
  functors_.emplace_back(n, f);
  json objs = json::object(), mors = json::object();
  for (int x = 0; x < f.source.object_count(); ++x) objs[f.source.object(x)] = f.target.object(f.obj(x));
  for (int g = 0; g < f.source.morphism_count(); ++g)
    mors[f.source.morphism(g).name] = f.target.morphism(f.mor(g)).name;
  doc_["functors"][n] = {{"source", s}, {"target", t}, {"objects", objs}, {"morphisms", mors}};
  return n;
}

std::string WorkspaceWriter::add_transformation(const NatTrans& a, const std::string& name) {
  const std::string s = functor_expr(a.source, name + ".src"), t = functor_expr(a.target, name + ".tgt");
  const std::string n = fresh(name);
  used_.insert(n);
  json comps = json::object();
  const FinCat &c = a.source.source, &d = a.source.target;
  for (int x = 0; x < c.object_count(); ++x) comps[c.object(x)] = d.morphism(a.at(x)).name;
  doc_["transformations"][n] = {{"source", s}, {"target", t}, {"components", comps}};
  return n;
}

std::string WorkspaceWriter::add_monad(const Monad& m, const std::string& name) {
  const std::string c = add_category(m.ob.as_category());
  const std::string e = functor_expr(m.endo.as_functor(), name + ".T");
  const std::string u = add_transformation(m.unit.as_transformation(), name + ".eta");
  const std::string mu = add_transformation(m.mult.as_transformation(), name + ".mu");
  const std::string n = fresh(name);
  used_.insert(n);
  doc_["monads"][n] = {{"category", c}, {"endo", e}, {"unit", u}, {"mult", mu}};
  return n;
}

std::string WorkspaceWriter::add_adjunction(const Adjunction& a, const std::string& name) {
  const std::string l = functor_expr(a.left.as_functor(), name + ".l");
  const std::string r = functor_expr(a.right.as_functor(), name + ".r");
  const std::string u = add_transformation(a.unit.as_transformation(), name + ".unit");
  const std::string c = add_transformation(a.counit.as_transformation(), name + ".counit");
  const std::string n = fresh(name);
  used_.insert(n);
  doc_["adjunctions"][n] = {{"left", l}, {"right", r}, {"unit", u}, {"counit", c}};
  return n;
}

std::string WorkspaceWriter::add_em_cone(const EMCone& e, const std::string& name, const std::string& monad) {
  const std::string o = add_category(e.ob.as_category());
  const std::string m = functor_expr(e.mor.as_functor(), name + ".mor");
  const std::string c = add_transformation(e.cell.as_transformation(), name + ".cell");
  const std::string n = fresh(name);
  used_.insert(n);
  doc_["em_cones"][n] = {{"monad", monad}, {"object", o}, {"mor", m}, {"cell", c}};
  return n;
}

std::string WorkspaceWriter::add_kleisli_cocone(const KleisliCocone& k, const std::string& name,
                                                const std::string& monad) {
  const std::string o = add_category(k.ob.as_category());
  const std::string m = functor_expr(k.mor.as_functor(), name + ".mor");
  const std::string c = add_transformation(k.cell.as_transformation(), name + ".cell");
  const std::string n = fresh(name);
  used_.insert(n);
  doc_["kleisli_cocones"][n] = {{"monad", monad}, {"object", o}, {"mor", m}, {"cell", c}};
  return n;
}

json WorkspaceWriter::to_json() const {
  json out = json::object();
  out["schema_version"] = kSchemaVersion;
  for (const char* s : kSections)
    if (doc_.contains(s)) out[s] = doc_.at(s);
  return out;
}

// ---------------------------------------------------------------------------
// Bicategories and samples

BicatPtr named_bicat(const std::string& name, double limit) {
  auto b = cat_fin_bicat(limit);
  if (name == "CatFin") return b;
  if (name == "op1(CatFin)") return op1(b);
  if (name == "op2(CatFin)") return op2(b);
  if (name == "total(terminal)") return total_bicat(terminal_disp_layer(b));
  if (name == "Mnd(CatFin)") return mnd_bicat(b);
  throw UnresolvedNameError(name, "bicategories");
}

Sample law_sample(const Workspace& ws, const std::string& bicat, const std::vector<std::string>& samples) {
  Sample s;
  const auto names = samples.empty() ? std::vector<std::string>{"default"} : samples;
  if (bicat == "Mnd(CatFin)") {
    auto b = cat_fin_bicat();
    std::vector<std::string> ms;
    for (const auto& n : names)
      if (ws.kind_of(n) == std::optional<std::string>("monad")) ms.push_back(n);
    if (ms.empty()) ms = {"CeilM", "CeilM'", "Swap", "IdOne", "IdArrow"};
    for (const auto& n : ms) s.objects.push_back(encode(ws.monad(n)));
    return s;
  }
  const auto cats = ws.sample_categories(names);
  if (bicat == "total(terminal)") {
    auto term = terminal_disp_layer(cat_fin_bicat());
    for (const auto& c : cats)
      for (const auto& xd : term->objects_over(Cell::category(c))) s.objects.push_back(total::obj(Cell::category(c), xd));
    return s;
  }
  for (const auto& c : cats) s.objects.push_back(Cell::category(c));
  return s;
}

// ---------------------------------------------------------------------------
// Commands

namespace {

struct Run {
  const Workspace& ws;
  BicatPtr b;
  std::vector<std::string> sample_names;
  json verdicts = json::object();
  json violations = json::array();
  json payload = json::object();

  void verdict(const std::string& k, bool v) { verdicts[k] = v; }
  bool laws(const std::string& key, const std::string& subject, const LawReport& r) {
    for (const auto& v : r.violations) violations.push_back({{"subject", subject}, {"law", v.law}, {"witnesses", v.witnesses}});
    verdict(key, r.empty());
    return r.empty();
  }
  std::vector<Cell> sample_objects() const {
    std::vector<Cell> out;
    for (const auto& c : ws.sample_categories(sample_names)) out.push_back(Cell::category(c));
    return out;
  }
};

json ump_json(const UmpReport& r) {
  json s = json::array();
  for (const auto& v : r.samples)
    s.push_back({{"sample", v.sample},
                 {"fully_faithful", v.fully_faithful},
                 {"essentially_surjective", v.essentially_surjective},
                 {"existence", v.existence},
                 {"uniqueness", v.uniqueness},
                 {"cones", v.cones},
                 {"two_cells", v.two_cells}});
  return {{"universal", r.universal}, {"samples", s}, {"failures", r.failures}};
}

void cmd_validate(Run& run, const std::vector<std::string>& names) {
  std::vector<std::string> all = names;
  if (all.empty()) {
    auto add = [&](const auto& m) {
      for (const auto& [n, d] : m) all.push_back(n);
    };
    add(run.ws.categories);
    add(run.ws.functors);
    add(run.ws.transformations);
    add(run.ws.monads);
    add(run.ws.distributive_laws);
    add(run.ws.adjunctions);
    add(run.ws.em_cones);
    add(run.ws.kleisli_cocones);
  }
  const Bicategory& b = *run.b;
  for (const auto& n : all) {
    const auto kind = run.ws.kind_of(n);
    if (!kind) throw UnresolvedNameError(n, "workspace");
    if (*kind == "category") run.laws(n, n, validate_category(run.ws.category(n)));
    else if (*kind == "functor") run.laws(n, n, validate_functor(run.ws.functors.at(n).value));
    else if (*kind == "transformation") run.laws(n, n, validate_transformation(run.ws.transformations.at(n).value));
    else if (*kind == "monad") run.laws(n, n, check_monad(b, run.ws.monad(n)));
    else if (*kind == "distributive_law") run.laws(n, n, check_distributive_law(run.b, run.ws.distributive_law(n)));
    else if (*kind == "adjunction") run.laws(n, n, check_adjunction(b, run.ws.adjunction(n)));
    else if (*kind == "em_cone") run.laws(n, n, check_em_cone(b, *run.ws.em_cone(n)));
    else if (*kind == "kleisli_cocone") run.laws(n, n, check_kleisli_cocone(b, *run.ws.kleisli_cocone(n)));
  }
}

void one_name(const std::vector<std::string>& names, const std::string& cmd) {
  if (names.size() != 1) throw InputError(cmd + " takes exactly one name");
}

void cmd_laws(Run& run, const std::vector<std::string>& names, double limit) {
  one_name(names, "laws");
  auto b = named_bicat(names[0], limit);
  const Sample s = law_sample(run.ws, names[0], run.sample_names);
  const auto r = check_bicat_laws(*b, s);
  run.laws("laws", names[0], r);
  json objs = json::array();
  for (const auto& o : s.objects) objs.push_back(cell_label(o).size() > 80 ? cell_label(o).substr(0, 80) : cell_label(o));
  run.payload["bicategory"] = b->name();
  run.payload["instances_checked"] = r.instances_checked;
  run.payload["sample_objects"] = objs;
}

void cmd_em(Run& run, const std::vector<std::string>& names) {
  one_name(names, "em");
  const auto& n = names[0];
  WorkspaceWriter w;
  EMCone cone;
  if (auto c = run.ws.em_cone(n)) {
    cone = *c;
    if (!run.laws("cone_valid", n, check_em_cone(*run.b, cone))) return;
  } else {
    const Monad m = run.ws.monad(n);
    if (!run.laws("monad_valid", n, check_monad(*run.b, m))) return;
    const auto em = em_category(m);
    cone = em.cone;
    run.laws("cone_valid", n, check_em_cone(*run.b, cone));
    const std::string mn = w.add_monad(m, n);
    run.payload["category"] = w.add_category(em.category);
    run.payload["objects"] = em.category.object_count();
    run.payload["morphisms"] = em.category.morphism_count();
    run.payload["cone"] = w.add_em_cone(cone, "EM." + n, mn);
    run.payload["workspace"] = w.to_json();
  }
  const auto u = check_em_universal(run.b, cone, run.sample_objects());
  run.verdict("universal", u.universal);
  run.payload["universality"] = ump_json(u);
}

void cmd_kleisli(Run& run, const std::vector<std::string>& names) {
  one_name(names, "kleisli");
  const auto& n = names[0];
  KleisliCocone k;
  if (auto c = run.ws.kleisli_cocone(n)) {
    k = *c;
    if (!run.laws("cocone_valid", n, check_kleisli_cocone(*run.b, k))) return;
  } else {
    const Monad m = run.ws.monad(n);
    if (!run.laws("monad_valid", n, check_monad(*run.b, m))) return;
    const auto kl = kleisli_category(m);
    k = kl.cocone;
    run.laws("cocone_valid", n, check_kleisli_cocone(*run.b, k));
    const auto em = em_category(m);
    const auto u = univ_kleisli(m, em, kl);
    const auto p = functor_props(u.comparison);
    run.verdict("comparison_fully_faithful", p.fully_faithful);
    run.verdict("comparison_essentially_surjective", p.essentially_surjective);
    WorkspaceWriter w;
    const std::string mn = w.add_monad(m, n);
    run.payload["category"] = w.add_category(kl.category);
    run.payload["objects"] = kl.category.object_count();
    run.payload["morphisms"] = kl.category.morphism_count();
    run.payload["cocone"] = w.add_kleisli_cocone(k, "Kl." + n, mn);
    run.payload["comparison"] = w.add_functor(u.comparison, "K." + n);
    run.payload["workspace"] = w.to_json();
  }
  const auto r = check_kleisli_universal(*run.b, k, {}, run.sample_objects());
  run.verdict("universal", r.universal);
  run.payload["universality"] = ump_json(r);
}

void cmd_compose_dl(Run& run, const std::vector<std::string>& names) {
  one_name(names, "compose-dl");
  const auto d = run.ws.distributive_law(names[0]);
  if (!run.laws("law_valid", names[0], check_distributive_law(run.b, d))) return;
  const Monad m = compose_monads(*run.b, d);
  run.laws("monad_valid", names[0] + ".composite", check_monad(*run.b, m));
  WorkspaceWriter w;
  run.payload["monad"] = w.add_monad(m, names[0] + ".composite");
  run.payload["workspace"] = w.to_json();
}

void cmd_adj2mnd(Run& run, const std::vector<std::string>& names) {
  one_name(names, "adj2mnd");
  const auto a = run.ws.adjunction(names[0]);
  if (!run.laws("adjunction_valid", names[0], check_adjunction(*run.b, a))) return;
  const Monad m = adjunction_to_monad(*run.b, a);
  run.laws("monad_valid", names[0] + ".monad", check_monad(*run.b, m));
  WorkspaceWriter w;
  run.payload["monad"] = w.add_monad(m, names[0] + ".monad");
  run.payload["workspace"] = w.to_json();
}

void cmd_mnd2adj(Run& run, const std::vector<std::string>& names) {
  one_name(names, "mnd2adj");
  const Monad m = run.ws.monad(names[0]);
  if (!run.laws("monad_valid", names[0], check_monad(*run.b, m))) return;
  const auto em = em_category(m);
  const auto r = monad_to_adjunction(run.b, m, em.cone);
  run.laws("adjunction_valid", names[0] + ".adj", check_adjunction(*run.b, r.adjunction));
  const auto v = mnd_adjequiv_check(run.b, r.comparison);
  run.verdict("underlying_adjequiv", v.underlying_adjequiv);
  run.verdict("cell_invertible", v.cell_invertible);
  run.verdict("adjequiv_in_mnd", v.is_adjequiv_in_mnd);
  WorkspaceWriter w;
  run.payload["adjunction"] = w.add_adjunction(r.adjunction, names[0] + ".adj");
  run.payload["workspace"] = w.to_json();
}

void cmd_comparison(Run& run, const std::vector<std::string>& names) {
  one_name(names, "comparison");
  const auto a = run.ws.adjunction(names[0]);
  if (!run.laws("adjunction_valid", names[0], check_adjunction(*run.b, a))) return;
  const auto em = em_category(adjunction_to_monad(*run.b, a));
  const auto c = comparison_cat(a, em);
  const auto p = functor_props(c.mediator.as_functor());
  run.verdict("fully_faithful", p.fully_faithful);
  run.verdict("essentially_surjective", p.essentially_surjective);
  WorkspaceWriter w;
  run.payload["comparison"] = w.add_functor(c.mediator.as_functor(), "K." + names[0]);
  run.payload["workspace"] = w.to_json();
}

void cmd_monadic(Run& run, const std::vector<std::string>& names) {
  one_name(names, "monadic");
  const auto a = run.ws.adjunction(names[0]);
  if (!run.laws("adjunction_valid", names[0], check_adjunction(*run.b, a))) return;
  const auto r = is_monadic_cat(a);
  const auto rep = is_representably_monadic(*run.b, a, run.sample_objects());
  run.verdict("monadic", r.monadic);
  run.verdict("representably_monadic", rep.representably_monadic);
  run.verdict("agree", r.monadic == rep.representably_monadic);
  json per = json::object();
  for (const auto& s : rep.samples) per[s.sample] = s.value;
  run.payload["representable"] = per;
  const auto p = functor_props(r.comparison.mediator.as_functor());
  run.payload["comparison_props"] = {{"fully_faithful", p.fully_faithful},
                                     {"essentially_surjective", p.essentially_surjective}};
  WorkspaceWriter w;
  run.payload["comparison"] = w.add_functor(r.comparison.mediator.as_functor(), "K." + names[0]);
  run.payload["workspace"] = w.to_json();
}

void cmd_duals(Run& run, const std::vector<std::string>& names) {
  one_name(names, "duals");
  const auto a = run.ws.adjunction(names[0]);
  if (!run.laws("adjunction_valid", names[0], check_adjunction(*run.b, a))) return;
  const auto d1 = adj_dual_op1(a), d2 = adj_dual_op2(a);
  run.laws("op1_valid", names[0] + ".op1", check_adjunction(*op1(run.b), d1));
  run.laws("op2_valid", names[0] + ".op2", check_adjunction(*op2(run.b), d2));
  auto same = [](const Adjunction& x, const Adjunction& y) {
    return x.left == y.left && x.right == y.right && x.unit == y.unit && x.counit == y.counit;
  };
  run.verdict("round_trip", same(adj_dual_op1(d1), a) && same(adj_dual_op2(d2), a));
  WorkspaceWriter w;
  auto names_of = [&](const Adjunction& x, const std::string& p) {
    return json{{"left", w.add_functor(x.left.as_functor(), p + ".l")},
                {"right", w.add_functor(x.right.as_functor(), p + ".r")},
                {"unit", w.add_transformation(x.unit.as_transformation(), p + ".unit")},
                {"counit", w.add_transformation(x.counit.as_transformation(), p + ".counit")}};
  };
  run.payload["op1"] = names_of(d1, names[0] + ".op1");
  run.payload["op2"] = names_of(d2, names[0] + ".op2");
  run.payload["workspace"] = w.to_json();
}

std::pair<std::string, int> classify(const Error& e) {
  if (dynamic_cast<const SyntaxError*>(&e)) return {"syntax", 2};
  if (dynamic_cast<const UnresolvedNameError*>(&e)) return {"unresolved", 2};
  if (dynamic_cast<const StructuralError*>(&e)) return {"structural", 2};
  if (dynamic_cast<const InputError*>(&e)) return {"input", 2};
  if (dynamic_cast<const BoundaryError*>(&e)) return {"boundary", 2};
  if (dynamic_cast<const ResourceBoundError*>(&e)) return {"resource", 3};
  if (dynamic_cast<const MissingWitnessError*>(&e)) return {"missing_witness", 1};
  return {"error", 2};
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"kind", kind}, {"message", message}};
}

Report finish(json doc, const json& error, int status, std::chrono::steady_clock::time_point t0) {
  doc["status"] = status;
  doc["error"] = error;
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  doc["timing_ms"] = ms;
  return Report{doc, status};
}

json report_head(const std::string& command, const std::vector<std::string>& names,
                 const std::vector<std::string>& samples) {
  json doc = json::object();
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["inputs"] = names;
  doc["samples"] = samples;
  doc["verdicts"] = json::object();
  doc["violations"] = json::array();
  doc["payload"] = json::object();
  return doc;
}

}  // namespace

Report run_command(const Workspace& ws, const std::string& command, const std::vector<std::string>& names,
                   const Options& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> samples = opts.samples;
  if (samples.empty()) samples = command == "laws" ? std::vector<std::string>{"default"} : std::vector<std::string>{"small"};
  json doc = report_head(command, names, samples);
  const double limit = opts.bound.value_or(ws.bounds.enumeration_limit);
  try {
    Run run{ws, cat_fin_bicat(limit), samples};
    // Record the expanded sample set.
    json expanded = json::array();
    for (const auto& c : ws.sample_categories(samples)) expanded.push_back(c.name());
    doc["samples"] = expanded;
    if (command == "validate") cmd_validate(run, names);
    else if (command == "laws") cmd_laws(run, names, limit);
    else if (command == "em") cmd_em(run, names);
    else if (command == "kleisli") cmd_kleisli(run, names);
    else if (command == "compose-dl") cmd_compose_dl(run, names);
    else if (command == "adj2mnd") cmd_adj2mnd(run, names);
    else if (command == "mnd2adj") cmd_mnd2adj(run, names);
    else if (command == "comparison") cmd_comparison(run, names);
    else if (command == "monadic") cmd_monadic(run, names);
    else if (command == "duals") cmd_duals(run, names);
    else throw InputError("unknown command '" + command + "'");
    doc["verdicts"] = run.verdicts;
    doc["violations"] = run.violations;
    doc["payload"] = run.payload;
    bool ok = true;
    for (const auto& [k, v] : run.verdicts.items()) ok = ok && v.get<bool>();
    return finish(doc, nullptr, ok ? 0 : 1, t0);
  } catch (const Error& e) {
    auto [kind, status] = classify(e);
    return finish(doc, error_json(kind, e.what()), status, t0);
  }
}

Report run_command_text(const std::optional<std::string>& workspace_text, const std::string& command,
                        const std::vector<std::string>& names, const Options& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  Workspace ws;
  try {
    if (workspace_text) ws = parse_workspace(*workspace_text);
  } catch (const Error& e) {
    auto [kind, status] = classify(e);
    return finish(report_head(command, names, opts.samples), error_json(kind, e.what()), status, t0);
  }
  return run_command(ws, command, names, opts);
}

std::string render_text(const json& r) {
  std::ostringstream out;
  out << r.value("command", std::string()) << ":";
  for (const auto& n : r.at("inputs")) out << " " << n.get<std::string>();
  out << "\n";
  if (!r.at("samples").empty()) {
    out << "  samples:";
    for (const auto& n : r.at("samples")) out << " " << n.get<std::string>();
    out << "\n";
  }
  for (const auto& [k, v] : r.at("verdicts").items()) out << "  " << k << ": " << (v.get<bool>() ? "pass" : "FAIL") << "\n";
  for (const auto& v : r.at("violations")) {
    out << "  violation " << v.at("law").get<std::string>() << " in " << v.at("subject").get<std::string>();
    if (!v.at("witnesses").empty()) out << " at " << v.at("witnesses")[0].get<std::string>();
    out << "\n";
  }
  const json& p = r.at("payload");
  for (const char* k : {"category", "objects", "morphisms", "cone", "cocone", "monad", "adjunction", "comparison"})
    if (p.contains(k)) out << "  " << k << ": " << (p.at(k).is_string() ? p.at(k).get<std::string>() : p.at(k).dump()) << "\n";
  if (p.contains("universality"))
    for (const auto& f : p.at("universality").at("failures")) out << "  not universal at " << f.get<std::string>() << "\n";
  if (!r.at("error").is_null()) out << "  error (" << r.at("error").at("kind").get<std::string>() << "): "
                                    << r.at("error").at("message").get<std::string>() << "\n";
  out << "  status: " << r.at("status").get<int>() << "\n";
  return out.str();
}

json without_timing(json report) {
  report.erase("timing_ms");
  return report;
}

}  // namespace bicatmnd::cli
