#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "bicatmnd/adjmonadic.hpp"

namespace bicatmnd::cli {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct Bounds {
  int max_objects = 6;
  int max_morphisms = 40;
  double enumeration_limit = kDefaultEnumerationLimit;
};

// Declarations keep their source JSON so that serialization is exact.
template <typename T>
struct Decl {
  T value;
  json source;
};

struct Workspace {
  Bounds bounds;
  std::map<std::string, Decl<FinCat>> categories;
  std::map<std::string, Decl<Functor>> functors;
  std::map<std::string, Decl<NatTrans>> transformations;
  std::map<std::string, Decl<Monad>> monads;
  std::map<std::string, Decl<DistributiveLaw>> distributive_laws;
  std::map<std::string, Decl<Adjunction>> adjunctions;
  std::map<std::string, Decl<EMCone>> em_cones;
  std::map<std::string, Decl<KleisliCocone>> kleisli_cocones;
  std::map<std::string, std::vector<std::string>> samples;

  // Lookups fall back to the built-in corpus and fixtures.
  FinCat category(const std::string& name) const;
  Monad monad(const std::string& name) const;
  DistributiveLaw distributive_law(const std::string& name) const;
  Adjunction adjunction(const std::string& name) const;
  std::optional<EMCone> em_cone(const std::string& name) const;
  std::optional<KleisliCocone> kleisli_cocone(const std::string& name) const;
  // "kind" of a declared or built-in name, or nullopt.
  std::optional<std::string> kind_of(const std::string& name) const;
  // Expands sample-set names and category names to categories.
  std::vector<FinCat> sample_categories(const std::vector<std::string>& names) const;
};

// Throws SyntaxError (with line and column), UnresolvedNameError or
// StructuralError; ResourceBoundError when a category exceeds the bounds.
Workspace parse_workspace(const std::string& text);
Workspace load_workspace(const std::string& path);
json serialize(const Workspace& ws);

json category_json(const FinCat& c);

// Builds a workspace document from constructed data, naming functors and
// transformations as they are first seen.
class WorkspaceWriter {
 public:
  std::string add_category(const FinCat& c);
  std::string add_functor(const Functor& f, const std::string& hint);
  std::string add_transformation(const NatTrans& t, const std::string& name);
  std::string add_monad(const Monad& m, const std::string& name);
  std::string add_adjunction(const Adjunction& a, const std::string& name);
  std::string add_em_cone(const EMCone& e, const std::string& name, const std::string& monad);
  std::string add_kleisli_cocone(const KleisliCocone& k, const std::string& name, const std::string& monad);
  json to_json() const;

 private:
  std::string functor_expr(const Functor& f, const std::string& hint);
  std::string fresh(const std::string& base) const;
  std::vector<std::pair<std::string, FinCat>> cats_;
  std::vector<std::pair<std::string, Functor>> functors_;
  std::set<std::string> used_;
  json doc_ = json::object();
};

struct Options {
  std::vector<std::string> samples;  // empty: command default
  std::optional<double> bound;
};

struct Report {
  json doc;
  int status = 0;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"validate", "laws",   "em",         "kleisli", "compose-dl",
                                          "adj2mnd",  "mnd2adj", "comparison", "monadic", "duals"};
  return c;
}

// Never throws: input errors give status 2, enumeration bounds status 3.
Report run_command(const Workspace& ws, const std::string& command, const std::vector<std::string>& names,
                   const Options& opts = {});
// Same with the workspace read from text (parse errors are reported).
Report run_command_text(const std::optional<std::string>& workspace_text, const std::string& command,
                        const std::vector<std::string>& names, const Options& opts = {});

std::string render_text(const json& report);
// The report without its timing field, for determinism comparisons.
json without_timing(json report);

// Law-check samples for a named bicategory: CatFin, op1(CatFin),
// op2(CatFin), total(terminal), Mnd(CatFin).
BicatPtr named_bicat(const std::string& name, double limit);
Sample law_sample(const Workspace& ws, const std::string& bicat, const std::vector<std::string>& samples);

}  // namespace bicatmnd::cli
