#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bicatmnd/errors.hpp"

namespace bicatmnd {

inline constexpr double kDefaultEnumerationLimit = 1e6;

struct Morphism {
  std::string name;
  int source;
  int target;
};

/// A finite category given by explicit tables. Composition is diagrammatic:
/// compose(f, g) is "f then g" and is defined exactly when target(f) == source(g).
///
/// Construction only checks structure (identifiers resolve, the composition
/// table covers exactly the composable pairs); the category laws are checked by
/// validate_category so that broken tables can still be inspected.
class FinCat {
 public:
  using Triple = std::tuple<std::string, std::string, std::string>;

  FinCat();

  static FinCat from_tables(std::string name, const std::vector<std::string>& objects,
                            const std::vector<Triple>& morphisms,
                            const std::vector<std::pair<std::string, std::string>>& identities,
                            const std::vector<Triple>& compose);

  // compose is a dense |mor| x |mor| table, -1 on non-composable pairs.
  static FinCat from_indices(std::string name, std::vector<std::string> objects,
                             std::vector<Morphism> morphisms, std::vector<int> identities,
                             std::vector<int> compose);

  const std::string& name() const;
  FinCat renamed(std::string name) const;

  int object_count() const;
  int morphism_count() const;
  const std::string& object(int x) const;
  const Morphism& morphism(int f) const;
  const std::vector<std::string>& objects() const;
  const std::vector<Morphism>& morphisms() const;

  int identity(int x) const;
  // -1 when target(f) != source(g).
  int compose(int f, int g) const;
  const std::vector<int>& hom(int x, int y) const;

  std::optional<int> find_object(const std::string& id) const;
  std::optional<int> find_morphism(const std::string& id) const;
  int object_index(const std::string& id) const;
  int morphism_index(const std::string& id) const;

  std::size_t hash() const;
  bool same_instance(const FinCat& other) const { return d_ == other.d_; }

  // Structural equality of the tables; the display name is not compared.
  friend bool operator==(const FinCat& a, const FinCat& b);

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

struct Functor {
  FinCat source;
  FinCat target;
  std::vector<int> omap;
  std::vector<int> mmap;

  static Functor identity(const FinCat& c);
  static Functor from_tables(const FinCat& source, const FinCat& target,
                             const std::map<std::string, std::string>& objects,
                             const std::map<std::string, std::string>& morphisms);

  int obj(int x) const { return omap[static_cast<std::size_t>(x)]; }
  int mor(int f) const { return mmap[static_cast<std::size_t>(f)]; }
  std::size_t hash() const;
  std::string describe() const;

  friend bool operator==(const Functor& a, const Functor& b);
};

struct NatTrans {
  Functor source;
  Functor target;
  std::vector<int> components;

  static NatTrans identity(const Functor& f);
  static NatTrans from_tables(const Functor& source, const Functor& target,
                              const std::map<std::string, std::string>& components);

  int at(int x) const { return components[static_cast<std::size_t>(x)]; }
  std::size_t hash() const;
  std::string describe() const;

  friend bool operator==(const NatTrans& a, const NatTrans& b);
};

LawReport validate_category(const FinCat& c);
LawReport validate_functor(const Functor& f);
LawReport validate_transformation(const NatTrans& t);

// Diagrammatic composite: f then g.
Functor compose(const Functor& f, const Functor& g);

NatTrans vcomp(const NatTrans& a, const NatTrans& b);
// f ⊲ t : f;g1 ⇒ f;g2 for t : g1 ⇒ g2.
NatTrans whisker_left(const Functor& f, const NatTrans& t);
// t ⊳ g : f1;g ⇒ f2;g for t : f1 ⇒ f2.
NatTrans whisker_right(const NatTrans& t, const Functor& g);
// For a : f ⇒ g (x → y) and b : h ⇒ k (y → z), a ⋆ b : f;h ⇒ g;k.
NatTrans hcomp(const NatTrans& a, const NatTrans& b);

std::vector<Functor> enumerate_functors(const FinCat& c, const FinCat& d,
                                        double limit = kDefaultEnumerationLimit);
std::vector<NatTrans> enumerate_transformations(const Functor& f, const Functor& g);

struct FunctorCategory {
  FinCat category;
  std::vector<Functor> functors;         // indexed like category objects
  std::vector<NatTrans> transformations;  // indexed like category morphisms

  std::optional<int> index_of(const Functor& f) const;
  std::optional<int> index_of(const NatTrans& t) const;
};

FunctorCategory functor_category(const FinCat& c, const FinCat& d,
                                 double limit = kDefaultEnumerationLimit);

struct FunctorProps {
  bool fully_faithful = false;
  bool essentially_surjective = false;
  bool is_equivalence = false;
};

FunctorProps functor_props(const Functor& f);

bool is_isomorphism(const FinCat& c, int f);
// Some isomorphism x → y, found by exhaustive search over hom(x, y).
std::optional<int> find_iso(const FinCat& c, int x, int y);

struct TerminalObject {
  int object;
  std::vector<int> unique_maps;  // unique_maps[y] : y → object
};

std::vector<TerminalObject> terminal_objects(const FinCat& c);
bool is_terminal(const FinCat& c, int x);

// An isomorphism of categories c → d (bijective on objects and morphisms).
std::optional<Functor> find_isomorphism(const FinCat& c, const FinCat& d,
                                        double limit = kDefaultEnumerationLimit);

}  // namespace bicatmnd
