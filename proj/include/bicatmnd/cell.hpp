#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "bicatmnd/fincat.hpp"

namespace bicatmnd {

// A value of any bicategory carrier: an object, 1-cell or 2-cell.
// Concrete instances store categories, functors and transformations;
// displayed and total constructions nest these inside tuples, and proof
// cells are tokens.
class Cell {
 public:
  enum class Kind { Token, Category, Functor, Transformation, Tuple };

  Cell();  // the token "tt"

  static Cell token(std::string name);
  static Cell category(FinCat c);
  static Cell functor(Functor f);
  static Cell transformation(NatTrans t);
  static Cell tuple(std::vector<Cell> items);
  static Cell tuple(std::initializer_list<Cell> items) { return tuple(std::vector<Cell>(items)); }

  Kind kind() const;
  bool is_token() const { return kind() == Kind::Token; }
  bool is_tuple() const { return kind() == Kind::Tuple; }

  const std::string& as_token() const;
  const FinCat& as_category() const;
  const Functor& as_functor() const;
  const NatTrans& as_transformation() const;
  const std::vector<Cell>& items() const;

  std::size_t size() const { return items().size(); }
  const Cell& operator[](std::size_t i) const;

  std::size_t hash() const;
  std::string describe() const;

  friend bool operator==(const Cell& a, const Cell& b);
  friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }

 private:
  struct Node;
  explicit Cell(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

inline const Cell& tt() {
  static const Cell t;
  return t;
}

struct CellHash {
  std::size_t operator()(const Cell& c) const { return c.hash(); }
};

}  // namespace bicatmnd
