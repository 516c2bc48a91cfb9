#include "bicatmnd/cell.hpp"

#include <variant>

#include "bicatmnd/hash.hpp"

namespace bicatmnd {

struct Cell::Node {
  Kind kind;
  std::variant<std::string, FinCat, Functor, NatTrans, std::vector<Cell>> value;
  std::size_t hash;
};

namespace {

std::size_t kind_seed(Cell::Kind k) { return 0x51ed27u + static_cast<std::size_t>(k) * 0x9e37u; }

}  // namespace

Cell::Cell() : Cell(token("tt")) {}

Cell Cell::token(std::string name) {
  std::size_t h = kind_seed(Kind::Token);
  detail::hash_combine(h, std::hash<std::string>{}(name));
  return Cell(std::make_shared<const Node>(Node{Kind::Token, std::move(name), h}));
}

Cell Cell::category(FinCat c) {
  std::size_t h = kind_seed(Kind::Category);
  detail::hash_combine(h, c.hash());
  return Cell(std::make_shared<const Node>(Node{Kind::Category, std::move(c), h}));
}

Cell Cell::functor(Functor f) {
  std::size_t h = kind_seed(Kind::Functor);
  detail::hash_combine(h, f.hash());
  return Cell(std::make_shared<const Node>(Node{Kind::Functor, std::move(f), h}));
}

Cell Cell::transformation(NatTrans t) {
  std::size_t h = kind_seed(Kind::Transformation);
  detail::hash_combine(h, t.hash());
  return Cell(std::make_shared<const Node>(Node{Kind::Transformation, std::move(t), h}));
}

Cell Cell::tuple(std::vector<Cell> items) {
  std::size_t h = kind_seed(Kind::Tuple);
  detail::hash_combine(h, items.size());
  for (const auto& c : items) detail::hash_combine(h, c.hash());
  return Cell(std::make_shared<const Node>(Node{Kind::Tuple, std::move(items), h}));
}

Cell::Kind Cell::kind() const { return n_->kind; }

const std::string& Cell::as_token() const {
  if (n_->kind != Kind::Token) throw BoundaryError("cell is not a token: " + describe());
  return std::get<std::string>(n_->value);
}

const FinCat& Cell::as_category() const {
  if (n_->kind != Kind::Category) throw BoundaryError("cell is not a category: " + describe());
  return std::get<FinCat>(n_->value);
}

const Functor& Cell::as_functor() const {
  if (n_->kind != Kind::Functor) throw BoundaryError("cell is not a functor: " + describe());
  return std::get<Functor>(n_->value);
}

const NatTrans& Cell::as_transformation() const {
  if (n_->kind != Kind::Transformation) throw BoundaryError("cell is not a transformation: " + describe());
  return std::get<NatTrans>(n_->value);
}

const std::vector<Cell>& Cell::items() const {
  if (n_->kind != Kind::Tuple) throw BoundaryError("cell is not a tuple: " + describe());
  return std::get<std::vector<Cell>>(n_->value);
}

const Cell& Cell::operator[](std::size_t i) const {
  const auto& v = items();
  if (i >= v.size()) throw BoundaryError("tuple index out of range in " + describe());
  return v[i];
}

std::size_t Cell::hash() const { return n_->hash; }

std::string Cell::describe() const {
  switch (n_->kind) {
    case Kind::Token:
      return std::get<std::string>(n_->value);
    case Kind::Category:
      return std::get<FinCat>(n_->value).name();
    case Kind::Functor:
      return std::get<Functor>(n_->value).describe();
    case Kind::Transformation:
      return std::get<NatTrans>(n_->value).describe();
    case Kind::Tuple: {
      std::string s = "(";
      const auto& v = std::get<std::vector<Cell>>(n_->value);
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].describe();
      return s + ")";
    }
  }
  return {};
}

bool operator==(const Cell& a, const Cell& b) {
  if (a.n_ == b.n_) return true;
  if (a.n_->hash != b.n_->hash || a.n_->kind != b.n_->kind) return false;
  return a.n_->value == b.n_->value;
}

}  // namespace bicatmnd
