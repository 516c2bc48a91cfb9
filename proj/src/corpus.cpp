#include "bicatmnd/corpus.hpp"

namespace bicatmnd::corpus {

FinCat one() { return FinCat::from_tables("One", {"*"}, {{"id*", "*", "*"}}, {{"*", "id*"}}, {{"id*", "id*", "id*"}}); }

FinCat arrow() {
  return FinCat::from_tables("Arrow", {"0", "1"}, {{"id0", "0", "0"}, {"id1", "1", "1"}, {"a", "0", "1"}},
                             {{"0", "id0"}, {"1", "id1"}},
                             {{"id0", "id0", "id0"}, {"id1", "id1", "id1"}, {"id0", "a", "a"}, {"a", "id1", "a"}});
}

FinCat iso2() {
  return FinCat::from_tables("Iso2", {"0", "1"},
                             {{"id0", "0", "0"}, {"id1", "1", "1"}, {"i", "0", "1"}, {"j", "1", "0"}},
                             {{"0", "id0"}, {"1", "id1"}},
                             {{"id0", "id0", "id0"},
                              {"id1", "id1", "id1"},
                              {"id0", "i", "i"},
                              {"i", "id1", "i"},
                              {"id1", "j", "j"},
                              {"j", "id0", "j"},
                              {"i", "j", "id0"},
                              {"j", "i", "id1"}});
}

FinCat disc2() {
  return FinCat::from_tables("Disc2", {"0", "1"}, {{"id0", "0", "0"}, {"id1", "1", "1"}},
                             {{"0", "id0"}, {"1", "id1"}}, {{"id0", "id0", "id0"}, {"id1", "id1", "id1"}});
}

FinCat mono() {
  return FinCat::from_tables("Mono", {"*"}, {{"e", "*", "*"}, {"s", "*", "*"}}, {{"*", "e"}},
                             {{"e", "e", "e"}, {"e", "s", "s"}, {"s", "e", "s"}, {"s", "s", "s"}});
}

FinCat z2() {
  return FinCat::from_tables("Z2", {"*"}, {{"e", "*", "*"}, {"t", "*", "*"}}, {{"*", "e"}},
                             {{"e", "e", "e"}, {"e", "t", "t"}, {"t", "e", "t"}, {"t", "t", "e"}});
}

std::vector<FinCat> categories() { return {one(), arrow(), iso2(), disc2(), mono()}; }

std::optional<FinCat> category(const std::string& name) {
  for (auto& c : categories())
    if (c.name() == name) return c;
  if (name == "Z2") return z2();
  return std::nullopt;
}

}  // namespace bicatmnd::corpus
