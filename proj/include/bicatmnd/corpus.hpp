#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicatmnd/fincat.hpp"

namespace bicatmnd::corpus {

FinCat one();
FinCat arrow();
FinCat iso2();
FinCat disc2();
FinCat mono();   // one object, s;s = s
FinCat z2();     // the group of order two, t;t = e

// {One, Arrow, Iso2, Disc2, Mono}
std::vector<FinCat> categories();
std::optional<FinCat> category(const std::string& name);

}  // namespace bicatmnd::corpus
