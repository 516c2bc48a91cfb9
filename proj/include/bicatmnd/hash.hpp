#pragma once

#include <cstddef>
#include <functional>
#include <type_traits>

namespace bicatmnd::detail {

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

template <typename Range>
std::size_t hash_range(std::size_t seed, const Range& r) {
  for (const auto& x : r) hash_combine(seed, std::hash<std::decay_t<decltype(x)>>{}(x));
  return seed;
}

}  // namespace bicatmnd::detail
