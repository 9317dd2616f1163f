#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spherecross/errors.hpp"

namespace spherecross {

/// A small simple pattern graph H on vertices 0..k-1.
struct PatternGraph {
  std::uint32_t k = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  static PatternGraph k1() { return {1, {}}; }
  static PatternGraph k2() { return {2, {{0, 1}}}; }
  static PatternGraph p3() { return {3, {{0, 1}, {1, 2}}}; }
  static PatternGraph k3() { return {3, {{0, 1}, {0, 2}, {1, 2}}}; }
  static PatternGraph empty(std::uint32_t k) { return {k, {}}; }

  void validate(std::uint32_t max_k = 8) const {
    if (k == 0 || k > max_k) throw UnsupportedPattern("pattern order out of range");
    for (const auto& [u, v] : edges) {
      if (u >= k || v >= k || u == v) throw UnsupportedPattern("pattern edge out of range");
      std::size_t seen = 0;
      for (const auto& [a, b] : edges)
        if ((a == u && b == v) || (a == v && b == u)) ++seen;
      if (seen != 1) throw UnsupportedPattern("pattern has a repeated edge");
    }
  }
};

}  // namespace spherecross
