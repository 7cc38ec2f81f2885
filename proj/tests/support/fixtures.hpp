#pragma once

#include "djc/surface.hpp"

namespace fixtures {

// Square grid of n x n unit squares, each split along its rising diagonal.
// Vertex (i, j) has id j * (n + 1) + i.
inline djc::Surface grid(int n) {
  std::vector<std::vector<djc::VertexId>> cells;
  auto v = [&](int i, int j) { return j * (n + 1) + i; };
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      cells.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      cells.push_back({v(i, j), v(i + 1, j + 1), v(i, j + 1)});
    }
  }
  return djc::Surface((n + 1) * (n + 1), cells);
}

inline djc::VertexId gv(int n, int i, int j) { return j * (n + 1) + i; }

}  // namespace fixtures
