#pragma once

#include <Eigen/Core>
#include <ostream>
#include <vector>

namespace tropt {

// Zero-based matrix position.
struct Cell {
  Eigen::Index row = 0;
  Eigen::Index col = 0;

  friend constexpr bool operator==(Cell a, Cell b) {
    return a.row == b.row && a.col == b.col;
  }
  friend constexpr bool operator!=(Cell a, Cell b) { return !(a == b); }
  // Lexicographic: row first, then column.
  friend constexpr bool operator<(Cell a, Cell b) {
    if (a.row != b.row) return a.row < b.row;
    return a.col < b.col;
  }
};

inline std::ostream& operator<<(std::ostream& os, Cell c) {
  return os << '(' << c.row << ',' << c.col << ')';
}

using CellSet = std::vector<Cell>;  // kept sorted lexicographically

}  // namespace tropt
