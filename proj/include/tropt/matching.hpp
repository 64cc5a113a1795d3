#pragma once

#include <Eigen/Core>

#include "tropt/cell.hpp"

namespace tropt {

// Size of a maximum matching in the bipartite graph whose left vertices are
// rows, right vertices are columns, and edges are the given cells.
// Hopcroft-Karp: O(E sqrt(V)).
Eigen::Index max_bipartite_matching(const CellSet& edges, Eigen::Index rows,
                                    Eigen::Index cols);

}  // namespace tropt
