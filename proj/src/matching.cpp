#include "tropt/matching.hpp"

#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace tropt {

namespace {

constexpr Eigen::Index kFree = -1;

struct HopcroftKarp {
  std::vector<std::vector<Eigen::Index>> adjacency;
  std::vector<Eigen::Index> row_match, col_match;
  std::vector<Eigen::Index> layer;

  // Layers rows by BFS from the free ones; true while augmenting paths exist.
  bool layered() {
    std::queue<Eigen::Index> frontier;
    const auto rows = static_cast<Eigen::Index>(adjacency.size());
    layer.assign(adjacency.size(), std::numeric_limits<Eigen::Index>::max());
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (row_match[i] == kFree) {
        layer[i] = 0;
        frontier.push(i);
      }
    }
    bool reachable = false;
    while (!frontier.empty()) {
      const Eigen::Index i = frontier.front();
      frontier.pop();
      for (Eigen::Index j : adjacency[i]) {
        const Eigen::Index next = col_match[j];
        if (next == kFree) {
          reachable = true;
        } else if (layer[next] ==
                   std::numeric_limits<Eigen::Index>::max()) {
          layer[next] = layer[i] + 1;
          frontier.push(next);
        }
      }
    }
    return reachable;
  }

  bool augment(Eigen::Index i) {
    for (Eigen::Index j : adjacency[i]) {
      const Eigen::Index next = col_match[j];
      if (next == kFree ||
          (layer[next] == layer[i] + 1 && augment(next))) {
        row_match[i] = j;
        col_match[j] = i;
        return true;
      }
    }
    layer[i] = std::numeric_limits<Eigen::Index>::max();
    return false;
  }
};

}  // namespace

Eigen::Index max_bipartite_matching(const CellSet& edges, Eigen::Index rows,
                                    Eigen::Index cols) {
  HopcroftKarp state;
  state.adjacency.resize(static_cast<std::size_t>(rows));
  for (const Cell& edge : edges) {
    if (edge.row < 0 || edge.row >= rows || edge.col < 0 || edge.col >= cols) {
      throw std::invalid_argument("edge outside the bipartite vertex sets");
    }
    state.adjacency[edge.row].push_back(edge.col);
  }
  state.row_match.assign(static_cast<std::size_t>(rows), kFree);
  state.col_match.assign(static_cast<std::size_t>(cols), kFree);

  Eigen::Index size = 0;
  while (state.layered()) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (state.row_match[i] == kFree && state.augment(i)) ++size;
    }
  }
  return size;
}

}  // namespace tropt
