#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace linkcc {

// Bipartite graph with deg(u) = 4 for every u and deg(v) = 1 for every v.
// assignment[j] is the U index (from 1) of the only neighbour of v_{j+1}.
struct BipartiteInstance {
  int n_u = 0;
  std::vector<int> assignment;
  std::int64_t budget = 0;

  int n_v() const { return static_cast<int>(assignment.size()); }
};

class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void validate_instance(const BipartiteInstance& inst);

// position[u - 1] is the left-to-right rank (from 1) of U vertex u.
struct UOrder {
  std::vector<int> position;

  static UOrder identity(int n);
  int size() const { return static_cast<int>(position.size()); }
  int rank(int u) const { return position.at(static_cast<std::size_t>(u - 1)); }
  friend bool operator==(const UOrder&, const UOrder&) = default;
  friend auto operator<=>(const UOrder&, const UOrder&) = default;
};

void validate_order(const UOrder& pi, int n_u);

}  // namespace linkcc
