#pragma once

#include <cstdint>

#include "linkcc/count.hpp"
#include "linkcc/diagram.hpp"
#include "linkcc/gadgets.hpp"
#include "linkcc/instance.hpp"

namespace linkcc {

struct WeightPair {
  std::int64_t w1 = 0;
  std::int64_t w2 = 0;

  friend bool operator==(const WeightPair&, const WeightPair&) = default;
};

WeightPair compute_weights(int n_u);

// The four inequalities with the worst case c = n_v^2, plus w1 > w2.
bool check_weight_conditions(std::int64_t n_u, std::int64_t w1, std::int64_t w2);

// Weighted crossing total of the construction when the instance is drawn
// with inst.budget bipartite crossings.
Count budget(const BipartiteInstance& inst);

struct CompiledLink {
  WeightedLink link;
  GadgetLabels labels;
};

CompiledLink build_link(const BipartiteInstance& inst, const UOrder& pi);

// Reads the U order off the ring of chain n_u + 1 that every U-guard hooks or crosses.
UOrder extract_u_order(const WeightedLink& l, const GadgetLabels& labels);

}  // namespace linkcc
