#pragma once

#include <vector>

#include "linkcc/gadgets.hpp"
#include "linkcc/polygon_trace.hpp"

namespace linkcc::detail {

// Extra components placed by the reduction on top of a framework.
struct GuardPlan {
  int n_u = 0;
  std::vector<int> assignment;  // V index -> U index, both from 1
  std::vector<int> position;    // U index - 1 -> left-to-right rank from 1
};

struct Layout {
  std::vector<Polygon> polygons;
  GadgetLabels labels;
};

Layout framework_layout(int k, int l, const GuardPlan* plan, unsigned attempt);

// Traces the layout, retrying with fresh jitter until the geometry is generic.
LabeledDiagram build_framework(int k, int l, const GuardPlan* plan);

}  // namespace linkcc::detail
