#pragma once

#include <cstdint>

#include "linkcc/instance.hpp"

namespace linkcc {

std::int64_t crossings_for_order(const BipartiteInstance& inst, const UOrder& pi);

struct BcrResult {
  std::int64_t minimum = 0;
  UOrder order;
};

struct BcrOptions {
  bool prune = true;
};

// Minimum over all U orders; ties go to the lexicographically smallest order.
BcrResult exact_bcr(const BipartiteInstance& inst, BcrOptions options = {});

bool decide_bcr(const BipartiteInstance& inst);

}  // namespace linkcc
