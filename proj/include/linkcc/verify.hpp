#pragma once

#include <string>
#include <vector>

#include "linkcc/bcr.hpp"
#include "linkcc/count.hpp"
#include "linkcc/instance.hpp"
#include "linkcc/reduction.hpp"

namespace linkcc {

struct PermutationRow {
  UOrder pi;
  std::int64_t crossings = 0;  // bipartite crossings of pi
  Count diagram_total = 0;     // weighted crossings of build_link(inst, pi)
  Count formula_total = 0;     // budget at k = 0 plus 4 * crossings
  bool match = false;
};

struct VerificationReport {
  BipartiteInstance instance;
  WeightPair weights;
  Count budget = 0;  // k' at the instance's budget
  std::vector<PermutationRow> rows;
  BcrResult bcr;
  Count min_total = 0;
  bool link_side = false;       // min_total <= k'
  bool bipartite_side = false;  // bcr <= k
  bool diagrams_planar = false;
  bool cable_count_match = false;
  bool cable_linking_match = false;
  bool pass = false;

  // "both sides true", "both sides false", or the failing side.
  std::string equivalence() const;
};

VerificationReport verify_end_to_end(const BipartiteInstance& inst);

std::string format_report(const VerificationReport& r);

}  // namespace linkcc
