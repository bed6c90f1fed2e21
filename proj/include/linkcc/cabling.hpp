#pragma once

#include <map>
#include <vector>

#include "linkcc/count.hpp"
#include "linkcc/diagram.hpp"
#include "linkcc/embedding.hpp"

namespace linkcc {

// New component id -> original component id.
using ComponentMap = std::map<ComponentId, ComponentId>;

struct CableResult {
  LinkDiagram diagram;
  ComponentMap alpha;
};

// Cabling of a weighted link without building it. Copies of component K are
// numbered 1..w(K) outward on K's left; copy ids are assigned consecutively
// in the order (original component, copy index), starting at 1.
class CableView {
 public:
  explicit CableView(const WeightedLink& l);

  Count crossing_count() const;
  Count component_count() const;

  ComponentId copy_id(ComponentId original, Weight copy) const;
  ComponentId original_of(ComponentId copy_id) const;
  Weight copy_index(ComponentId copy_id) const;

  // Signed sum over the grid crossings joining the two copies, halved.
  std::int64_t linking_number(ComponentId copy_a, ComponentId copy_b) const;
  std::size_t mutual_crossings(ComponentId copy_a, ComponentId copy_b) const;

  CableResult materialize() const;

 private:
  struct Block {
    ComponentId under, over;
    int sign;
  };
  WeightedLink link_;
  Embedding embedding_;
  std::vector<Block> blocks_;
  std::map<ComponentId, ComponentId> first_copy_;
  std::map<ComponentId, ComponentId> by_first_;
};

// Materialized cabling; refuses outputs with more than `max_crossings` crossings.
CableResult cable(const WeightedLink& l, Count max_crossings = 5'000'000);

}  // namespace linkcc
