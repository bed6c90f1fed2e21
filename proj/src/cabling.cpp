#include "linkcc/cabling.hpp"

namespace linkcc {

CableView::CableView(const WeightedLink& l) : link_(l), embedding_(decompose(l.diagram)) {
  for (const auto& [id, w] : l.weights) {
    if (!l.diagram.has_component(id)) throw std::invalid_argument("weight for unknown component " + std::to_string(id));
    if (w < 1) throw std::invalid_argument("weights must be positive");
  }
  for (const auto& s : crossing_strands(l.diagram)) {
    if (s.under == s.over)
      throw std::invalid_argument("component " + std::to_string(s.under) + " has a self-crossing");
    blocks_.push_back({s.under, s.over, s.sign});
  }
  ComponentId next = 1;
  for (const auto& c : l.diagram.components) {
    first_copy_[c.id] = next;
    by_first_[next] = c.id;
    next += l.weight(c.id);
  }
}

Count CableView::crossing_count() const {
  Count total = 0;
  for (const Block& b : blocks_) total += static_cast<Count>(link_.weight(b.under)) * link_.weight(b.over);
  return total;
}

Count CableView::component_count() const {
  Count total = 0;
  for (const auto& c : link_.diagram.components) total += link_.weight(c.id);
  return total;
}

ComponentId CableView::copy_id(ComponentId original, Weight copy) const {
  if (copy < 1 || copy > link_.weight(original)) throw std::out_of_range("copy index out of range");
  return first_copy_.at(original) + copy - 1;
}

ComponentId CableView::original_of(ComponentId id) const {
  auto it = by_first_.upper_bound(id);
  if (it == by_first_.begin()) throw std::out_of_range("no copy " + std::to_string(id));
  --it;
  if (id >= it->first + link_.weight(it->second)) throw std::out_of_range("no copy " + std::to_string(id));
  return it->second;
}

Weight CableView::copy_index(ComponentId id) const { return id - first_copy_.at(original_of(id)) + 1; }

std::size_t CableView::mutual_crossings(ComponentId a, ComponentId b) const {
  const ComponentId ka = original_of(a), kb = original_of(b);
  std::size_t n = 0;
  for (const Block& x : blocks_)
    if ((x.under == ka && x.over == kb) || (x.under == kb && x.over == ka)) ++n;
  return n;
}

std::int64_t CableView::linking_number(ComponentId a, ComponentId b) const {
  const ComponentId ka = original_of(a), kb = original_of(b);
  // Each block between the two originals holds exactly one cell joining the two copies.
  std::int64_t sum = 0;
  for (const Block& x : blocks_)
    if ((x.under == ka && x.over == kb) || (x.under == kb && x.over == ka)) sum += x.sign;
  return sum / 2;
}

CableResult CableView::materialize() const {
  std::vector<std::size_t> base(blocks_.size() + 1, 0);
  for (std::size_t x = 0; x < blocks_.size(); ++x)
    base[x + 1] = base[x] + static_cast<std::size_t>(link_.weight(blocks_[x].under) * link_.weight(blocks_[x].over));

  Embedding out;
  out.crossing_count = base.back();
  CableResult result;
  ArcId next_arc = 1;
  for (const Path& p : embedding_.paths) {
    const Weight w = link_.weight(p.id);
    for (Weight i = 1; i <= w; ++i) {
      Path copy;
      copy.id = copy_id(p.id, i);
      result.alpha[copy.id] = p.id;
      for (const Passage& q : p.passages) {
        const Block& b = blocks_[q.crossing];
        const Weight wu = link_.weight(b.under), wo = link_.weight(b.over);
        if (q.is_under()) {
          for (Weight s = 0; s < wo; ++s) {
            const Weight j = b.sign > 0 ? s + 1 : wo - s;
            copy.passages.push_back({base[q.crossing] + static_cast<std::size_t>((i - 1) * wo + (j - 1)), q.entry});
            copy.arcs.push_back(next_arc++);
          }
        } else {
          for (Weight s = 0; s < wu; ++s) {
            const Weight u = b.sign > 0 ? wu - s : s + 1;
            copy.passages.push_back({base[q.crossing] + static_cast<std::size_t>((u - 1) * wo + (i - 1)), q.entry});
            copy.arcs.push_back(next_arc++);
          }
        }
      }
      out.paths.push_back(std::move(copy));
    }
  }
  result.diagram = assemble(out);
  return result;
}

CableResult cable(const WeightedLink& l, Count max_crossings) {
  CableView view(l);
  if (view.crossing_count() > max_crossings)
    throw std::length_error("cable would have " + to_decimal(view.crossing_count()) + " crossings");
  return view.materialize();
}

}  // namespace linkcc
