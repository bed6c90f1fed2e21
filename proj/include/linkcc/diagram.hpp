#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "linkcc/count.hpp"

namespace linkcc {

using ArcId = std::int64_t;
using ComponentId = std::int64_t;
using Weight = std::int64_t;

// PD crossing. Slots run counterclockwise; slot 0 is the incoming under-arc,
// slot 2 the outgoing under-arc, slots 1 and 3 carry the over-strand.
struct Crossing {
  std::array<ArcId, 4> slots{};

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Arcs in traversal order. An empty list is a crossingless loop.
struct Component {
  ComponentId id = 0;
  std::vector<ArcId> arcs;

  bool is_free_loop() const { return arcs.empty(); }
  friend bool operator==(const Component&, const Component&) = default;
};

struct LinkDiagram {
  std::vector<Crossing> crossings;
  std::vector<Component> components;

  bool has_component(ComponentId id) const;
  const Component& component(ComponentId id) const;
  std::vector<ComponentId> component_ids() const;
  ArcId max_arc_id() const;

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

struct WeightedLink {
  LinkDiagram diagram;
  std::map<ComponentId, Weight> weights;

  // Components without an explicit entry have weight 1.
  Weight weight(ComponentId id) const;
};

class InvalidDiagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ViolationKind {
  NonPositiveArc,
  DuplicateComponent,
  DuplicateArc,
  UnknownArc,
  ArcMultiplicity,
  Traversal,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

std::vector<Violation> validate(const LinkDiagram& d);
void require_valid(const LinkDiagram& d);

// Components sorted by id, crossings sorted by slot 0.
LinkDiagram canonical(LinkDiagram d);

int crossing_sign(const LinkDiagram& d, std::size_t crossing_index);
int crossing_sign(const LinkDiagram& d, const Crossing& c);
std::size_t find_crossing(const LinkDiagram& d, const Crossing& c);

std::size_t crossing_count(const LinkDiagram& d);
Count weighted_crossing_count(const WeightedLink& l);

// Ids of the under and over components at each crossing.
struct CrossingStrands {
  ComponentId under = 0;
  ComponentId over = 0;
  int sign = 0;
};
std::vector<CrossingStrands> crossing_strands(const LinkDiagram& d);

template <typename Scalar = std::int64_t>
struct LinkingMatrix {
  std::vector<ComponentId> ids;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> entries;

  Eigen::Index index_of(ComponentId id) const {
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (ids[i] == id) return static_cast<Eigen::Index>(i);
    throw std::out_of_range("no component " + std::to_string(id));
  }
  Scalar operator()(ComponentId a, ComponentId b) const { return entries(index_of(a), index_of(b)); }
};

std::int64_t linking_number(const LinkDiagram& d, ComponentId a, ComponentId b);
LinkingMatrix<> linking_matrix(const LinkDiagram& d);

template <typename Derived>
auto parity_view(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  return m.unaryExpr([](Scalar v) { return static_cast<Scalar>(v % 2 != 0 ? 1 : 0); });
}

template <typename Derived>
auto unsigned_view(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs();
}

LinkDiagram reverse_orientation(const LinkDiagram& d, ComponentId k);
LinkDiagram smooth_self_crossing(const LinkDiagram& d, const Crossing& c);

}  // namespace linkcc
