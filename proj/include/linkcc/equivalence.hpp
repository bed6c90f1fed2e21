#pragma once

#include <map>
#include <optional>

#include "linkcc/diagram.hpp"

namespace linkcc {

using ComponentBijection = std::map<ComponentId, ComponentId>;  // component of a -> component of b

// Bijection under which all pairwise linking numbers agree mod 2.
std::optional<ComponentBijection> parity_linking_equivalent(const LinkDiagram& a, const LinkDiagram& b);

struct OrientedBijection {
  ComponentBijection map;
  std::map<ComponentId, int> orientation;  // -1 where the component of a must be reversed
};

// Bijection and orientation choice under which all linking numbers agree.
std::optional<OrientedBijection> linking_equivalent(const LinkDiagram& a, const LinkDiagram& b);

bool check_parity_bijection(const LinkDiagram& a, const LinkDiagram& b, const ComponentBijection& map);
bool check_oriented_bijection(const LinkDiagram& a, const LinkDiagram& b, const OrientedBijection& m);

}  // namespace linkcc
