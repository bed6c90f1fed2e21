#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "linkcc/diagram.hpp"

namespace linkcc {

enum class RoleKind { Ring, Hinge, UGuard, VGuard, EdgeLink };

// Ring(chain, position), Hinge(layer, slot), UGuard(u), VGuard(v), EdgeLink(u, v).
// Chains, layers and positions follow the construction: chain 0 is outermost,
// positions and slots count from 1, U and V indices count from 1.
struct Role {
  RoleKind kind = RoleKind::Ring;
  int a = 0;
  int b = 0;

  static Role ring(int chain, int position) { return {RoleKind::Ring, chain, position}; }
  static Role hinge(int layer, int slot) { return {RoleKind::Hinge, layer, slot}; }
  static Role u_guard(int u) { return {RoleKind::UGuard, u, 0}; }
  static Role v_guard(int v) { return {RoleKind::VGuard, v, 0}; }
  static Role edge_link(int u, int v) { return {RoleKind::EdgeLink, u, v}; }

  friend bool operator==(const Role&, const Role&) = default;
};

// Text forms: ring:i:j, hinge:i:j, uguard:i, vguard:j, edge:u:v.
std::string to_string(const Role& role);
Role parse_role(std::string_view text);

using GadgetLabels = std::map<ComponentId, Role>;

struct LabeledDiagram {
  LinkDiagram diagram;
  GadgetLabels labels;
};

LabeledDiagram make_chain(int n);
LabeledDiagram make_framework(int k, int l);

bool check_chain_structure(const LinkDiagram& d, const GadgetLabels& labels);

// Same check, listing every failed condition.
std::vector<std::string> chain_structure_problems(const LinkDiagram& d, const GadgetLabels& labels);

}  // namespace linkcc
