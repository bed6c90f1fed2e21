#pragma once

// Small reference computations used by the tests. They work directly on the
// PD code and share no code with the library beyond the data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "linkcc/count.hpp"
#include "linkcc/diagram.hpp"
#include "linkcc/instance.hpp"

namespace oracle {

using linkcc::ArcId;
using linkcc::ComponentId;
using linkcc::Count;
using linkcc::LinkDiagram;

inline LinkDiagram hopf() {
  LinkDiagram d;
  d.crossings = {{{1, 3, 2, 4}}, {{3, 1, 4, 2}}};
  d.components = {{1, {1, 2}}, {2, {3, 4}}};
  return d;
}

// Hopf code with the slots of one crossing reflected; no planar drawing.
inline LinkDiagram twisted() {
  LinkDiagram d = hopf();
  d.crossings[0] = {{1, 4, 2, 3}};
  return d;
}

inline LinkDiagram free_loops(std::initializer_list<ComponentId> ids) {
  LinkDiagram d;
  for (ComponentId id : ids) d.components.push_back({id, {}});
  return d;
}

inline ComponentId owner(const LinkDiagram& d, ArcId a) {
  for (const auto& c : d.components)
    if (std::find(c.arcs.begin(), c.arcs.end(), a) != c.arcs.end()) return c.id;
  return 0;
}

inline std::map<ArcId, ComponentId> owners(const LinkDiagram& d) {
  std::map<ArcId, ComponentId> m;
  for (const auto& c : d.components)
    for (ArcId a : c.arcs) m[a] = c.id;
  return m;
}

inline ArcId successor(const LinkDiagram& d, ArcId a) {
  for (const auto& c : d.components) {
    auto it = std::find(c.arcs.begin(), c.arcs.end(), a);
    if (it == c.arcs.end()) continue;
    ++it;
    return it == c.arcs.end() ? c.arcs.front() : *it;
  }
  return 0;
}

// +1 when the over-strand runs from slot 3 to slot 1. A two-arc component
// has both arcs at the over slots and no direction of its own there; it is
// read off its other crossing, or, when it only passes over, from the
// convention that its first arc ends at the crossing with the smaller slot 0.
inline int sign(const LinkDiagram& d, std::size_t x) {
  const auto& s = d.crossings[x].slots;
  const bool forward = successor(d, s[3]) == s[1], backward = successor(d, s[1]) == s[3];
  if (forward != backward) return forward ? 1 : -1;
  ArcId in = 0;
  std::size_t y = x;
  for (std::size_t i = 0; i < d.crossings.size(); ++i)
    if (i != x && std::find(d.crossings[i].slots.begin(), d.crossings[i].slots.end(), s[1]) != d.crossings[i].slots.end())
      y = i;
  if (y == x) {
    in = s[2];
  } else if (d.crossings[y].slots[0] == s[1] || d.crossings[y].slots[0] == s[3]) {
    in = d.crossings[y].slots[0] == s[1] ? s[3] : s[1];
  } else {
    ArcId first = 0;
    for (const auto& c : d.components)
      if (std::find(c.arcs.begin(), c.arcs.end(), s[1]) != c.arcs.end()) first = c.arcs.front();
    const ArcId second = first == s[1] ? s[3] : s[1];
    in = s[0] < d.crossings[y].slots[0] ? first : second;
  }
  return in == s[3] ? 1 : -1;
}

inline std::int64_t linking(const LinkDiagram& d, ComponentId a, ComponentId b) {
  const auto own = owners(d);
  std::int64_t sum = 0;
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    const ComponentId u = own.at(d.crossings[x].slots[0]), o = own.at(d.crossings[x].slots[1]);
    if ((u == a && o == b) || (u == b && o == a)) sum += sign(d, x);
  }
  return sum / 2;
}

inline std::size_t mutual_crossings(const LinkDiagram& d, ComponentId a, ComponentId b) {
  const auto own = owners(d);
  std::size_t n = 0;
  for (const auto& x : d.crossings) {
    const ComponentId u = own.at(x.slots[0]), o = own.at(x.slots[1]);
    if ((u == a && o == b) || (u == b && o == a)) ++n;
  }
  return n;
}

inline std::size_t self_crossings(const LinkDiagram& d) {
  const auto own = owners(d);
  std::size_t n = 0;
  for (const auto& x : d.crossings) n += own.at(x.slots[0]) == own.at(x.slots[1]);
  return n;
}

// Genus from dart permutations: darts are (crossing, slot), faces are the
// orbits of "step to the other end of the arc, then turn counterclockwise".
inline int genus(const LinkDiagram& d) {
  const std::size_t n = d.crossings.size() * 4;
  std::map<ArcId, std::vector<std::size_t>> ends;
  for (std::size_t i = 0; i < n; ++i) ends[d.crossings[i / 4].slots[i % 4]].push_back(i);
  std::vector<std::size_t> mate(n);
  for (const auto& [arc, e] : ends) {
    mate[e[0]] = e[1];
    mate[e[1]] = e[0];
  }
  std::vector<std::size_t> parent(d.crossings.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) parent[find(i / 4)] = find(mate[i] / 4);

  std::map<std::size_t, long> faces, vertices;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++faces[find(i / 4)];
    for (std::size_t j = i; !seen[j];) {
      seen[j] = true;
      const std::size_t m = mate[j];
      j = (m / 4) * 4 + (m % 4 + 1) % 4;
    }
  }
  for (std::size_t c = 0; c < d.crossings.size(); ++c) ++vertices[find(c)];
  long g = 0;
  for (const auto& [piece, v] : vertices) g += (2 - faces[piece] + v) / 2;  // E = 2V
  return static_cast<int>(g);
}

inline std::int64_t bipartite_crossings(const linkcc::BipartiteInstance& inst, const std::vector<int>& position) {
  std::int64_t cr = 0;
  const auto& a = inst.assignment;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t k = j + 1; k < a.size(); ++k)
      cr += position[static_cast<std::size_t>(a[j] - 1)] > position[static_cast<std::size_t>(a[k] - 1)];
  return cr;
}

struct Optimum {
  std::int64_t minimum;
  std::vector<int> position;
};

// Every order by std::next_permutation; the first minimum is the lexicographically smallest.
inline Optimum brute_force_bcr(const linkcc::BipartiteInstance& inst) {
  std::vector<int> p(static_cast<std::size_t>(inst.n_u));
  std::iota(p.begin(), p.end(), 1);
  Optimum best{-1, p};
  do {
    const std::int64_t c = bipartite_crossings(inst, p);
    if (best.minimum < 0 || c < best.minimum) best = {c, p};
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline std::pair<std::int64_t, std::int64_t> weights(std::int64_t n_u) {
  const std::int64_t w2 = 80 * n_u * n_u;
  return {12 * n_u * n_u * w2 + 80 * n_u * n_u, w2};
}

// Closed-form weighted total for a drawing with `cr` bipartite crossings.
inline Count closed_form_total(std::int64_t n_u, std::int64_t cr) {
  const auto [w1, w2] = weights(n_u);
  const Count a = w1, b = w2, nu = n_u, nv = 4 * n_u;
  return (56 * nu + 8) * a * a + (4 * nu * nu + 2 * nv) * a * b + 8 * nu * nu * a + 4 * nv * b + 4 * Count{cr};
}

}  // namespace oracle
