#include "linkcc/reduction.hpp"

#include <algorithm>
#include <set>

#include "framework_layout.hpp"
#include "linkcc/embedding.hpp"

namespace linkcc {

WeightPair compute_weights(int n_u) {
  if (n_u < 1) throw std::invalid_argument("n_u must be at least 1");
  const std::int64_t sq = static_cast<std::int64_t>(n_u) * n_u;
  const std::int64_t w2 = 80 * sq;
  return {12 * sq * w2 + 80 * sq, w2};
}

bool check_weight_conditions(std::int64_t n_u, std::int64_t w1, std::int64_t w2) {
  if (n_u < 1 || w1 < 1 || w2 < 1) return false;
  if (w1 <= w2) return false;
  const Count u2 = static_cast<Count>(n_u) * n_u;
  const Count nv = 4 * static_cast<Count>(n_u);
  const Count c = nv * nv;
  const Count a = w1, b = w2;
  const bool i = a * a > (4 * u2 + 2 * nv) * a * b + 8 * u2 * a + 4 * nv * b + 4 * c;
  const bool ii = a * b > 8 * u2 * a + 4 * nv * b + 4 * c;
  const bool iii = a > 4 * c;
  const bool iv = b > 4 * c;
  return i && ii && iii && iv;
}

Count budget(const BipartiteInstance& inst) {
  validate_instance(inst);
  const WeightPair w = compute_weights(inst.n_u);
  const Count u = inst.n_u, u2 = u * u, nv = inst.n_v();
  const Count a = w.w1, b = w.w2;
  return (56 * u + 8) * a * a + (4 * u2 + 2 * nv) * a * b + 8 * u2 * a + 4 * nv * b + 4 * static_cast<Count>(inst.budget);
}

CompiledLink build_link(const BipartiteInstance& inst, const UOrder& pi) {
  validate_instance(inst);
  validate_order(pi, inst.n_u);
  detail::GuardPlan plan{inst.n_u, inst.assignment, pi.position};
  LabeledDiagram built = detail::build_framework(2 * inst.n_u, inst.n_v() + 4, &plan);
  const WeightPair w = compute_weights(inst.n_u);
  CompiledLink out;
  out.link.diagram = std::move(built.diagram);
  out.labels = std::move(built.labels);
  for (const auto& [id, role] : out.labels) {
    switch (role.kind) {
      case RoleKind::Ring:
      case RoleKind::Hinge: out.link.weights[id] = w.w1; break;
      case RoleKind::UGuard:
      case RoleKind::VGuard: out.link.weights[id] = w.w2; break;
      case RoleKind::EdgeLink: out.link.weights[id] = 1; break;
    }
  }
  return out;
}

UOrder extract_u_order(const WeightedLink& l, const GadgetLabels& labels) {
  const LinkDiagram& d = l.diagram;
  const Traversal t = resolve_traversal(d);
  std::map<ComponentId, std::size_t> index;
  for (std::size_t i = 0; i < d.components.size(); ++i) index[d.components[i].id] = i;
  for (const auto& [id, role] : labels)
    if (!index.contains(id)) throw std::invalid_argument("label for unknown component " + std::to_string(id));

  std::map<int, std::size_t> guard;             // U index -> component index
  std::map<std::size_t, int> guard_of;          // component index -> U index
  std::map<std::pair<int, int>, std::size_t> ring;
  for (const auto& [id, role] : labels) {
    if (role.kind == RoleKind::UGuard) {
      guard[role.a] = index.at(id);
      guard_of[index.at(id)] = role.a;
    }
    if (role.kind == RoleKind::Ring) ring[{role.a, role.b}] = index.at(id);
  }
  const int n_u = static_cast<int>(guard.size());
  if (n_u == 0 || guard.begin()->first != 1 || guard.rbegin()->first != n_u)
    throw std::invalid_argument("U-guard labels missing or not numbered 1..n");

  auto other = [&](std::size_t x, std::size_t ci) {
    return t.under[x].component == ci ? t.over[x].component : t.under[x].component;
  };
  auto shared = [&](std::size_t a, std::size_t b) {
    int count = 0;
    for (std::size_t x : t.passage_crossings[a])
      if (other(x, a) == b) ++count;
    return count;
  };
  for (int i = 1; i <= n_u; ++i) {
    auto low = ring.find({i, 4}), high = ring.find({i + n_u, 4});
    if (low == ring.end() || high == ring.end()) throw std::invalid_argument("ring labels missing");
    if (shared(guard[i], low->second) != 2 || shared(guard[i], high->second) != 2)
      throw std::invalid_argument("U-guard " + std::to_string(i) + " does not hook its two rings");
  }

  auto anchor = ring.find({n_u + 1, 4});
  const std::size_t r = anchor->second;
  const auto& along = t.passage_crossings[r];
  const std::size_t m = along.size();
  std::vector<int> seq(m, 0);
  for (std::size_t k = 0; k < m; ++k) {
    auto g = guard_of.find(other(along[k], r));
    seq[k] = g == guard_of.end() ? 0 : g->second;
  }
  // Maximal cyclic runs of guard crossings; exactly one must meet every guard twice in a row.
  std::vector<std::vector<int>> runs;
  const auto start = std::find(seq.begin(), seq.end(), 0);
  if (start == seq.end()) throw std::invalid_argument("diagram is not in canonical form");
  const std::size_t s0 = static_cast<std::size_t>(start - seq.begin());
  std::vector<int> current;
  for (std::size_t step = 1; step <= m; ++step) {
    const int g = seq[(s0 + step) % m];
    if (g != 0) {
      current.push_back(g);
    } else if (!current.empty()) {
      runs.push_back(std::move(current));
      current.clear();
    }
  }
  std::vector<int> found;
  for (const auto& run : runs) {
    if (static_cast<int>(run.size()) != 2 * n_u) continue;
    std::vector<int> order;
    bool paired = true;
    for (std::size_t k = 0; k < run.size(); k += 2) {
      paired = paired && run[k] == run[k + 1];
      order.push_back(run[k]);
    }
    if (!paired || std::set<int>(order.begin(), order.end()).size() != static_cast<std::size_t>(n_u)) continue;
    if (!found.empty()) throw std::invalid_argument("U order is ambiguous");
    found = order;
  }
  if (found.empty()) throw std::invalid_argument("diagram is not in canonical form");
  UOrder pi;
  pi.position.resize(static_cast<std::size_t>(n_u));
  for (int r2 = 0; r2 < n_u; ++r2) pi.position[static_cast<std::size_t>(found[static_cast<std::size_t>(r2)] - 1)] = r2 + 1;
  return pi;
}

}  // namespace linkcc
