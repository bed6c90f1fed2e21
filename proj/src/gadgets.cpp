#include "linkcc/gadgets.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "framework_layout.hpp"
#include "linkcc/embedding.hpp"

namespace linkcc {

std::string to_string(const Role& role) {
  const std::string a = std::to_string(role.a), b = std::to_string(role.b);
  switch (role.kind) {
    case RoleKind::Ring: return "ring:" + a + ":" + b;
    case RoleKind::Hinge: return "hinge:" + a + ":" + b;
    case RoleKind::UGuard: return "uguard:" + a;
    case RoleKind::VGuard: return "vguard:" + a;
    case RoleKind::EdgeLink: return "edge:" + a + ":" + b;
  }
  return "?";
}

Role parse_role(std::string_view text) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ':')) parts.push_back(token);
  auto number = [&](std::size_t i) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(parts.at(i), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != parts[i].size()) throw std::invalid_argument("malformed role: " + std::string(text));
    return v;
  };
  if (parts.empty()) throw std::invalid_argument("empty role");
  const std::string& kind = parts[0];
  const std::size_t want = (kind == "uguard" || kind == "vguard") ? 2 : 3;
  if (parts.size() != want) throw std::invalid_argument("malformed role: " + std::string(text));
  if (kind == "ring") return Role::ring(number(1), number(2));
  if (kind == "hinge") return Role::hinge(number(1), number(2));
  if (kind == "uguard") return Role::u_guard(number(1));
  if (kind == "vguard") return Role::v_guard(number(1));
  if (kind == "edge") return Role::edge_link(number(1), number(2));
  throw std::invalid_argument("unknown role: " + std::string(text));
}

namespace detail {

namespace {

using I = std::int64_t;

class Jitter {
 public:
  explicit Jitter(unsigned attempt) : state_(0x9E3779B97F4A7C15ULL * (attempt + 1)) {}

  I operator()(I range) {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return static_cast<I>(z % static_cast<std::uint64_t>(2 * range + 1)) - range;
  }

 private:
  std::uint64_t state_;
};

bool over_rule(const Role& ra, const Role& rb, std::size_t k, std::size_t count, int n_u) {
  const RoleKind a = ra.kind, b = rb.kind;
  auto pair_is = [&](RoleKind x, RoleKind y) { return (a == x && b == y) || (a == y && b == x); };
  if (a == RoleKind::EdgeLink && b == RoleKind::EdgeLink && ra.a != rb.a) return ra.a > rb.a;
  if (pair_is(RoleKind::EdgeLink, RoleKind::Ring)) return a == RoleKind::EdgeLink;
  if (pair_is(RoleKind::UGuard, RoleKind::Ring) && count == 4) {
    const Role& ring = a == RoleKind::Ring ? ra : rb;
    const bool guard_over = ring.a > n_u;
    return a == RoleKind::UGuard ? guard_over : !guard_over;
  }
  const bool linked_pair = (a == RoleKind::Ring && b == RoleKind::Ring) || pair_is(RoleKind::Hinge, RoleKind::Ring) ||
                           pair_is(RoleKind::UGuard, RoleKind::Ring) || pair_is(RoleKind::VGuard, RoleKind::Ring) ||
                           pair_is(RoleKind::EdgeLink, RoleKind::UGuard) ||
                           pair_is(RoleKind::EdgeLink, RoleKind::VGuard);
  if (!linked_pair || count != 2)
    throw std::logic_error("unexpected crossings between " + to_string(ra) + " and " + to_string(rb));
  return alternate_over(0, 0, k, count);
}

}  // namespace

Layout framework_layout(int k, int l, const GuardPlan* plan, unsigned attempt) {
  constexpr I t = 60, gap = 400, delta = 20, h = 20, ring_step = 500, ring_len = 600;
  constexpr I column = 400, guard_half = 110, edge_half = 8, vguard_half = 40;
  const int n_u = plan != nullptr ? plan->n_u : 0;
  Jitter jitter(attempt);

  Layout out;
  ComponentId next_id = 1;
  auto add = [&](Polygon p, Role r) {
    p.id = next_id++;
    out.labels[p.id] = r;
    out.polygons.push_back(std::move(p));
  };

  const I s_inner = n_u > 0 ? n_u * column / 2 + 700 : 800;
  auto half = [&](int i) { return s_inner + (k - i) * gap; };
  const I s1 = k >= 1 ? half(1) : 800;
  const I corridor_left = -n_u * column / 2;
  const I hinge4_x = n_u > 0 ? corridor_left - 250 : -250;
  const I xl = -(s1 + gap), yt = s1 + gap, yb = n_u > 0 ? -(s1 + 2400) : -(s1 + gap);
  const I ring4_end = k >= 1 ? hinge4_x + 200 : xl + ring_len;

  std::vector<I> xs(static_cast<std::size_t>(l) + 1), xe(xs.size()), yc(xs.size());
  I xr = s1 + gap;
  if (l > 4) {
    xs[5] = ring4_end - 100;
    for (int m = 6; m <= l; ++m) xs[m] = xs[m - 1] + ring_step;
    xr = std::max(xs[l] + ring_len, s1 + gap);
    for (int m = 5; m < l; ++m) xe[m] = xs[m] + ring_len;
    xe[l] = xr;
  }
  yc[4] = yb;
  for (int m = 5; m <= l; ++m) yc[m] = yb + ((m - 4) % 2 != 0 ? delta : 0);

  add(rectangle(0, xr - t, yb, xr + t, yt), Role::ring(0, 1));
  add(rectangle(0, xl, yt - t, xr, yt + t), Role::ring(0, 2));
  add(rectangle(0, xl - t, yb, xl + t, yt), Role::ring(0, 3));
  add(rectangle(0, xl, yb - t, l == 4 ? xr : ring4_end, yb + t), Role::ring(0, 4));
  for (int m = 5; m <= l; ++m) add(rectangle(0, xs[m], yc[m] - t, xe[m], yc[m] + t), Role::ring(0, m));

  for (int i = 1; i <= k; ++i) {
    const I s = half(i);
    add(rectangle(0, s - t, -s, s + t, s), Role::ring(i, 1));
    add(rectangle(0, -s, s - t, s, s + t), Role::ring(i, 2));
    add(rectangle(0, -s - t, -s, -s + t, s), Role::ring(i, 3));
    add(rectangle(0, -s, -s - t, s, -s + t), Role::ring(i, 4));
  }

  for (int i = 0; i < k; ++i) {
    const I right = i == 0 ? xr : half(i), top = i == 0 ? yt : half(i);
    const I left = i == 0 ? xl : -half(i), bottom = i == 0 ? yb : -half(i);
    const I in = half(i + 1);
    add(rectangle(0, in + t / 2, -h, right - t / 2, h), Role::hinge(i, 1));
    add(rectangle(0, -h, in + t / 2, h, top - t / 2), Role::hinge(i, 2));
    add(rectangle(0, left + t / 2, -h, -in - t / 2, h), Role::hinge(i, 3));
    add(rectangle(0, hinge4_x - h, bottom + t / 2, hinge4_x + h, -in - t / 2), Role::hinge(i, 4));
  }

  if (plan != nullptr && n_u > 0) {
    const int n_v = static_cast<int>(plan->assignment.size());
    std::vector<I> gx(static_cast<std::size_t>(n_u) + 1), vx(static_cast<std::size_t>(n_v) + 1);
    for (int i = 1; i <= n_u; ++i) {
      const int rank = plan->position[static_cast<std::size_t>(i - 1)];
      gx[i] = corridor_left + (rank - 1) * column + column / 2 + jitter(20);
      add(rectangle(0, gx[i] - guard_half, -half(i) - 20, gx[i] + guard_half, -half(i + n_u) + 10), Role::u_guard(i));
    }
    const I vtop = yb + delta + t + 200;
    for (int j = 1; j <= n_v; ++j) {
      const int m = 4 + j;
      vx[j] = xs[m] + 300 + jitter(30);
      add(rectangle(0, vx[j] - vguard_half, yc[m] + 7, vx[j] + vguard_half, vtop), Role::v_guard(j));
    }
    const I y_turn = -s1 - t - 150, y_land = vtop + 150, y_end = vtop - 80;
    constexpr I offsets[4] = {-75, -25, 25, 75};
    std::vector<int> used(static_cast<std::size_t>(n_u) + 1, 0);
    for (int j = 1; j <= n_v; ++j) {
      const int u = plan->assignment[static_cast<std::size_t>(j - 1)];
      const I ex = gx[u] + offsets[used[u]++ % 4] + jitter(4);
      add(ribbon(0, {{ex, -half(u) + 20}, {ex, y_turn}, {vx[j], y_land}, {vx[j], y_end}}, edge_half),
          Role::edge_link(u, j));
    }
  }
  return out;
}

LabeledDiagram build_framework(int k, int l, const GuardPlan* plan) {
  const int n_u = plan != nullptr ? plan->n_u : 0;
  for (unsigned attempt = 0; attempt < 64; ++attempt) {
    Layout layout = framework_layout(k, l, plan, attempt);
    std::vector<Role> roles;
    roles.reserve(layout.polygons.size());
    for (const auto& p : layout.polygons) roles.push_back(layout.labels.at(p.id));
    try {
      LinkDiagram d = trace_polygons(layout.polygons, [&](std::size_t a, std::size_t b, std::size_t i, std::size_t n) {
        return over_rule(roles[a], roles[b], i, n, n_u);
      });
      return {std::move(d), std::move(layout.labels)};
    } catch (const DegenerateGeometry&) {
      continue;
    }
  }
  throw std::runtime_error("could not place the construction in general position");
}

}  // namespace detail

LabeledDiagram make_chain(int n) {
  if (n < 4) throw std::invalid_argument("a chain needs at least 4 components");
  return detail::build_framework(0, n, nullptr);
}

LabeledDiagram make_framework(int k, int l) {
  if (k < 0 || l < 4) throw std::invalid_argument("a framework needs k >= 0 and l >= 4");
  return detail::build_framework(k, l, nullptr);
}

std::vector<std::string> chain_structure_problems(const LinkDiagram& d, const GadgetLabels& labels) {
  const Traversal t = resolve_traversal(d);
  std::map<ComponentId, std::size_t> index;
  for (std::size_t i = 0; i < d.components.size(); ++i) index[d.components[i].id] = i;

  std::map<int, std::map<int, ComponentId>> chains;
  for (const auto& [id, role] : labels) {
    if (!index.contains(id)) throw std::invalid_argument("label for unknown component " + std::to_string(id));
    if (role.kind != RoleKind::Ring) continue;
    if (!chains[role.a].emplace(role.b, id).second)
      throw std::invalid_argument("two rings share position " + to_string(role));
  }

  std::vector<std::string> problems;
  for (const auto& [chain, members] : chains) {
    const int n = static_cast<int>(members.size());
    if (n < 3 || members.begin()->first != 1 || members.rbegin()->first != n)
      throw std::invalid_argument("chain " + std::to_string(chain) + " has non-contiguous positions");
    std::map<std::size_t, int> pos;  // component index -> position from 0
    for (const auto& [p, id] : members) pos[index.at(id)] = p - 1;
    const std::string name = "chain " + std::to_string(chain);

    std::map<std::pair<int, int>, std::vector<std::size_t>> pair_crossings;
    for (std::size_t x = 0; x < d.crossings.size(); ++x) {
      auto u = pos.find(t.under[x].component), o = pos.find(t.over[x].component);
      if (u == pos.end() || o == pos.end()) continue;
      const int p = u->second, q = o->second;
      if (p == q) {
        problems.push_back(name + ": ring " + std::to_string(p + 1) + " crosses itself");
        continue;
      }
      const int gap = (q - p + n) % n;
      if (gap != 1 && gap != n - 1) {
        problems.push_back(name + ": rings " + std::to_string(p + 1) + " and " + std::to_string(q + 1) +
                           " cross but are not neighbours");
        continue;
      }
      pair_crossings[{std::min(p, q), std::max(p, q)}].push_back(x);
    }
    for (int p = 0; p < n; ++p) {
      const int q = (p + 1) % n;
      const auto& list = pair_crossings[{std::min(p, q), std::max(p, q)}];
      const std::string rings = "rings " + std::to_string(p + 1) + " and " + std::to_string(q + 1);
      if (list.size() != 2) {
        problems.push_back(name + ": " + rings + " cross " + std::to_string(list.size()) + " times");
        continue;
      }
      if (t.over[list[0]].component == t.over[list[1]].component)
        problems.push_back(name + ": " + rings + " do not alternate over and under");
    }
    for (const auto& [ci, p] : pos) {
      const auto prev = members.at((p - 1 + n) % n + 1), next = members.at((p + 1) % n + 1);
      std::vector<int> seq;
      for (std::size_t x : t.passage_crossings[ci]) {
        const std::size_t other = t.under[x].component == ci ? t.over[x].component : t.under[x].component;
        const ComponentId oid = d.components[other].id;
        if (oid == prev) seq.push_back(0);
        if (oid == next) seq.push_back(1);
      }
      int changes = 0;
      for (std::size_t i = 0; i < seq.size(); ++i) changes += seq[i] != seq[(i + 1) % seq.size()];
      if (changes > 2)
        problems.push_back(name + ": crossings of ring " + std::to_string(p + 1) + " with its neighbours interleave");
    }
  }
  return problems;
}

bool check_chain_structure(const LinkDiagram& d, const GadgetLabels& labels) {
  return chain_structure_problems(d, labels).empty();
}

}  // namespace linkcc
