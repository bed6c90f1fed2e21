#include "linkcc/embedding.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <string>

namespace linkcc {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

std::string arc_text(ArcId a) { return std::to_string(a); }

}  // namespace

Path& Embedding::path(ComponentId id) {
  for (auto& p : paths)
    if (p.id == id) return p;
  throw std::out_of_range("no component " + std::to_string(id));
}

Traversal resolve_traversal(const LinkDiagram& d, std::vector<Violation>* violations) {
  std::vector<Violation> local;
  std::vector<Violation>& out = violations != nullptr ? *violations : local;
  const std::size_t first = out.size();
  auto report = [&](ViolationKind kind, std::string detail) { out.push_back({kind, std::move(detail)}); };
  auto finish = [&](Traversal&& t) -> Traversal {
    if (violations == nullptr && out.size() > first) throw InvalidDiagram(out[first].detail);
    return std::move(t);
  };

  Traversal t;
  const std::size_t n = d.crossings.size();

  std::set<ComponentId> ids;
  std::map<ArcId, std::size_t> owner;
  for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
    const Component& comp = d.components[ci];
    if (!ids.insert(comp.id).second)
      report(ViolationKind::DuplicateComponent, "component id " + std::to_string(comp.id) + " is repeated");
    for (ArcId a : comp.arcs) {
      if (a <= 0) {
        report(ViolationKind::NonPositiveArc, "component " + std::to_string(comp.id) + " lists arc " + arc_text(a));
        continue;
      }
      if (!owner.emplace(a, ci).second)
        report(ViolationKind::DuplicateArc, "arc " + arc_text(a) + " is listed more than once");
    }
  }

  std::map<ArcId, std::vector<ArcEnd>> occurrences;
  for (std::size_t i = 0; i < n; ++i) {
    for (int s = 0; s < 4; ++s) {
      const ArcId a = d.crossings[i].slots[s];
      if (a <= 0) {
        report(ViolationKind::NonPositiveArc, "crossing " + std::to_string(i) + " holds arc " + arc_text(a));
        continue;
      }
      occurrences[a].push_back({i, s});
    }
  }
  for (const auto& [a, ends] : occurrences) {
    if (!owner.contains(a))
      report(ViolationKind::UnknownArc, "arc " + arc_text(a) + " belongs to no component");
    else if (ends.size() != 2)
      report(ViolationKind::ArcMultiplicity,
             "arc " + arc_text(a) + " occupies " + std::to_string(ends.size()) + " crossing slots");
  }
  for (const auto& [a, ci] : owner) {
    (void)ci;
    if (!occurrences.contains(a))
      report(ViolationKind::ArcMultiplicity, "arc " + arc_text(a) + " occupies no crossing slot");
  }
  if (out.size() > first) return finish(std::move(t));

  std::map<ArcId, std::size_t> under_in;
  std::map<std::pair<ArcId, ArcId>, std::vector<std::size_t>> over_pairs;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = d.crossings[i].slots;
    if (!under_in.emplace(s[0], i).second)
      report(ViolationKind::Traversal, "arc " + arc_text(s[0]) + " enters two crossings as under-strand");
    over_pairs[{std::min(s[1], s[3]), std::max(s[1], s[3])}].push_back(i);
  }
  for (auto& [key, list] : over_pairs) {
    (void)key;
    std::sort(list.begin(), list.end(),
              [&](std::size_t x, std::size_t y) { return d.crossings[x].slots[0] < d.crossings[y].slots[0]; });
  }

  t.under.assign(n, {kUnset, kUnset, 0});
  t.over.assign(n, {kUnset, kUnset, 0});
  t.passage_crossings.resize(d.components.size());
  for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
    const auto& arcs = d.components[ci].arcs;
    const std::size_t m = arcs.size();
    t.passage_crossings[ci].assign(m, kUnset);
    for (std::size_t k = 0; k < m; ++k) {
      const ArcId x = arcs[k];
      const ArcId y = arcs[(k + 1) % m];
      auto u = under_in.find(x);
      if (u != under_in.end() && d.crossings[u->second].slots[2] == y && t.under[u->second].component == kUnset) {
        const std::size_t c = u->second;
        t.under[c] = {ci, k, 0};
        t.passage_crossings[ci][k] = c;
        t.head[x] = {c, 0};
        t.tail[y] = {c, 2};
        continue;
      }
      bool placed = false;
      auto o = over_pairs.find({std::min(x, y), std::max(x, y)});
      if (o != over_pairs.end()) {
        for (std::size_t c : o->second) {
          if (t.over[c].component != kUnset) continue;
          const auto& s = d.crossings[c].slots;
          int entry = -1;
          if (s[3] == x && s[1] == y)
            entry = 3;
          else if (s[1] == x && s[3] == y)
            entry = 1;
          if (entry < 0) continue;
          t.over[c] = {ci, k, entry};
          t.passage_crossings[ci][k] = c;
          t.head[x] = {c, entry};
          t.tail[y] = {c, (entry + 2) % 4};
          placed = true;
          break;
        }
      }
      if (!placed)
        report(ViolationKind::Traversal, "component " + std::to_string(d.components[ci].id) + ": arc " +
                                             arc_text(x) + " does not continue into arc " + arc_text(y) +
                                             " at any crossing");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (t.under[i].component == kUnset)
      report(ViolationKind::Traversal, "crossing " + std::to_string(i) + " has an untraversed under-strand");
    if (t.over[i].component == kUnset)
      report(ViolationKind::Traversal, "crossing " + std::to_string(i) + " has an untraversed over-strand");
  }
  return finish(std::move(t));
}

Embedding decompose(const LinkDiagram& d) {
  const Traversal t = resolve_traversal(d);
  Embedding e;
  e.crossing_count = d.crossings.size();
  e.paths.reserve(d.components.size());
  for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
    Path p;
    p.id = d.components[ci].id;
    p.arcs = d.components[ci].arcs;
    for (std::size_t k = 0; k < p.arcs.size(); ++k) {
      const std::size_t c = t.passage_crossings[ci][k];
      const bool under = t.under[c].component == ci && t.under[c].position == k;
      p.passages.push_back({c, under ? 0 : t.over[c].entry});
    }
    e.paths.push_back(std::move(p));
  }
  return e;
}

LinkDiagram assemble(const Embedding& e) {
  const std::size_t n = e.crossing_count;
  std::vector<std::array<ArcId, 4>> ports(n, {0, 0, 0, 0});
  std::vector<int> under_entry(n, -1);
  for (const Path& p : e.paths) {
    const std::size_t m = p.arcs.size();
    if (p.passages.size() != m) throw std::logic_error("path arcs and passages disagree");
    for (std::size_t k = 0; k < m; ++k) {
      const Passage& q = p.passages[k];
      if (q.crossing >= n || q.entry < 0 || q.entry > 3) throw std::logic_error("passage out of range");
      ArcId& in = ports[q.crossing][q.entry];
      ArcId& out = ports[q.crossing][(q.entry + 2) % 4];
      if (in != 0 || out != 0) throw std::logic_error("crossing port used twice");
      in = p.arcs[k];
      out = p.arcs[(k + 1) % m];
      if (q.is_under()) under_entry[q.crossing] = q.entry;
    }
  }

  LinkDiagram d;
  d.crossings.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (under_entry[i] < 0) throw std::logic_error("crossing without under-strand");
    for (int s = 0; s < 4; ++s) {
      const ArcId a = ports[i][(s + under_entry[i]) % 4];
      if (a == 0) throw std::logic_error("crossing port left empty");
      d.crossings[i].slots[s] = a;
    }
  }

  for (const Path& p : e.paths) {
    Component c{p.id, p.arcs};
    // A two-arc component that only passes over is ambiguous in PD form; the
    // arc listed first must end at the crossing with the smaller slot-0 label.
    if (p.arcs.size() == 2 && !p.passages[0].is_under() && !p.passages[1].is_under() &&
        d.crossings[p.passages[0].crossing].slots[0] > d.crossings[p.passages[1].crossing].slots[0])
      std::swap(c.arcs[0], c.arcs[1]);
    d.components.push_back(std::move(c));
  }
  return canonical(std::move(d));
}

}  // namespace linkcc
