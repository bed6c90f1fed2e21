#include "linkcc/diagram.hpp"

#include <algorithm>
#include <optional>

#include "linkcc/embedding.hpp"

namespace linkcc {

bool LinkDiagram::has_component(ComponentId id) const {
  return std::any_of(components.begin(), components.end(), [&](const Component& c) { return c.id == id; });
}

const Component& LinkDiagram::component(ComponentId id) const {
  for (const auto& c : components)
    if (c.id == id) return c;
  throw std::out_of_range("no component " + std::to_string(id));
}

std::vector<ComponentId> LinkDiagram::component_ids() const {
  std::vector<ComponentId> ids;
  ids.reserve(components.size());
  for (const auto& c : components) ids.push_back(c.id);
  return ids;
}

ArcId LinkDiagram::max_arc_id() const {
  ArcId m = 0;
  for (const auto& c : components)
    for (ArcId a : c.arcs) m = std::max(m, a);
  for (const auto& x : crossings)
    for (ArcId a : x.slots) m = std::max(m, a);
  return m;
}

Weight WeightedLink::weight(ComponentId id) const {
  auto it = weights.find(id);
  return it == weights.end() ? 1 : it->second;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NonPositiveArc: return "non-positive-arc";
    case ViolationKind::DuplicateComponent: return "duplicate-component";
    case ViolationKind::DuplicateArc: return "duplicate-arc";
    case ViolationKind::UnknownArc: return "unknown-arc";
    case ViolationKind::ArcMultiplicity: return "arc-multiplicity";
    case ViolationKind::Traversal: return "traversal";
  }
  return "unknown";
}

std::vector<Violation> validate(const LinkDiagram& d) {
  std::vector<Violation> v;
  resolve_traversal(d, &v);
  return v;
}

void require_valid(const LinkDiagram& d) { resolve_traversal(d); }

LinkDiagram canonical(LinkDiagram d) {
  std::stable_sort(d.components.begin(), d.components.end(),
                   [](const Component& a, const Component& b) { return a.id < b.id; });
  std::stable_sort(d.crossings.begin(), d.crossings.end(),
                   [](const Crossing& a, const Crossing& b) { return a.slots[0] < b.slots[0]; });
  return d;
}

namespace {

int sign_from_entry(int over_entry) { return over_entry == 3 ? 1 : -1; }

}  // namespace

int crossing_sign(const LinkDiagram& d, std::size_t crossing_index) {
  if (crossing_index >= d.crossings.size()) throw std::out_of_range("crossing index out of range");
  const Traversal t = resolve_traversal(d);
  return sign_from_entry(t.over[crossing_index].entry);
}

std::size_t find_crossing(const LinkDiagram& d, const Crossing& c) {
  for (std::size_t i = 0; i < d.crossings.size(); ++i)
    if (d.crossings[i] == c) return i;
  throw std::out_of_range("crossing not in diagram");
}

int crossing_sign(const LinkDiagram& d, const Crossing& c) { return crossing_sign(d, find_crossing(d, c)); }

std::size_t crossing_count(const LinkDiagram& d) { return d.crossings.size(); }

std::vector<CrossingStrands> crossing_strands(const LinkDiagram& d) {
  const Traversal t = resolve_traversal(d);
  std::vector<CrossingStrands> out(d.crossings.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].under = d.components[t.under[i].component].id;
    out[i].over = d.components[t.over[i].component].id;
    out[i].sign = sign_from_entry(t.over[i].entry);
  }
  return out;
}

Count weighted_crossing_count(const WeightedLink& l) {
  for (const auto& [id, w] : l.weights) {
    if (!l.diagram.has_component(id)) throw std::invalid_argument("weight for unknown component " + std::to_string(id));
    if (w < 1) throw std::invalid_argument("weights must be positive");
  }
  Count total = 0;
  for (const auto& s : crossing_strands(l.diagram))
    total += static_cast<Count>(l.weight(s.under)) * static_cast<Count>(l.weight(s.over));
  return total;
}

std::int64_t linking_number(const LinkDiagram& d, ComponentId a, ComponentId b) {
  if (!d.has_component(a) || !d.has_component(b)) throw std::invalid_argument("unknown component");
  if (a == b) throw std::invalid_argument("linking number needs two distinct components");
  std::int64_t sum = 0;
  for (const auto& s : crossing_strands(d))
    if ((s.under == a && s.over == b) || (s.under == b && s.over == a)) sum += s.sign;
  if (sum % 2 != 0) throw InvalidDiagram("odd crossing sum between two components");
  return sum / 2;
}

LinkingMatrix<> linking_matrix(const LinkDiagram& d) {
  LinkingMatrix<> m;
  m.ids = d.component_ids();
  const auto n = static_cast<Eigen::Index>(m.ids.size());
  m.entries.setZero(n, n);
  std::map<ComponentId, Eigen::Index> index;
  for (Eigen::Index i = 0; i < n; ++i) index[m.ids[static_cast<std::size_t>(i)]] = i;
  for (const auto& s : crossing_strands(d)) {
    if (s.under == s.over) continue;
    const Eigen::Index i = index.at(s.under), j = index.at(s.over);
    m.entries(i, j) += s.sign;
    m.entries(j, i) += s.sign;
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (m.entries(i, j) % 2 != 0) throw InvalidDiagram("odd crossing sum between two components");
      m.entries(i, j) /= 2;
    }
  return m;
}

LinkDiagram reverse_orientation(const LinkDiagram& d, ComponentId k) {
  Embedding e = decompose(d);
  Path& p = e.path(k);
  const std::size_t m = p.arcs.size();
  if (m == 0) return canonical(d);
  std::vector<ArcId> arcs(m);
  std::vector<Passage> passages(m);
  for (std::size_t j = 0; j < m; ++j) {
    arcs[j] = p.arcs[(m - j) % m];
    Passage q = p.passages[(2 * m - j - 1) % m];
    q.entry = (q.entry + 2) % 4;
    passages[j] = q;
  }
  p.arcs = std::move(arcs);
  p.passages = std::move(passages);
  return assemble(e);
}

namespace {

struct Piece {
  ArcId arc;
  std::optional<Passage> after;  // empty where two arcs merge
};

}  // namespace

LinkDiagram smooth_self_crossing(const LinkDiagram& d, const Crossing& c) {
  const std::size_t x = find_crossing(d, c);
  Embedding e = decompose(d);
  Path* owner = nullptr;
  std::size_t under_pos = 0, over_pos = 0;
  int found = 0;
  for (Path& p : e.paths) {
    for (std::size_t k = 0; k < p.passages.size(); ++k) {
      if (p.passages[k].crossing != x) continue;
      if (owner != nullptr && owner != &p) throw std::invalid_argument("crossing joins two different components");
      owner = &p;
      (p.passages[k].is_under() ? under_pos : over_pos) = k;
      ++found;
    }
  }
  if (found != 2 || owner == nullptr) throw std::invalid_argument("crossing joins two different components");

  Path& p = *owner;
  const std::size_t m = p.arcs.size();
  // Rotate so the under passage is last; the over passage then sits at q.
  const std::size_t shift = (under_pos + 1) % m;
  std::rotate(p.arcs.begin(), p.arcs.begin() + static_cast<std::ptrdiff_t>(shift), p.arcs.end());
  std::rotate(p.passages.begin(), p.passages.begin() + static_cast<std::ptrdiff_t>(shift), p.passages.end());
  const std::size_t q = (over_pos + m - shift) % m;

  const ArcId lowest = *std::min_element(p.arcs.begin(), p.arcs.end());
  const bool keep_first = std::find(p.arcs.begin(), p.arcs.begin() + static_cast<std::ptrdiff_t>(q) + 1, lowest) !=
                          p.arcs.begin() + static_cast<std::ptrdiff_t>(q) + 1;

  auto flipped = [](Passage s) {
    s.entry = (s.entry + 2) % 4;
    return s;
  };
  std::vector<Piece> seq;
  if (keep_first) {
    for (std::size_t i = 0; i <= q; ++i) seq.push_back({p.arcs[i], i < q ? std::optional(p.passages[i]) : std::nullopt});
    for (std::size_t i = m - 1; i >= q + 1; --i)
      seq.push_back({p.arcs[i], i > q + 1 ? std::optional(flipped(p.passages[i - 1])) : std::nullopt});
  } else {
    for (std::size_t i = q + 1; i < m; ++i)
      seq.push_back({p.arcs[i], i < m - 1 ? std::optional(p.passages[i]) : std::nullopt});
    for (std::size_t i = q + 1; i-- > 0;)
      seq.push_back({p.arcs[i], i > 0 ? std::optional(flipped(p.passages[i - 1])) : std::nullopt});
  }

  Path result{p.id, {}, {}};
  const auto start = std::find_if(seq.begin(), seq.end(), [](const Piece& s) { return s.after.has_value(); });
  if (start != seq.end()) {
    const std::size_t len = seq.size();
    std::size_t i = static_cast<std::size_t>(start - seq.begin()) + 1;
    ArcId current = 0;
    for (std::size_t step = 0; step < len; ++step, ++i) {
      const Piece& s = seq[i % len];
      current = current == 0 ? s.arc : std::min(current, s.arc);
      if (s.after) {
        result.arcs.push_back(current);
        result.passages.push_back(*s.after);
        current = 0;
      }
    }
  }
  p = std::move(result);

  for (Path& other : e.paths)
    for (Passage& s : other.passages)
      if (s.crossing > x) --s.crossing;
  --e.crossing_count;
  return assemble(e);
}

}  // namespace linkcc
