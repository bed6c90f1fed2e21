#include "linkcc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include <Eigen/Sparse>

#include "linkcc/embedding.hpp"
#include "linkcc/faces.hpp"

namespace linkcc {

namespace {

const char* role_colour(const GadgetLabels* labels, ComponentId id) {
  if (labels == nullptr) return "#333333";
  auto it = labels->find(id);
  if (it == labels->end()) return "#333333";
  switch (it->second.kind) {
    case RoleKind::Ring: return "#1f77b4";
    case RoleKind::Hinge: return "#ff7f0e";
    case RoleKind::UGuard: return "#2ca02c";
    case RoleKind::VGuard: return "#9467bd";
    case RoleKind::EdgeLink: return "#d62728";
  }
  return "#333333";
}

struct Vec {
  double x = 0, y = 0;
};

// Nodes of the second barycentric subdivision of the flag triangulation
// (crossing, arc, face) of the diagram.
class Subdivision {
 public:
  Subdivision(const LinkDiagram& d, const FaceMap& fm) : d_(d), fm_(fm) {
    v_ = d.crossings.size();
    std::map<ArcId, std::vector<ArcEnd>> ends;
    for (std::size_t c = 0; c < v_; ++c)
      for (int s = 0; s < 4; ++s) ends[d.crossings[c].slots[s]].push_back({c, s});
    for (const auto& [arc, e] : ends) {
      arc_index_[arc] = arcs_.size();
      arcs_.push_back(arc);
      other_[{e[0].crossing, e[0].slot}] = e[1];
      other_[{e[1].crossing, e[1].slot}] = e[0];
    }
    n1_ = v_ + arcs_.size() + fm.faces.size();
    node_count_ = n1_ + 12 * v_ + 8 * v_;

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t c = 0; c < v_; ++c) {
      for (int s = 0; s < 4; ++s) {
        const std::size_t a = arc_node(d.crossings[c].slots[s]);
        const ArcEnd far = other_.at({c, s});
        const int prev = (s + 3) % 4;
        add_triangle(edges, triangle_node(c, s, 0), c, a, face_node(c, s), slot_node(c, s), side_node(c, s),
                     corner_node(c, s));
        add_triangle(edges, triangle_node(c, s, 1), c, a, face_node(c, prev), slot_node(c, s),
                     side_node(far.crossing, far.slot), corner_node(c, prev));
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    adjacency_.resize(node_count_);
    for (auto [x, y] : edges) {
      adjacency_[x].push_back(y);
      adjacency_[y].push_back(x);
    }
  }

  std::size_t node_count() const { return node_count_; }
  const std::vector<std::size_t>& neighbours(std::size_t n) const { return adjacency_[n]; }
  std::size_t crossing_node(std::size_t c) const { return c; }
  std::size_t arc_node(ArcId a) const { return v_ + arc_index_.at(a); }
  std::size_t face_node(std::size_t f) const { return v_ + arcs_.size() + f; }
  std::size_t slot_node(std::size_t c, int s) const { return n1_ + 4 * c + static_cast<std::size_t>(s); }
  ArcEnd other_end(std::size_t c, int s) const { return other_.at({c, s}); }

 private:
  std::size_t face_node(std::size_t c, int s) const { return face_node(fm_.face_of_arrival[c][s]); }
  std::size_t side_node(std::size_t c, int s) const { return n1_ + 4 * v_ + 4 * c + static_cast<std::size_t>(s); }
  std::size_t corner_node(std::size_t c, int s) const { return n1_ + 8 * v_ + 4 * c + static_cast<std::size_t>(s); }
  std::size_t triangle_node(std::size_t c, int s, int half) const {
    return n1_ + 12 * v_ + 8 * c + 2 * static_cast<std::size_t>(s) + static_cast<std::size_t>(half);
  }

  static void add_triangle(std::vector<std::pair<std::size_t, std::size_t>>& edges, std::size_t t, std::size_t c,
                           std::size_t a, std::size_t f, std::size_t ca, std::size_t af, std::size_t cf) {
    auto link = [&](std::size_t x, std::size_t y) { edges.emplace_back(std::min(x, y), std::max(x, y)); };
    for (std::size_t n : {c, a, f, ca, af, cf}) link(t, n);
    link(ca, c);
    link(ca, a);
    link(af, a);
    link(af, f);
    link(cf, c);
    link(cf, f);
  }

  const LinkDiagram& d_;
  const FaceMap& fm_;
  std::size_t v_ = 0, n1_ = 0, node_count_ = 0;
  std::vector<ArcId> arcs_;
  std::map<ArcId, std::size_t> arc_index_;
  std::map<std::pair<std::size_t, int>, ArcEnd> other_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

}  // namespace

std::string render_svg(const LinkDiagram& d, const GadgetLabels* labels) {
  require_valid(d);
  if (genus(d) != 0) throw InvalidDiagram("cannot draw a diagram of positive genus");
  const FaceMap fm = trace_faces(d);
  const Subdivision sub(d, fm);
  const std::size_t n = sub.node_count();
  constexpr double radius = 400.0, spacing = 900.0;

  // Per piece: drop the node of the largest face and pin its link to a circle.
  std::vector<std::size_t> outer(fm.piece_count, 0);
  std::vector<std::size_t> best(fm.piece_count, 0);
  for (std::size_t f = 0; f < fm.faces.size(); ++f) {
    const std::size_t p = fm.piece_of_crossing[fm.faces[f].front().crossing];
    if (fm.faces[f].size() > best[p]) {
      best[p] = fm.faces[f].size();
      outer[p] = f;
    }
  }
  std::vector<int> state(n, 0);  // 0 interior, 1 pinned, 2 removed
  std::vector<Vec> pos(n);
  for (std::size_t p = 0; p < fm.piece_count; ++p) {
    const std::size_t hub = sub.face_node(outer[p]);
    state[hub] = 2;
    std::set<std::size_t> ring(sub.neighbours(hub).begin(), sub.neighbours(hub).end());
    std::vector<std::size_t> cycle{*ring.begin()};
    std::set<std::size_t> visited{cycle.front()};
    while (cycle.size() < ring.size()) {
      std::size_t next = n;
      for (std::size_t y : sub.neighbours(cycle.back()))
        if (ring.contains(y) && !visited.contains(y)) {
          next = y;
          break;
        }
      if (next == n) throw std::logic_error("outer face boundary is not a cycle");
      cycle.push_back(next);
      visited.insert(next);
    }
    const double cx = static_cast<double>(p) * spacing;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(cycle.size());
      pos[cycle[i]] = {cx + radius * std::cos(angle), radius * std::sin(angle)};
      state[cycle[i]] = 1;
    }
  }

  std::vector<std::size_t> interior, index(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (state[i] == 0) {
      index[i] = interior.size();
      interior.push_back(i);
    }
  if (!interior.empty()) {
    const auto m = static_cast<Eigen::Index>(interior.size());
    std::vector<Eigen::Triplet<double>> entries;
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(m, 2);
    for (std::size_t r = 0; r < interior.size(); ++r) {
      const std::size_t node = interior[r];
      double degree = 0;
      for (std::size_t y : sub.neighbours(node)) {
        if (state[y] == 2) continue;
        degree += 1;
        if (state[y] == 1) {
          rhs(static_cast<Eigen::Index>(r), 0) += pos[y].x;
          rhs(static_cast<Eigen::Index>(r), 1) += pos[y].y;
        } else {
          entries.emplace_back(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(index[y]), -1.0);
        }
      }
      entries.emplace_back(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r), degree);
    }
    Eigen::SparseMatrix<double> lap(m, m);
    lap.setFromTriplets(entries.begin(), entries.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(lap);
    if (solver.info() != Eigen::Success) throw std::runtime_error("layout system is singular");
    const Eigen::MatrixXd xy = solver.solve(rhs);
    for (std::size_t r = 0; r < interior.size(); ++r)
      pos[interior[r]] = {xy(static_cast<Eigen::Index>(r), 0), xy(static_cast<Eigen::Index>(r), 1)};
  }

  // Mirror pieces whose slots came out clockwise; SVG's y axis points down, so flip y once more.
  for (std::size_t p = 0; p < fm.piece_count; ++p) {
    std::size_t c = 0;
    while (fm.piece_of_crossing[c] != p) ++c;
    const Vec o = pos[sub.crossing_node(c)], a = pos[sub.slot_node(c, 0)], b = pos[sub.slot_node(c, 1)];
    const bool ccw = (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x) > 0;
    const double cx = static_cast<double>(p) * spacing;
    if (!ccw) {
      for (std::size_t i = 0; i < n; ++i)
        if (std::abs(pos[i].x - cx) <= radius + 1e-6 && state[i] != 2) pos[i].x = 2 * cx - pos[i].x;
    }
  }
  for (auto& q : pos) q.y = -q.y;

  std::map<ArcId, ComponentId> owner;
  for (const auto& comp : d.components)
    for (ArcId a : comp.arcs) owner[a] = comp.id;

  std::ostringstream body;
  body << std::fixed << std::setprecision(2);
  auto point = [&](const Vec& v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << v.x << ',' << v.y;
    return s.str();
  };
  const Traversal t = resolve_traversal(d);
  for (const auto& comp : d.components) {
    for (ArcId a : comp.arcs) {
      const ArcEnd tail = t.tail.at(a), head = t.head.at(a);
      body << "<polyline class=\"arc\" data-arc=\"" << a << "\" stroke=\"" << role_colour(labels, comp.id)
           << "\" points=\"" << point(pos[sub.crossing_node(tail.crossing)]) << ' '
           << point(pos[sub.slot_node(tail.crossing, tail.slot)]) << ' ' << point(pos[sub.arc_node(a)]) << ' '
           << point(pos[sub.slot_node(head.crossing, head.slot)]) << ' '
           << point(pos[sub.crossing_node(head.crossing)]) << "\"/>\n";
    }
  }
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const Vec o = pos[sub.crossing_node(c)];
    auto toward = [&](int s) {
      const Vec q = pos[sub.slot_node(c, s)];
      return Vec{o.x + 0.6 * (q.x - o.x), o.y + 0.6 * (q.y - o.y)};
    };
    auto reach = [&](int s) { return std::hypot(pos[sub.slot_node(c, s)].x - o.x, pos[sub.slot_node(c, s)].y - o.y); };
    const double halo = std::clamp(0.5 * std::min(reach(0), reach(2)), 3.0, 12.0);
    const std::string over = point(toward(1)) + ' ' + point(o) + ' ' + point(toward(3));
    const ComponentId oc = owner.at(d.crossings[c].slots[1]);
    body << "<polyline class=\"gap\" stroke=\"#ffffff\" stroke-width=\"" << halo << "\" points=\"" << over << "\"/>\n";
    body << "<polyline class=\"over\" stroke=\"" << role_colour(labels, oc) << "\" points=\"" << over << "\"/>\n";
  }

  double x0 = -radius, x1 = radius, y0 = -radius, y1 = radius;
  for (std::size_t i = 0; i < n; ++i) {
    if (state[i] == 2) continue;
    x0 = std::min(x0, pos[i].x);
    x1 = std::max(x1, pos[i].x);
    y0 = std::min(y0, pos[i].y);
    y1 = std::max(y1, pos[i].y);
  }
  if (fm.piece_count == 0) x1 = x0 - 50;
  std::size_t loops = 0;
  for (const auto& comp : d.components) {
    if (!comp.is_free_loop()) continue;
    const double cx = x1 + 150.0 + static_cast<double>(loops++) * 300.0;
    body << "<circle class=\"loop\" data-component=\"" << comp.id << "\" cx=\"" << cx << "\" cy=\"0\" r=\"100\" stroke=\""
         << role_colour(labels, comp.id) << "\"/>\n";
  }
  if (loops > 0) x1 += 300.0 * static_cast<double>(loops);

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 - 50 << ' ' << y0 - 50 << ' ' << x1 - x0 + 100
      << ' ' << y1 - y0 + 100 << "\">\n";
  out << "<g fill=\"none\" stroke-width=\"2\" stroke-linejoin=\"round\">\n";
  out << body.str();
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace linkcc
