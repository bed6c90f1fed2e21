#include "linkcc/polygon_trace.hpp"

#include <algorithm>
#include <map>

#include "linkcc/embedding.hpp"

namespace linkcc {

namespace {

__extension__ typedef __int128 Wide;

struct Segment {
  std::size_t polygon;
  std::size_t index;
  Point a, b;
};

Wide cross(Point o, Point p, Point q) {
  return static_cast<Wide>(p.x - o.x) * (q.y - o.y) - static_cast<Wide>(p.y - o.y) * (q.x - o.x);
}

Wide cross_dir(Point d, Point e) { return static_cast<Wide>(d.x) * e.y - static_cast<Wide>(d.y) * e.x; }

int signum(Wide v) { return (v > 0) - (v < 0); }

bool within_box(Point p, const Segment& s) {
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) && std::min(s.a.y, s.b.y) <= p.y &&
         p.y <= std::max(s.a.y, s.b.y);
}

// Position of a crossing on a segment as num / den with den > 0.
struct Param {
  Wide num, den;
};

bool less(const Param& p, const Param& q) { return p.num * q.den < q.num * p.den; }
bool equal(const Param& p, const Param& q) { return p.num * q.den == q.num * p.den; }

struct Hit {
  std::size_t seg_p, seg_q;
  Param tp, tq;
};

struct Event {
  std::size_t crossing;
  Param t;
  bool first;  // true when this polygon is the first strand of the hit
};

}  // namespace

Polygon rectangle(ComponentId id, std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1) {
  if (x0 >= x1 || y0 >= y1) throw std::invalid_argument("empty rectangle");
  return {id, {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

Polygon ribbon(ComponentId id, const std::vector<Point>& centerline, std::int64_t half_width) {
  if (centerline.size() < 2) throw std::invalid_argument("ribbon needs two points");
  for (std::size_t i = 1; i < centerline.size(); ++i)
    if (centerline[i].y >= centerline[i - 1].y) throw std::invalid_argument("ribbon must descend");
  Polygon p{id, {}};
  for (const Point& c : centerline) p.vertices.push_back({c.x - half_width, c.y});
  for (auto it = centerline.rbegin(); it != centerline.rend(); ++it) p.vertices.push_back({it->x + half_width, it->y});
  return p;
}

bool alternate_over(std::size_t, std::size_t, std::size_t k, std::size_t) { return k % 2 == 0; }

LinkDiagram trace_polygons(const std::vector<Polygon>& polygons, const OverRule& over) {
  std::vector<Segment> segs;
  std::vector<std::size_t> first_seg(polygons.size() + 1, 0);
  for (std::size_t p = 0; p < polygons.size(); ++p) {
    const auto& v = polygons[p].vertices;
    if (v.size() < 3) throw std::invalid_argument("polygon needs three vertices");
    first_seg[p] = segs.size();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point a = v[i], b = v[(i + 1) % v.size()];
      if (a.x == b.x && a.y == b.y) throw DegenerateGeometry("repeated polygon vertex");
      segs.push_back({p, i, a, b});
    }
  }
  first_seg[polygons.size()] = segs.size();

  std::vector<Hit> hits;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Segment& s = segs[i];
    const std::int64_t sx0 = std::min(s.a.x, s.b.x), sx1 = std::max(s.a.x, s.b.x);
    const std::int64_t sy0 = std::min(s.a.y, s.b.y), sy1 = std::max(s.a.y, s.b.y);
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Segment& r = segs[j];
      if (std::max(r.a.x, r.b.x) < sx0 || std::min(r.a.x, r.b.x) > sx1 || std::max(r.a.y, r.b.y) < sy0 ||
          std::min(r.a.y, r.b.y) > sy1)
        continue;
      const std::size_t n = polygons[s.polygon].vertices.size();
      const bool adjacent =
          s.polygon == r.polygon && ((s.index + 1) % n == r.index || (r.index + 1) % n == s.index);
      const int o1 = signum(cross(s.a, s.b, r.a)), o2 = signum(cross(s.a, s.b, r.b));
      const int o3 = signum(cross(r.a, r.b, s.a)), o4 = signum(cross(r.a, r.b, s.b));
      if (adjacent) {
        if (o1 == 0 && o2 == 0) throw DegenerateGeometry("polygon folds back on itself");
        continue;
      }
      if (o1 * o2 < 0 && o3 * o4 < 0) {
        const Point d{s.b.x - s.a.x, s.b.y - s.a.y}, e{r.b.x - r.a.x, r.b.y - r.a.y};
        const Point w{r.a.x - s.a.x, r.a.y - s.a.y};
        Wide den = cross_dir(d, e);
        Wide tn = cross_dir(w, e), un = cross_dir(w, d);
        if (den < 0) {
          den = -den;
          tn = -tn;
          un = -un;
        }
        hits.push_back({i, j, {tn, den}, {un, den}});
        continue;
      }
      if ((o1 == 0 && within_box(r.a, s)) || (o2 == 0 && within_box(r.b, s)) || (o3 == 0 && within_box(s.a, r)) ||
          (o4 == 0 && within_box(s.b, r)))
        throw DegenerateGeometry("segments touch without crossing");
    }
  }

  // Passages along each polygon in traversal order.
  std::vector<std::vector<Event>> along(segs.size());
  for (std::size_t h = 0; h < hits.size(); ++h) {
    along[hits[h].seg_p].push_back({h, hits[h].tp, true});
    along[hits[h].seg_q].push_back({h, hits[h].tq, false});
  }
  for (auto& list : along) {
    std::sort(list.begin(), list.end(), [](const Event& x, const Event& y) { return less(x.t, y.t); });
    for (std::size_t k = 1; k < list.size(); ++k)
      if (equal(list[k - 1].t, list[k].t)) throw DegenerateGeometry("three strands meet at one point");
  }

  // Rank of each hit along the lower-indexed polygon decides the over-strand.
  std::vector<bool> first_over(hits.size(), false);
  {
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_pair;
    std::vector<bool> seen(hits.size(), false);
    for (std::size_t s = 0; s < segs.size(); ++s) {
      for (const Event& ev : along[s]) {
        if (seen[ev.crossing]) continue;
        seen[ev.crossing] = true;
        const Hit& h = hits[ev.crossing];
        by_pair[{segs[h.seg_p].polygon, segs[h.seg_q].polygon}].push_back(ev.crossing);
      }
    }
    for (const auto& [pair, list] : by_pair) {
      for (std::size_t k = 0; k < list.size(); ++k) {
        // Hits are discovered along a, whose segments precede b's, so a is always seg_p.
        first_over[list[k]] = over(pair.first, pair.second, k, list.size());
      }
    }
  }

  // Frame each crossing: under-strand enters at port 0, over enters at 3 when positive.
  std::vector<int> over_entry(hits.size());
  for (std::size_t h = 0; h < hits.size(); ++h) {
    const Segment& p = segs[hits[h].seg_p];
    const Segment& q = segs[hits[h].seg_q];
    const Point dp{p.b.x - p.a.x, p.b.y - p.a.y}, dq{q.b.x - q.a.x, q.b.y - q.a.y};
    const Wide c = first_over[h] ? cross_dir(dp, dq) : cross_dir(dq, dp);
    over_entry[h] = c > 0 ? 3 : 1;
  }

  Embedding e;
  e.crossing_count = hits.size();
  ArcId next_arc = 1;
  for (std::size_t p = 0; p < polygons.size(); ++p) {
    Path path;
    path.id = polygons[p].id;
    for (std::size_t s = first_seg[p]; s < first_seg[p + 1]; ++s) {
      for (const Event& ev : along[s]) {
        const bool is_over = ev.first == first_over[ev.crossing];
        path.passages.push_back({ev.crossing, is_over ? over_entry[ev.crossing] : 0});
        path.arcs.push_back(next_arc++);
      }
    }
    e.paths.push_back(std::move(path));
  }
  return assemble(e);
}

}  // namespace linkcc
