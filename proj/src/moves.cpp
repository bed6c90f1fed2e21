#include "linkcc/moves.hpp"

#include <algorithm>

#include "linkcc/embedding.hpp"
#include "linkcc/faces.hpp"

namespace linkcc {

namespace {

struct Located {
  Path* path = nullptr;
  std::size_t position = 0;  // index of the arc; unused for free loops
  bool free_loop = false;
};

Located locate(Embedding& e, const StrandRef& ref) {
  for (Path& p : e.paths) {
    if (ref.kind == StrandRef::Kind::FreeLoop) {
      if (p.id != ref.id) continue;
      if (!p.arcs.empty()) throw std::invalid_argument("component " + std::to_string(ref.id) + " is not a free loop");
      return {&p, 0, true};
    }
    auto it = std::find(p.arcs.begin(), p.arcs.end(), ref.id);
    if (it != p.arcs.end()) return {&p, static_cast<std::size_t>(it - p.arcs.begin()), false};
  }
  throw std::invalid_argument("strand not in diagram: " + std::to_string(ref.id));
}

// Splices two new arcs after the located strand, joined by the given passages.
void splice(const Located& at, ArcId n1, ArcId n2, Passage first, Passage second) {
  Path& p = *at.path;
  if (at.free_loop) {
    p.arcs = {n1, n2};
    p.passages = {first, second};
    return;
  }
  const auto pos = static_cast<std::ptrdiff_t>(at.position);
  p.arcs.insert(p.arcs.begin() + pos + 1, {n1, n2});
  p.passages.insert(p.passages.begin() + pos, {first, second});
}

int over_entry(int sign) { return sign > 0 ? 3 : 1; }

LinkDiagram insert_r1(const LinkDiagram& d, const StrandRef& strand, Handedness h) {
  Embedding e = decompose(d);
  const ArcId next = d.max_arc_id() + 1;
  const std::size_t x = e.crossing_count++;
  const Located at = locate(e, strand);
  const int sign = h == Handedness::Positive ? 1 : -1;
  splice(at, next, next + 1, {x, 0}, {x, over_entry(sign)});
  return assemble(e);
}

LinkDiagram insert_r2(const LinkDiagram& d, const StrandRef& over, const StrandRef& under) {
  if (over.kind == under.kind && over.id == under.id) throw std::invalid_argument("R2 needs two distinct strands");
  const Traversal t = resolve_traversal(d);
  const FaceMap fm = trace_faces(d);
  auto right_face = [&](ArcId a) {
    const ArcEnd h = t.head.at(a);
    return fm.face_of_arrival[h.crossing][h.slot];
  };
  auto left_face = [&](ArcId a) {
    const ArcEnd h = t.tail.at(a);
    return fm.face_of_arrival[h.crossing][h.slot];
  };
  for (const StrandRef* r : {&over, &under})
    if (r->kind == StrandRef::Kind::Arc && !t.head.contains(r->id))
      throw std::invalid_argument("strand not in diagram: " + std::to_string(r->id));

  bool over_right = false, under_right = false;
  const bool over_arc = over.kind == StrandRef::Kind::Arc;
  const bool under_arc = under.kind == StrandRef::Kind::Arc;
  if (over_arc && under_arc) {
    const std::size_t oa[2] = {right_face(over.id), left_face(over.id)};
    const std::size_t ub[2] = {right_face(under.id), left_face(under.id)};
    bool found = false;
    for (int i = 0; i < 2 && !found; ++i)
      for (int j = 0; j < 2 && !found; ++j)
        if (oa[i] == ub[j]) {
          over_right = i == 0;
          under_right = j == 0;
          found = true;
        }
    if (!found) throw std::invalid_argument("strands do not share a face");
  } else if (over_arc) {
    over_right = true;
  } else if (under_arc) {
    under_right = true;
  }

  Embedding e = decompose(d);
  const ArcId next = d.max_arc_id() + 1;
  const std::size_t x1 = e.crossing_count, x2 = e.crossing_count + 1;
  e.crossing_count += 2;
  const int sign1 = under_right ? -1 : 1;
  splice(locate(e, over), next, next + 1, {x1, over_entry(sign1)}, {x2, over_entry(-sign1)});
  const bool reversed = over_right == under_right;
  const std::size_t first = reversed ? x2 : x1, second = reversed ? x1 : x2;
  splice(locate(e, under), next + 2, next + 3, {first, 0}, {second, 0});
  return assemble(e);
}

}  // namespace

LinkDiagram insert_test_move(const LinkDiagram& d, const TestMove& move) {
  require_valid(d);
  if (move.kind == MoveKind::R1) return insert_r1(d, move.first, move.handedness);
  return insert_r2(d, move.first, move.second);
}

}  // namespace linkcc
