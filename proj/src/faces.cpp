#include "linkcc/faces.hpp"

#include <map>
#include <numeric>

namespace linkcc {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

FaceMap trace_faces(const LinkDiagram& d) {
  require_valid(d);
  const std::size_t n = d.crossings.size();
  std::map<ArcId, std::vector<ArcEnd>> ends;
  for (std::size_t i = 0; i < n; ++i)
    for (int s = 0; s < 4; ++s) ends[d.crossings[i].slots[s]].push_back({i, s});
  auto other_end = [&](std::size_t c, int s) {
    const auto& e = ends.at(d.crossings[c].slots[s]);
    return (e[0].crossing == c && e[0].slot == s) ? e[1] : e[0];
  };

  FaceMap fm;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  fm.face_of_arrival.assign(n, {kNone, kNone, kNone, kNone});
  for (std::size_t c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      if (fm.face_of_arrival[c][s] != kNone) continue;
      const std::size_t f = fm.faces.size();
      fm.faces.emplace_back();
      ArcEnd at{c, s};
      while (fm.face_of_arrival[at.crossing][at.slot] == kNone) {
        fm.face_of_arrival[at.crossing][at.slot] = f;
        fm.faces[f].push_back(at);
        at = other_end(at.crossing, (at.slot + 1) % 4);
      }
    }
  }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& [arc, e] : ends) {
    (void)arc;
    parent[find_root(parent, e[0].crossing)] = find_root(parent, e[1].crossing);
  }
  std::map<std::size_t, std::size_t> label;
  fm.piece_of_crossing.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    auto [it, inserted] = label.emplace(find_root(parent, c), label.size());
    (void)inserted;
    fm.piece_of_crossing[c] = it->second;
  }
  fm.piece_count = label.size();
  return fm;
}

int genus(const LinkDiagram& d) {
  const FaceMap fm = trace_faces(d);
  std::vector<long> vertices(fm.piece_count, 0), faces(fm.piece_count, 0);
  for (std::size_t c = 0; c < d.crossings.size(); ++c) ++vertices[fm.piece_of_crossing[c]];
  for (const auto& f : fm.faces) ++faces[fm.piece_of_crossing[f.front().crossing]];
  long total = 0;
  for (std::size_t p = 0; p < fm.piece_count; ++p) {
    // V - E + F with E = 2V.
    const long chi = faces[p] - vertices[p];
    total += (2 - chi) / 2;
  }
  return static_cast<int>(total);
}

}  // namespace linkcc
