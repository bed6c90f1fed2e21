#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "linkcc/diagram.hpp"
#include "linkcc/embedding.hpp"

namespace linkcc {

// Faces of the diagram's 4-valent map. A face is walked by arriving at a
// crossing through some slot and leaving through the next slot
// counterclockwise; the face lies to the right of every arc walked this way.
struct FaceMap {
  std::vector<std::array<std::size_t, 4>> face_of_arrival;  // [crossing][slot]
  std::vector<std::vector<ArcEnd>> faces;                    // arrivals in walking order
  std::vector<std::size_t> piece_of_crossing;
  std::size_t piece_count = 0;
};

FaceMap trace_faces(const LinkDiagram& d);

// Sum over connected pieces of the genus of the closed surface that the
// slot rotation defines. Zero exactly for planar diagrams.
int genus(const LinkDiagram& d);

}  // namespace linkcc
