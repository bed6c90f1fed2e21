#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "linkcc/diagram.hpp"

namespace linkcc {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

// Closed polygon traversed in vertex order; y points up.
struct Polygon {
  ComponentId id = 0;
  std::vector<Point> vertices;
};

Polygon rectangle(ComponentId id, std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1);

// Thin closed band of half-width `half_width` around a polyline whose
// successive points strictly decrease in y.
Polygon ribbon(ComponentId id, const std::vector<Point>& centerline, std::int64_t half_width);

class DegenerateGeometry : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Decides the over-strand at the k-th of `count` crossings between polygons
// a <= b, counted along a's traversal. Returns true when a passes over.
using OverRule = std::function<bool(std::size_t a, std::size_t b, std::size_t k, std::size_t count)>;

// Projection of the polygons as a PD code. Arcs are numbered from 1 in
// polygon order. Throws DegenerateGeometry on touching or collinear
// segments and on coincident crossing points.
LinkDiagram trace_polygons(const std::vector<Polygon>& polygons, const OverRule& over);

// Alternating rule: along a, the first crossing with b has a over, the next b, and so on.
bool alternate_over(std::size_t a, std::size_t b, std::size_t k, std::size_t count);

}  // namespace linkcc
