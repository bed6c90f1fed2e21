#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "linkcc/diagram.hpp"

namespace linkcc {

// A component passes a crossing by entering at port `entry` and leaving at the
// opposite port. Ports use the crossing's own counterclockwise frame in which
// the under-strand occupies ports 0 and 2.
struct Passage {
  std::size_t crossing = 0;
  int entry = 0;

  bool is_under() const { return entry % 2 == 0; }
  friend bool operator==(const Passage&, const Passage&) = default;
};

// passages[k] joins arcs[k] to arcs[k + 1] (cyclically).
struct Path {
  ComponentId id = 0;
  std::vector<ArcId> arcs;
  std::vector<Passage> passages;
};

struct Embedding {
  std::size_t crossing_count = 0;
  std::vector<Path> paths;

  Path& path(ComponentId id);
};

struct ArcEnd {
  std::size_t crossing = 0;
  int slot = 0;
};

// Resolved traversal of a PD code.
struct Traversal {
  struct Strand {
    std::size_t component = 0;  // index into LinkDiagram::components
    std::size_t position = 0;   // passage index along the component
    int entry = 0;              // slot the strand enters through
  };
  std::vector<Strand> under;
  std::vector<Strand> over;
  std::unordered_map<ArcId, ArcEnd> head;
  std::unordered_map<ArcId, ArcEnd> tail;
  std::vector<std::vector<std::size_t>> passage_crossings;  // per component
};

// Appends problems to `violations` when given; otherwise throws InvalidDiagram.
Traversal resolve_traversal(const LinkDiagram& d, std::vector<Violation>* violations = nullptr);

Embedding decompose(const LinkDiagram& d);
LinkDiagram assemble(const Embedding& e);

}  // namespace linkcc
