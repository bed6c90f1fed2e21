#pragma once

#include "linkcc/diagram.hpp"

namespace linkcc {

// An arc, or a crossingless component addressed by its id.
struct StrandRef {
  enum class Kind { Arc, FreeLoop };
  Kind kind = Kind::Arc;
  std::int64_t id = 0;

  static StrandRef arc(ArcId a) { return {Kind::Arc, a}; }
  static StrandRef free_loop(ComponentId k) { return {Kind::FreeLoop, k}; }
};

enum class MoveKind { R1, R2 };
enum class Handedness { Positive, Negative };

// R1 adds a kink on `first`. R2 pushes `first` over `second` across a face
// they share, adding two crossings of opposite sign.
struct TestMove {
  MoveKind kind = MoveKind::R1;
  StrandRef first;
  StrandRef second;
  Handedness handedness = Handedness::Positive;
};

LinkDiagram insert_test_move(const LinkDiagram& d, const TestMove& move);

}  // namespace linkcc
