#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "linkcc/diagram.hpp"
#include "linkcc/gadgets.hpp"
#include "linkcc/instance.hpp"

namespace linkcc {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// {"n_u": int, "assignment": [int, ...], "budget": int}; throws ParseError or InvalidInstance.
BipartiteInstance parse_instance(std::string_view text);
std::string serialize_instance(const BipartiteInstance& inst);

struct LinkRecord {
  std::string name = "link";
  LinkDiagram diagram;
  std::map<ComponentId, Weight> weights;
  GadgetLabels labels;

  friend bool operator==(const LinkRecord&, const LinkRecord&) = default;
};

// Line format:
//   link <name>
//   component <id> [weight <w>] [role <role>] arcs <a1> ... <am>
//   crossing <s0> <s1> <s2> <s3>
// Components by id, then crossings by s0.
std::string serialize_link(const LinkRecord& record);
LinkRecord parse_link(std::string_view text);

}  // namespace linkcc
