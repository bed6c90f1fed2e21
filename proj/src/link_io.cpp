#include <charconv>
#include <sstream>
#include <vector>

#include "linkcc/io.hpp"

namespace linkcc {

std::string serialize_link(const LinkRecord& record) {
  require_valid(record.diagram);
  if (record.name.empty() || record.name.find_first_of(" \t\n") != std::string::npos)
    throw std::invalid_argument("link name must be a single token");
  const LinkDiagram d = canonical(record.diagram);
  std::ostringstream out;
  out << "link " << record.name << '\n';
  for (const Component& c : d.components) {
    out << "component " << c.id;
    if (auto w = record.weights.find(c.id); w != record.weights.end()) out << " weight " << w->second;
    if (auto r = record.labels.find(c.id); r != record.labels.end()) out << " role " << to_string(r->second);
    out << " arcs";
    for (ArcId a : c.arcs) out << ' ' << a;
    out << '\n';
  }
  for (const Crossing& x : d.crossings)
    out << "crossing " << x.slots[0] << ' ' << x.slots[1] << ' ' << x.slots[2] << ' ' << x.slots[3] << '\n';
  return out.str();
}

namespace {

std::int64_t to_int(const std::string& token, std::size_t line) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got \"" + token + "\"");
  return v;
}

}  // namespace

LinkRecord parse_link(std::string_view text) {
  LinkRecord rec;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(line) + ": ";
    if (!header) {
      if (tok[0] != "link" || tok.size() != 2) throw ParseError(where + "expected \"link <name>\"");
      rec.name = tok[1];
      header = true;
      continue;
    }
    if (tok[0] == "component") {
      if (tok.size() < 3) throw ParseError(where + "incomplete component line");
      Component c;
      c.id = to_int(tok[1], line);
      if (rec.diagram.has_component(c.id)) throw ParseError(where + "duplicate component id " + tok[1]);
      std::size_t i = 2;
      if (i + 1 < tok.size() && tok[i] == "weight") {
        const std::int64_t w = to_int(tok[i + 1], line);
        if (w < 1) throw ParseError(where + "weights must be positive");
        rec.weights[c.id] = w;
        i += 2;
      }
      if (i + 1 < tok.size() && tok[i] == "role") {
        try {
          rec.labels[c.id] = parse_role(tok[i + 1]);
        } catch (const std::invalid_argument& e) {
          throw ParseError(where + e.what());
        }
        i += 2;
      }
      if (i >= tok.size() || tok[i] != "arcs") throw ParseError(where + "expected \"arcs\"");
      for (++i; i < tok.size(); ++i) c.arcs.push_back(to_int(tok[i], line));
      rec.diagram.components.push_back(std::move(c));
    } else if (tok[0] == "crossing") {
      if (tok.size() != 5) throw ParseError(where + "a crossing needs exactly 4 slots");
      Crossing x;
      for (int s = 0; s < 4; ++s) x.slots[static_cast<std::size_t>(s)] = to_int(tok[static_cast<std::size_t>(s) + 1], line);
      rec.diagram.crossings.push_back(x);
    } else {
      throw ParseError(where + "unknown record \"" + tok[0] + "\"");
    }
  }
  if (!header) throw ParseError("missing \"link\" header");
  const auto problems = validate(rec.diagram);
  if (!problems.empty()) throw ParseError("invalid diagram: " + problems.front().detail);
  rec.diagram = canonical(std::move(rec.diagram));
  return rec;
}

}  // namespace linkcc
