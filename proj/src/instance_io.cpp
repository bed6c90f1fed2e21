#include <json.hpp>

#include "linkcc/io.hpp"

namespace linkcc {

BipartiteInstance parse_instance(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  for (const char* key : {"n_u", "assignment", "budget"})
    if (!j.contains(key)) throw ParseError(std::string("instance lacks \"") + key + "\"");
  if (!j["n_u"].is_number_integer() || !j["budget"].is_number_integer() || !j["assignment"].is_array())
    throw ParseError("instance fields have the wrong type");
  BipartiteInstance inst;
  inst.n_u = j["n_u"].get<int>();
  inst.budget = j["budget"].get<std::int64_t>();
  for (const auto& v : j["assignment"]) {
    if (!v.is_number_integer()) throw ParseError("assignment entries must be integers");
    inst.assignment.push_back(v.get<int>());
  }
  validate_instance(inst);
  return inst;
}

std::string serialize_instance(const BipartiteInstance& inst) {
  nlohmann::ordered_json j;
  j["n_u"] = inst.n_u;
  j["assignment"] = inst.assignment;
  j["budget"] = inst.budget;
  return j.dump() + "\n";
}

}  // namespace linkcc
