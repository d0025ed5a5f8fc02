#include "essentia/instance_io.hpp"

#include "json.hpp"
#include <sstream>

#include "essentia/errors.hpp"

namespace essentia {

using nlohmann::json;

namespace {

std::string where(const std::string& field, std::size_t i) {
  return field + "[" + std::to_string(i) + "]";
}

std::vector<Arc> read_pairs(const json& doc, const std::string& field, int n) {
  std::vector<Arc> pairs;
  if (!doc.contains(field)) return pairs;
  const json& list = doc.at(field);
  if (!list.is_array()) throw InvalidInput(field + ": expected an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& item = list[i];
    if (!item.is_array() || item.size() != 2)
      throw InvalidInput(where(field, i) + ": expected a pair [u, v]");
    int ends[2];
    for (std::size_t j = 0; j < 2; ++j) {
      const json& e = item[j];
      const std::string at = where(field, i) + "[" + std::to_string(j) + "]";
      if (!e.is_number_integer()) throw InvalidInput(at + ": expected an integer vertex");
      const auto value = e.get<long long>();
      if (value < 0 || value >= n)
        throw InvalidInput(at + ": vertex " + std::to_string(value) + " out of range [0, " +
                           std::to_string(n) + ")");
      ends[j] = static_cast<int>(value);
    }
    pairs.emplace_back(ends[0], ends[1]);
  }
  return pairs;
}

}  // namespace

std::string instance_to_json(const Instance& inst, const std::map<std::string, VertexSet>& labels) {
  json doc;
  doc["problem"] = std::string(problem_tag(inst.problem()));
  doc["directed"] = inst.graph().directed();
  doc["n"] = inst.num_vertices();
  json edges = json::array();
  for (auto [u, v] : inst.graph().arcs()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  json terminals = json::array();
  for (auto [s, t] : inst.terminals()) terminals.push_back({s, t});
  doc["terminals"] = std::move(terminals);
  if (!labels.empty()) doc["labels"] = labels;
  return doc.dump();
}

Instance instance_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("instance: expected a JSON object");
  for (const char* key : {"problem", "n", "edges"})
    if (!doc.contains(key)) throw InvalidInput(std::string("instance: missing field \"") + key + "\"");
  if (!doc["problem"].is_string()) throw InvalidInput("problem: expected a string");
  const Problem problem = parse_problem(doc["problem"].get<std::string>());
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 0)
    throw InvalidInput("n: expected a nonnegative integer");
  if (doc["n"].get<long long>() > 100000) throw InvalidInput("n: too large");
  const int n = doc["n"].get<int>();
  bool directed = needs_directed(problem);
  if (doc.contains("directed")) {
    if (!doc["directed"].is_boolean()) throw InvalidInput("directed: expected a boolean");
    directed = doc["directed"].get<bool>();
  }
  auto edges = read_pairs(doc, "edges", n);
  auto terminals = read_pairs(doc, "terminals", n);
  return Instance(problem, Graph(n, directed, edges), std::move(terminals));
}

Instance instance_from_dimacs(std::string_view text, Problem problem) {
  if (is_multicut(problem))
    throw InvalidInput("dimacs-edges carries no terminals; use JSON for multicut problems");
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<Arc> arcs;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    std::istringstream row(line);
    std::string tag;
    if (!(row >> tag) || tag == "c") continue;
    const std::string at = "line " + std::to_string(lineno);
    if (tag == "p") {
      std::string kind;
      long long m = 0;
      long long count = 0;
      if (!(row >> kind >> count >> m) || count < 0)
        throw InvalidInput(at + ": expected \"p edge <n> <m>\"");
      n = static_cast<int>(count);
    } else if (tag == "e" || tag == "a") {
      if (n < 0) throw InvalidInput(at + ": edge before the \"p\" line");
      long long u = 0;
      long long v = 0;
      if (!(row >> u >> v)) throw InvalidInput(at + ": expected \"e <u> <v>\"");
      for (long long x : {u, v})
        if (x < 1 || x > n)
          throw InvalidInput(at + ": vertex " + std::to_string(x) + " out of range [1, " +
                             std::to_string(n) + "]");
      arcs.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      throw InvalidInput(at + ": unknown line type \"" + tag + "\"");
    }
  }
  if (n < 0) throw InvalidInput("dimacs: missing \"p\" line");
  return Instance(problem, Graph(n, needs_directed(problem), arcs));
}

}  // namespace essentia
