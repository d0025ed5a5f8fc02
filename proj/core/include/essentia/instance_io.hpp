#pragma once

#include <map>
#include <string>
#include <string_view>

#include "essentia/instance.hpp"

namespace essentia {

// {"problem": tag, "directed": bool, "n": int, "edges": [[u,v],...],
//  "terminals": [[s,t],...]} with optional "labels": {name: [vertices]}.
std::string instance_to_json(const Instance& inst,
                             const std::map<std::string, VertexSet>& labels = {});

// Errors name the offending field, e.g. "edges[3][1]: vertex 9 out of range".
Instance instance_from_json(std::string_view text);

// "p edge n m" header and 1-indexed "e u v" lines; "c" lines are comments.
// No terminals, so only vertex cover, cograph deletion and DFVS.
Instance instance_from_dimacs(std::string_view text, Problem problem);

}  // namespace essentia
