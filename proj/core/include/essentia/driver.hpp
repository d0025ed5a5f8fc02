#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "essentia/detection.hpp"

namespace essentia {

struct DriverIteration {
  int budget;        ///< residual budget b of the stage
  int k;             ///< guessed optimum
  int detected;      ///< |S| at this k
  bool solved;
};

struct DriverReport {
  VertexSet solution;
  int opt = 0;
  VertexSet detected;      ///< S at the successful k
  int residual_budget = 0; ///< k - |S| at the successful k
  std::vector<DriverIteration> iterations;
};

struct DriverOptions {
  DetectionOptions detection;
  std::optional<std::uint64_t> node_cap;
};

/// Forces `selected` into the solution: solves G - selected exactly with at
/// most `residual_budget` further vertices and returns selected plus the
/// residual solution (original ids), or nothing if the budget is too small.
std::optional<VertexSet> solve_with_selection(const Instance& inst, const VertexSet& selected,
                                              int residual_budget,
                                              std::optional<std::uint64_t> node_cap = std::nullopt);

/// Search-space reduction: for b = 0, 1, ... and k = b, ..., n, take
/// S = detect(k) and, when k - |S| = b, solve G - S exactly within budget b.
/// The first success is optimal: below opt no residual solution fits, and
/// from opt on some optimal solution contains S. Exponential work is
/// governed by the final b, which is at most opt minus the number of
/// detectable essential vertices. The per-vertex LP values do not depend on
/// k and are computed once.
DriverReport solve_with_detection(const Instance& inst, const DriverOptions& options = {});

}  // namespace essentia
