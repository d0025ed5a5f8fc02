#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "essentia/lp.hpp"

namespace essentia {

struct DetectionRequest {
  Instance instance;
  int k = 0;  ///< guess for the optimum, 0 <= k <= n
};

struct DetectionResult {
  VertexSet selected;               ///< {v : lp_values[v] > threshold_used}
  std::vector<Rational> lp_values;  ///< optimum of the LP pinned at v, per v
  Rational threshold_used;
};

struct DetectionOptions {
  int jobs = 1;
  LpOptions lp;
};

/// Detection factor c + 1 for which the selection is guaranteed to contain
/// every c-essential vertex when k = opt: 3 (VM), 5 (DVM), 7/2 (CD), 2 (VC, DFVS).
Rational detection_factor(Problem p);

/// Optimum of the v-avoiding LP for every vertex v; n independent solves.
std::vector<Rational> avoiding_lp_values(const Instance& inst, const DetectionOptions& options = {});

/// S = {v : value[v] > k}, compared exactly.
DetectionResult select_above(std::vector<Rational> lp_values, int k);

/// Selects every vertex whose v-avoiding LP optimum exceeds k. If opt <= k,
/// no solution of size <= k avoids a selected vertex, so some optimal
/// solution contains all of S. If opt = k and v is (c+1)-essential, an LP
/// value <= k would restrict to an instance where {v} is a solution, and the
/// integrality gap c there yields a v-free solution below (c+1) opt.
DetectionResult detect(const DetectionRequest& request, const DetectionOptions& options = {});

struct ExactOptions {
  int size_cap = 14;
  std::optional<std::uint64_t> node_cap;
};

/// {v : opt with v forbidden > c * opt}, with an unsolvable forbidden
/// instance counting as infinite. Throws ResourceExceeded above size_cap.
VertexSet essential_vertices_exact(const Instance& inst, const Rational& c,
                                   const ExactOptions& options = {});

}  // namespace essentia
