#include "essentia/rounding.hpp"

#include <algorithm>

#include "essentia/errors.hpp"
#include "essentia/paths.hpp"
#include "essentia/separator.hpp"

namespace essentia {

namespace {

const Rational kHalf(1, 2);
const Rational kTwoFifths(2, 5);
const Rational kFifth(1, 5);

void require_singleton_solution(const Instance& inst, int v, const FractionalSolution& x) {
  if (v < 0 || v >= inst.num_vertices())
    throw InvalidInput("vertex " + std::to_string(v) + " out of range");
  const int single[] = {v};
  if (!is_solution(inst, single))
    throw PreconditionViolated("{" + std::to_string(v) + "} is not a solution");
  LpProblem lp{inst, v, {}};
  if (!verify_feasible(lp, x))
    throw PreconditionViolated("fractional solution is not feasible for the pinned LP");
}

// Vertices u for which every path between u and v weighs at least 1/2
// (vacuously true when none exists).
VertexSet far_side(const std::vector<std::optional<Rational>>& dist) {
  VertexSet result;
  for (int u = 0; u < static_cast<int>(dist.size()); ++u)
    if (!dist[u] || *dist[u] >= kHalf) result.push_back(u);
  return result;
}

Graph with_extra_vertex(const Graph& g, const VertexSet& linked, bool into_extra) {
  const int extra = g.num_vertices();
  std::vector<Arc> arcs;
  for (int u = 0; u < g.num_vertices(); ++u)
    for (int y : g.out_neighbors(u)) arcs.emplace_back(u, y);
  for (int u : linked) arcs.push_back(into_extra ? Arc{u, extra} : Arc{extra, u});
  return Graph(extra + 1, true, arcs);
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

const VertexSet* RoundingCertificate::witness(const std::string& name) const {
  for (const auto& [key, set] : witness_sets)
    if (key == name) return &set;
  return nullptr;
}

RoundingCertificate round_multicut(const Instance& inst, int v, const FractionalSolution& x) {
  if (inst.problem() != Problem::VertexMulticut)
    throw PreconditionViolated("round_multicut needs a vertex-multicut instance");
  require_singleton_solution(inst, v, x);
  const Graph& g = inst.graph();
  const int source[] = {v};
  VertexSet far = far_side(path_weights_from(g, x.weights, source));

  const Graph aux = with_extra_vertex(g.bidirected(), far, /*into_extra=*/true);
  const int sink[] = {g.num_vertices()};
  const int forbidden[] = {v, g.num_vertices()};
  RoundingCertificate cert;
  cert.problem = inst.problem();
  cert.pinned = v;
  cert.factor_bound = 2;
  cert.fractional_value = x.value;
  cert.integral_set = min_vertex_separator(aux, source, sink, forbidden);
  cert.witness_sets.emplace_back("D", std::move(far));
  return cert;
}

RoundingCertificate round_directed_multicut(const Instance& inst, int v,
                                            const FractionalSolution& x) {
  if (inst.problem() != Problem::DirectedVertexMulticut)
    throw PreconditionViolated("round_directed_multicut needs a directed-vertex-multicut instance");
  require_singleton_solution(inst, v, x);
  const Graph& g = inst.graph();
  const int n = g.num_vertices();
  const int pinned[] = {v};
  VertexSet into_v = far_side(path_weights_from(g, x.weights, pinned, /*reverse=*/true));
  VertexSet out_of_v = far_side(path_weights_from(g, x.weights, pinned));

  const int extra[] = {n};
  const int forbidden[] = {v, n};
  const Graph with_source = with_extra_vertex(g, into_v, /*into_extra=*/false);
  VertexSet cut_in = min_vertex_separator(with_source, extra, pinned, forbidden);
  const Graph with_sink = with_extra_vertex(g, out_of_v, /*into_extra=*/true);
  VertexSet cut_out = min_vertex_separator(with_sink, pinned, extra, forbidden);

  RoundingCertificate cert;
  cert.problem = inst.problem();
  cert.pinned = v;
  cert.factor_bound = 4;
  cert.fractional_value = x.value;
  cert.integral_set = unite(cut_in, cut_out);
  cert.witness_sets.emplace_back("S", std::move(into_v));
  cert.witness_sets.emplace_back("T", std::move(out_of_v));
  cert.witness_sets.emplace_back("X_S", std::move(cut_in));
  cert.witness_sets.emplace_back("X_T", std::move(cut_out));
  return cert;
}

RoundingCertificate round_cograph(const Graph& g, int v, const FractionalSolution& x) {
  const int n = g.num_vertices();
  if (v < 0 || v >= n) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  removed[v] = 1;
  if (!induced_p4s(g, removed).empty())
    throw PreconditionViolated("g - v still contains an induced P4");
  const Instance inst(Problem::CographDeletion, g);
  LpProblem lp{inst, v, {}};
  if (!verify_feasible(lp, x))
    throw PreconditionViolated("fractional solution is not feasible for the pinned LP");

  RoundingCertificate cert;
  cert.problem = Problem::CographDeletion;
  cert.pinned = v;
  cert.factor_bound = Rational(5, 2);
  cert.fractional_value = x.value;

  std::fill(removed.begin(), removed.end(), 0);
  for (int round = 1;; ++round) {
    std::vector<int> on_p4;
    for (const auto& p4 : induced_p4s(g, removed))
      for (int u : p4.vertices)
        if (u != v) on_p4.push_back(u);
    const VertexSet core = make_vertex_set(std::move(on_p4));
    if (core.empty()) break;

    VertexSet large;
    for (int u : core)
      if (x.weights[u] >= kTwoFifths) large.push_back(u);
    if (!large.empty()) {
      for (int u : large) removed[u] = 1;
      cert.integral_set = unite(cert.integral_set, large);
      cert.witness_sets.emplace_back("large_" + std::to_string(round), std::move(large));
      continue;
    }

    cert.core_weights_at_least_fifth =
        std::all_of(core.begin(), core.end(), [&](int u) { return x.weights[u] >= kFifth; });
    VertexSet neighbors, non_neighbors;
    for (int u : core) (g.adjacent(u, v) ? neighbors : non_neighbors).push_back(u);
    const VertexSet& pick = neighbors.size() < non_neighbors.size() ? neighbors : non_neighbors;
    cert.integral_set = unite(cert.integral_set, pick);
    cert.witness_sets.emplace_back("core", core);
    cert.witness_sets.emplace_back("core_neighbors", std::move(neighbors));
    cert.witness_sets.emplace_back("core_non_neighbors", std::move(non_neighbors));
    break;
  }
  return cert;
}

std::vector<std::string> check_certificate(const Instance& inst, const RoundingCertificate& c) {
  std::vector<std::string> failures;
  const int n = inst.num_vertices();
  for (int u : c.integral_set)
    if (u < 0 || u >= n) {
      failures.push_back("integral set has out-of-range vertex " + std::to_string(u));
      return failures;
    }
  if (!is_solution(inst, c.integral_set)) failures.push_back("integral set is not a solution");
  if (contains(make_vertex_set(c.integral_set), c.pinned))
    failures.push_back("integral set contains the pinned vertex");
  if (Rational(static_cast<long>(c.integral_set.size())) > c.factor_bound * c.fractional_value)
    failures.push_back("integral set exceeds factor_bound * fractional_value");
  if (c.core_weights_at_least_fifth && !*c.core_weights_at_least_fifth)
    failures.push_back("a core vertex had weight below 1/5 in the final split");
  return failures;
}

}  // namespace essentia
