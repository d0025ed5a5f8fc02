#include "essentia/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "essentia/errors.hpp"
#include "essentia/obstacles.hpp"

namespace essentia {

namespace {

using Rng = std::mt19937_64;

bool coin(Rng& rng, const Rational& p) {
  // p = num/den with small den; uniform draw in [0, den).
  const unsigned long den = p.get_den().get_ui();
  const unsigned long num = p.get_num().get_ui();
  return rng() % den < num;
}

int uniform_index(Rng& rng, int bound) { return static_cast<int>(rng() % static_cast<unsigned>(bound)); }

std::vector<Arc> random_arcs(Rng& rng, int n, bool directed, const Rational& p) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = directed ? 0 : u + 1; v < n; ++v)
      if (u != v && coin(rng, p)) arcs.emplace_back(u, v);
  return arcs;
}

bool reaches_avoiding(const Graph& g, int s, int t, int avoid) {
  if (s == avoid || t == avoid) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<int> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (u == t) return true;
    for (int y : g.out_neighbors(u))
      if (!seen[y] && y != avoid) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  return false;
}

void check_eps(const Rational& eps, const Rational& upper, const char* what) {
  if (eps <= 0 || eps > upper)
    throw InvalidInput(std::string(what) + ": eps must lie in (0, " + to_string(upper) + "]");
}

// Disjoint copies of the base graph's arcs, copy i on vertices i*n0 .. i*n0+n0-1.
void append_copies(const Graph& base, int copies, std::vector<Arc>& arcs, std::vector<int>& copy_index) {
  const int n0 = base.num_vertices();
  for (int c = 0; c < copies; ++c) {
    for (auto [u, v] : base.arcs()) arcs.emplace_back(c * n0 + u, c * n0 + v);
    for (int u = 0; u < n0; ++u) copy_index.push_back(c);
  }
}

VertexSet range_set(int begin, int end) {
  VertexSet s(static_cast<std::size_t>(std::max(end - begin, 0)));
  std::iota(s.begin(), s.end(), begin);
  return s;
}

void build_cograph(Rng& rng, std::vector<int> vertices, std::vector<Arc>& edges) {
  if (vertices.size() <= 1) return;
  std::shuffle(vertices.begin(), vertices.end(), rng);
  const std::size_t cut = 1 + rng() % (vertices.size() - 1);
  std::vector<int> left(vertices.begin(), vertices.begin() + static_cast<long>(cut));
  std::vector<int> right(vertices.begin() + static_cast<long>(cut), vertices.end());
  if (rng() & 1)
    for (int a : left)
      for (int b : right) edges.emplace_back(std::min(a, b), std::max(a, b));
  build_cograph(rng, left, edges);
  build_cograph(rng, right, edges);
}

}  // namespace

Instance gen_star_multicut(int m) {
  if (m < 2) throw InvalidInput("star needs m >= 2 leaves");
  std::vector<Arc> edges;
  std::vector<Arc> pairs;
  for (int i = 1; i <= m; ++i) {
    edges.emplace_back(0, i);
    for (int j = i + 1; j <= m; ++j) pairs.emplace_back(i, j);
  }
  return Instance(Problem::VertexMulticut, Graph(m + 1, false, edges), std::move(pairs));
}

Instance gen_matching_apex(int m) {
  if (m < 2) throw InvalidInput("matching+apex needs m >= 2 edges");
  std::vector<Arc> edges;
  for (int i = 1; i <= m; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, m + i);
  }
  return Instance(Problem::CographDeletion, Graph(2 * m + 1, false, edges));
}

GadgetInstance gen_dfvs_gadget(const Instance& base, const Rational& eps) {
  if (base.problem() != Problem::DirectedFeedbackVertexSet)
    throw InvalidInput("DFVS gadget needs a DFVS base instance");
  check_eps(eps, Rational(1), "DFVS gadget");
  const int n0 = base.num_vertices();
  if (n0 == 0) throw InvalidInput("DFVS gadget needs a nonempty base");
  Rational half_share = Rational(n0) * eps / 2;
  half_share.canonicalize();
  GadgetInstance out;
  out.copies = static_cast<int>(half_share.get_den().get_si());
  const int p = out.copies * n0;
  Rational m = (1 - eps / 2) * p;
  m.canonicalize();
  out.m = static_cast<int>(m.get_num().get_si());

  std::vector<Arc> arcs;
  append_copies(base.graph(), out.copies, arcs, out.copy_index);
  const int q_in = p;
  const int q_out = p + out.m;
  for (int i = 0; i < out.m; ++i) {
    arcs.emplace_back(q_in + i, q_out + i);
    for (int u = 0; u < p; ++u) {
      arcs.emplace_back(u, q_in + i);
      arcs.emplace_back(q_out + i, u);
    }
  }
  out.copy_index.resize(static_cast<std::size_t>(p + 2 * out.m), -1);
  out.instance = Instance(Problem::DirectedFeedbackVertexSet, Graph(p + 2 * out.m, true, arcs));
  out.labels["P"] = range_set(0, p);
  out.labels["Q_in"] = range_set(q_in, q_in + out.m);
  out.labels["Q_out"] = range_set(q_out, q_out + out.m);
  return out;
}

GadgetInstance gen_vc_gadget(const Instance& base, const Rational& eps) {
  if (base.problem() != Problem::VertexCover)
    throw InvalidInput("VC gadget needs a vertex-cover base instance");
  check_eps(eps, Rational(1, 2), "VC gadget");
  const int n0 = base.num_vertices();
  if (n0 == 0) throw InvalidInput("VC gadget needs a nonempty base");
  GadgetInstance out;
  // Smallest copy count making both n eps / 4 and (1/2 - eps/2) n integral.
  for (int c = 1;; ++c) {
    Rational quarter_share = Rational(c * n0) * eps / 4;
    Rational m = (Rational(1, 2) - eps / 2) * (c * n0);
    quarter_share.canonicalize();
    m.canonicalize();
    if (quarter_share.get_den() == 1 && m.get_den() == 1) {
      out.copies = c;
      out.m = static_cast<int>(m.get_num().get_si());
      break;
    }
  }
  const int p = out.copies * n0;
  std::vector<Arc> edges;
  append_copies(base.graph(), out.copies, edges, out.copy_index);
  for (int u = 0; u < p; ++u)
    for (int q = p; q < p + out.m; ++q) edges.emplace_back(u, q);
  out.copy_index.resize(static_cast<std::size_t>(p + out.m), -1);
  out.instance = Instance(Problem::VertexCover, Graph(p + out.m, false, edges));
  out.labels["P"] = range_set(0, p);
  out.labels["Q"] = range_set(p, p + out.m);
  return out;
}

Instance convert(const Instance& inst, Problem target) {
  const Problem from = inst.problem();
  std::vector<Arc> pairs;
  if (from == Problem::DirectedFeedbackVertexSet && target == Problem::DirectedVertexMulticut) {
    for (auto [u, v] : inst.graph().arcs()) pairs.emplace_back(v, u);
  } else if (from == Problem::VertexCover && target == Problem::VertexMulticut) {
    pairs = inst.graph().arcs();
  } else {
    throw InvalidInput("unsupported conversion " + std::string(problem_tag(from)) + " -> " +
                       std::string(problem_tag(target)));
  }
  return Instance(target, inst.graph(), std::move(pairs));
}

Instance gen_gnp(int n, std::uint64_t seed) {
  if (n < 4) throw InvalidInput("G(n, 1/2) experiment needs n >= 4");
  Rng rng(seed);
  std::vector<Arc> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() >> 63) edges.emplace_back(u, v);
  return Instance(Problem::CographDeletion, Graph(n, false, edges));
}

Instance gen_random(const RandomSpec& spec, std::uint64_t seed) {
  if (spec.n < 1) throw InvalidInput("random instance needs n >= 1");
  Rng rng(seed);
  const bool directed = needs_directed(spec.problem);
  Graph g(spec.n, directed, random_arcs(rng, spec.n, directed, spec.edge_probability));
  std::vector<Arc> pairs;
  if (is_multicut(spec.problem) && spec.n >= 2) {
    std::set<Arc> chosen;
    for (int attempt = 0; attempt < 20 * spec.terminal_pairs &&
                          static_cast<int>(chosen.size()) < spec.terminal_pairs;
         ++attempt) {
      int s = uniform_index(rng, spec.n);
      int t = uniform_index(rng, spec.n);
      if (s == t) continue;
      if (!directed && s > t) std::swap(s, t);
      chosen.insert({s, t});
    }
    pairs.assign(chosen.begin(), chosen.end());
  }
  return Instance(spec.problem, std::move(g), std::move(pairs));
}

PinnedInstance gen_random_singleton(const RandomSpec& spec, std::uint64_t seed) {
  if (spec.n < 3) throw InvalidInput("singleton-solution instances need n >= 3");
  Rng rng(seed);
  const int n = spec.n;
  if (spec.problem == Problem::CographDeletion) {
    // Resample the apex neighbourhood a few times so that some P4 exists.
    for (int attempt = 0;; ++attempt) {
      const int v = uniform_index(rng, n);
      std::vector<int> others;
      for (int u = 0; u < n; ++u)
        if (u != v) others.push_back(u);
      std::vector<Arc> edges;
      build_cograph(rng, others, edges);
      for (int u : others)
        if (coin(rng, Rational(1, 2))) edges.emplace_back(std::min(u, v), std::max(u, v));
      Instance inst(Problem::CographDeletion, Graph(n, false, edges));
      if (attempt >= 20 || !induced_p4s(inst.graph()).empty()) return {std::move(inst), v};
    }
  }
  if (!is_multicut(spec.problem))
    throw InvalidInput("singleton-solution generator supports multicut and cograph deletion");
  const bool directed = spec.problem == Problem::DirectedVertexMulticut;
  for (;;) {
    // v joins two or more groups that have no arcs between them.
    const int v = uniform_index(rng, n);
    const int groups = 2 + uniform_index(rng, std::max(1, (n - 1) / 2));
    std::vector<int> group(static_cast<std::size_t>(n), -1);
    for (int u = 0; u < n; ++u)
      if (u != v) group[u] = uniform_index(rng, groups);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
      for (int w = directed ? 0 : u + 1; w < n; ++w) {
        if (u == w) continue;
        const bool hub = u == v || w == v;
        if (!hub && group[u] != group[w]) continue;
        if (coin(rng, hub ? Rational(3, 5) : spec.edge_probability)) arcs.emplace_back(u, w);
      }
    Graph g(n, directed, arcs);
    std::vector<Arc> candidates;
    for (int s = 0; s < n; ++s)
      for (int t = directed ? 0 : s + 1; t < n; ++t) {
        if (s == t || s == v || t == v) continue;
        if (reaches_avoiding(g, s, t, -1) && !reaches_avoiding(g, s, t, v)) candidates.emplace_back(s, t);
      }
    if (candidates.empty()) continue;
    std::shuffle(candidates.begin(), candidates.end(), rng);
    const std::size_t keep =
        std::min(candidates.size(), static_cast<std::size_t>(std::max(spec.terminal_pairs, 1)));
    candidates.resize(keep);
    std::sort(candidates.begin(), candidates.end());
    return {Instance(spec.problem, std::move(g), std::move(candidates)), v};
  }
}

Graph gen_random_cograph(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> vertices(static_cast<std::size_t>(n));
  std::iota(vertices.begin(), vertices.end(), 0);
  std::vector<Arc> edges;
  build_cograph(rng, vertices, edges);
  return Graph(n, false, edges);
}

bool every_subset_has_p4(const Graph& g, int size) {
  const int n = g.num_vertices();
  if (size > n) return true;
  std::vector<int> pick(static_cast<std::size_t>(size));
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<char> removed(static_cast<std::size_t>(n));
  for (;;) {
    std::fill(removed.begin(), removed.end(), 1);
    for (int u : pick) removed[u] = 0;
    if (induced_p4s(g, removed).empty()) return false;
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i) --i;
    if (i < 0) return true;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace essentia
