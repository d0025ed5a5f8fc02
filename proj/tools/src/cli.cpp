#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "essentia/detection.hpp"
#include "essentia/driver.hpp"
#include "essentia/errors.hpp"
#include "essentia/exact_solver.hpp"
#include "essentia/gap.hpp"
#include "essentia/generators.hpp"
#include "essentia/instance_io.hpp"
#include "essentia/lp.hpp"
#include "essentia/obstacles.hpp"
#include "essentia/rounding.hpp"
#include "json.hpp"

namespace essentia::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Settings {
  std::vector<std::string> inputs;
  std::string format = "json";
  std::string problem;
  std::optional<int> k;
  std::optional<int> pin;
  std::string c = "1";
  std::string eps = "1";
  std::uint64_t seed = 0;
  int jobs = 1;
  std::optional<std::uint64_t> node_cap;
  int size_cap = -1;
  bool csv = false;
  bool certificate = false;
  std::string family;
  int m = 6;
  int n = 8;
  std::string edge_probability = "2/5";
  int terminal_pairs = 3;
  std::string target;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Instance load(const Settings& s, const std::string& path) {
  const std::string text = read_text(path);
  if (s.format == "json") return instance_from_json(text);
  if (s.format == "dimacs-edges") {
    if (s.problem.empty()) throw InvalidInput("--format dimacs-edges needs --problem");
    return instance_from_dimacs(text, parse_problem(s.problem));
  }
  throw InvalidInput("unknown format " + s.format);
}

const std::string& single_input(const Settings& s) {
  if (s.inputs.size() != 1) throw InvalidInput("expected exactly one instance file");
  return s.inputs.front();
}

Json set_json(const VertexSet& set) { return Json(set); }

Json instance_json(const Instance& inst, const std::map<std::string, VertexSet>& labels = {}) {
  return Json::parse(instance_to_json(inst, labels));
}

std::optional<int> checked_pin(const Settings& s, const Instance& inst) {
  if (s.pin && (*s.pin < 0 || *s.pin >= inst.num_vertices()))
    throw InvalidInput("--pin " + std::to_string(*s.pin) + " out of range [0, " +
                       std::to_string(inst.num_vertices()) + ")");
  return s.pin;
}

Json cmd_solve(const Settings& s) {
  Instance inst = load(s, single_input(s));
  SolveBudget budget;
  budget.max_k = s.k;
  budget.node_cap = s.node_cap;
  if (auto pin = checked_pin(s, inst)) budget.forbidden = {*pin};
  auto x = solve_exact(inst, budget);
  Json out;
  if (!x) {
    out["opt"] = nullptr;
    out["solution"] = nullptr;
    return out;
  }
  out["opt"] = x->size();
  out["solution"] = set_json(*x);
  return out;
}

Json detection_json(const DetectionResult& r) {
  Json out;
  out["selected"] = set_json(r.selected);
  Json values = Json::object();
  for (std::size_t v = 0; v < r.lp_values.size(); ++v) values[std::to_string(v)] = to_string(r.lp_values[v]);
  out["lp_values"] = std::move(values);
  out["threshold"] = to_string(r.threshold_used);
  return out;
}

Json cmd_detect(const Settings& s) {
  Instance inst = load(s, single_input(s));
  if (!s.k) throw InvalidInput("detect needs --k");
  DetectionOptions options;
  options.jobs = s.jobs;
  Json out = detection_json(detect({inst, *s.k}, options));
  if (s.certificate) {
    out["k"] = *s.k;
    out["instance"] = instance_json(inst);
  }
  return out;
}

Json cmd_reduce(const Settings& s) {
  Instance inst = load(s, single_input(s));
  DriverOptions options;
  options.detection.jobs = s.jobs;
  options.node_cap = s.node_cap;
  auto r = solve_with_detection(inst, options);
  Json out;
  out["opt"] = r.opt;
  out["solution"] = set_json(r.solution);
  out["detected"] = set_json(r.detected);
  out["residual_budget"] = r.residual_budget;
  Json its = Json::array();
  for (const auto& it : r.iterations)
    its.push_back({{"b", it.budget}, {"k", it.k}, {"detected", it.detected}, {"solved", it.solved}});
  out["iterations"] = std::move(its);
  return out;
}

Json certificate_json(const RoundingCertificate& c) {
  Json out;
  out["problem"] = std::string(problem_tag(c.problem));
  out["pinned"] = c.pinned;
  out["factor_bound"] = to_string(c.factor_bound);
  out["fractional_value"] = to_string(c.fractional_value);
  out["integral_set"] = set_json(c.integral_set);
  Json witnesses = Json::array();
  for (const auto& [name, set] : c.witness_sets) witnesses.push_back({{"name", name}, {"set", set}});
  out["witness_sets"] = std::move(witnesses);
  if (c.core_weights_at_least_fifth) out["core_weights_at_least_fifth"] = *c.core_weights_at_least_fifth;
  return out;
}

RoundingCertificate certificate_from_json(const Json& j) {
  RoundingCertificate c;
  c.problem = parse_problem(j.at("problem").get<std::string>());
  c.pinned = j.at("pinned").get<int>();
  c.factor_bound = parse_rational(j.at("factor_bound").get<std::string>());
  c.fractional_value = parse_rational(j.at("fractional_value").get<std::string>());
  c.integral_set = j.at("integral_set").get<VertexSet>();
  if (j.contains("witness_sets"))
    for (const auto& w : j["witness_sets"])
      c.witness_sets.emplace_back(w.at("name").get<std::string>(), w.at("set").get<VertexSet>());
  if (j.contains("core_weights_at_least_fifth"))
    c.core_weights_at_least_fifth = j["core_weights_at_least_fifth"].get<bool>();
  return c;
}

std::optional<RoundingCertificate> round(const Instance& inst, int v, const FractionalSolution& x) {
  const int pin[] = {v};
  if (!is_solution(inst, pin)) return std::nullopt;
  switch (inst.problem()) {
    case Problem::VertexMulticut:
      return round_multicut(inst, v, x);
    case Problem::DirectedVertexMulticut:
      return round_directed_multicut(inst, v, x);
    case Problem::CographDeletion:
      return round_cograph(inst.graph(), v, x);
    default:
      return std::nullopt;
  }
}

Json gap_row(const Settings& s, const Instance& inst) {
  GapOptions options;
  if (s.size_cap >= 0) options.size_cap = s.size_cap;
  options.node_cap = s.node_cap;
  auto pin = checked_pin(s, inst);
  auto r = measure_gap(inst, pin, options);
  Json out;
  out["n"] = inst.num_vertices();
  out["fractional"] = to_string(r.fractional);
  out["integral"] = r.integral;
  out["ratio"] = r.ratio ? Json(to_string(*r.ratio)) : Json(nullptr);
  out["pinned"] = pin ? Json(*pin) : Json(nullptr);
  if (s.certificate && pin) {
    LpProblem lp{inst, pin, {}};
    if (auto c = round(inst, *pin, solve(lp))) {
      out["instance"] = instance_json(inst);
      out["certificate"] = certificate_json(*c);
    }
  }
  return out;
}

void cmd_gap(const Settings& s, std::ostream& out) {
  if (s.inputs.empty()) throw InvalidInput("gap needs at least one instance file");
  std::vector<Instance> instances;
  for (const auto& path : s.inputs) instances.push_back(load(s, path));
  std::vector<Json> rows(instances.size());
  std::vector<std::exception_ptr> failures(instances.size());
  const int jobs = std::max(1, std::min<int>(s.jobs, static_cast<int>(instances.size())));
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < instances.size(); i += static_cast<std::size_t>(jobs)) {
        try {
          rows[i] = gap_row(s, instances[i]);
        } catch (...) {
          failures[i] = std::current_exception();
        }
      }
    });
  for (auto& t : workers) t.join();
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);

  if (s.csv) {
    out << "id,n,fractional,integral,ratio\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Json& r = rows[i];
      out << s.inputs[i] << ',' << r["n"].get<int>() << ',' << r["fractional"].get<std::string>() << ','
          << r["integral"].get<int>() << ',' << (r["ratio"].is_null() ? "" : r["ratio"].get<std::string>())
          << '\n';
    }
    return;
  }
  if (rows.size() == 1) {
    out << rows.front().dump() << '\n';
    return;
  }
  Json all = Json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Json r = rows[i];
    r["id"] = s.inputs[i];
    all.push_back(std::move(r));
  }
  out << all.dump() << '\n';
}

Json cmd_generate(const Settings& s) {
  const std::string& f = s.family;
  if (f == "star") return instance_json(gen_star_multicut(s.m));
  if (f == "matching-apex") return instance_json(gen_matching_apex(s.m));
  if (f == "gnp") return instance_json(gen_gnp(s.n, s.seed));
  if (f == "cograph") return instance_json(Instance(Problem::CographDeletion, gen_random_cograph(s.n, s.seed)));
  if (f == "random" || f == "singleton") {
    if (s.problem.empty()) throw InvalidInput("generate " + f + " needs --problem");
    RandomSpec spec{parse_problem(s.problem), s.n, parse_rational(s.edge_probability), s.terminal_pairs};
    if (spec.edge_probability < 0 || spec.edge_probability > 1)
      throw InvalidInput("--p must lie in [0, 1]");
    if (f == "random") return instance_json(gen_random(spec, s.seed));
    auto gen = gen_random_singleton(spec, s.seed);
    return instance_json(gen.instance, {{"v", {gen.pinned}}});
  }
  if (f == "dfvs-gadget" || f == "vc-gadget") {
    Instance base = load(s, single_input(s));
    const Rational eps = parse_rational(s.eps);
    auto g = f == "dfvs-gadget" ? gen_dfvs_gadget(base, eps) : gen_vc_gadget(base, eps);
    Json out = instance_json(g.instance, g.labels);
    out["copies"] = g.copies;
    out["m"] = g.m;
    return out;
  }
  throw InvalidInput("unknown family \"" + f +
                     "\" (star, matching-apex, gnp, cograph, random, singleton, dfvs-gadget, vc-gadget)");
}

Json cmd_convert(const Settings& s) {
  return instance_json(convert(load(s, single_input(s)), parse_problem(s.target)));
}

// Replays a detection report or a rounding certificate; both must embed the
// instance (emitted with --certificate).
Json cmd_verify(const Settings& s) {
  Json doc;
  try {
    doc = Json::parse(read_text(single_input(s)));
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.contains("instance")) throw InvalidInput("verify: report has no \"instance\"");
  Instance inst = instance_from_json(doc["instance"].dump());
  std::vector<std::string> failures;
  std::string kind;
  try {
    if (doc.contains("certificate")) {
      kind = "rounding";
      RoundingCertificate c = certificate_from_json(doc["certificate"]);
      failures = check_certificate(inst, c);
      LpProblem lp{inst, c.pinned, {}};
      if (solve(lp).value != c.fractional_value)
        failures.push_back("fractional_value is not the optimum of the pinned LP");
    } else if (doc.contains("lp_values")) {
      kind = "detection";
      if (!doc.contains("k")) throw InvalidInput("verify: detection report has no \"k\"");
      DetectionOptions options;
      options.jobs = s.jobs;
      auto r = detect({inst, doc["k"].get<int>()}, options);
      if (doc["selected"].get<VertexSet>() != r.selected) failures.push_back("selected set differs");
      for (std::size_t v = 0; v < r.lp_values.size(); ++v) {
        const std::string key = std::to_string(v);
        if (!doc["lp_values"].contains(key) ||
            parse_rational(doc["lp_values"][key].get<std::string>()) != r.lp_values[v])
          failures.push_back("lp value of vertex " + key + " differs");
      }
    } else {
      throw InvalidInput("verify: expected a \"certificate\" or \"lp_values\"");
    }
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("verify: ") + e.what());
  }
  Json out;
  out["kind"] = kind;
  out["valid"] = failures.empty();
  out["failures"] = failures;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"LP-based essential vertex detection for vertex hitting set problems", "essentia"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", s.format, "json or dimacs-edges")->check(CLI::IsMember({"json", "dimacs-edges"}));
    sub->add_option("--problem", s.problem, "problem tag for dimacs-edges or generators");
    sub->add_option("--node-cap", s.node_cap, "search node cap");
    sub->add_option("--jobs", s.jobs, "parallel LP solves")->check(CLI::PositiveNumber);
  };

  auto* solve_cmd = app.add_subcommand("solve", "exact minimum solution");
  add_common(solve_cmd);
  solve_cmd->add_option("--k", s.k, "only solutions of size <= k");
  solve_cmd->add_option("--pin", s.pin, "forbid this vertex");
  solve_cmd->add_option("input", s.inputs, "instance file or -")->required();

  auto* detect_cmd = app.add_subcommand("detect", "vertices whose avoiding LP value exceeds k");
  add_common(detect_cmd);
  detect_cmd->add_option("--k", s.k, "guess for the optimum")->required();
  detect_cmd->add_flag("--certificate", s.certificate, "embed the instance for verify");
  detect_cmd->add_option("input", s.inputs)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "search-space reduction driver");
  add_common(reduce_cmd);
  reduce_cmd->add_option("input", s.inputs)->required();

  auto* gap_cmd = app.add_subcommand("gap", "fractional versus integral optimum");
  add_common(gap_cmd);
  gap_cmd->add_option("--pin", s.pin, "pinned vertex (v-avoiding LP)");
  gap_cmd->add_option("--size-cap", s.size_cap, "largest n accepted");
  gap_cmd->add_flag("--csv", s.csv, "CSV rows: id,n,fractional,integral,ratio");
  gap_cmd->add_flag("--certificate", s.certificate, "attach a rounding certificate when {pin} is a solution");
  gap_cmd->add_option("inputs", s.inputs)->required();

  auto* gen_cmd = app.add_subcommand("generate", "emit a generated instance");
  add_common(gen_cmd);
  gen_cmd->add_option("family", s.family)->required();
  gen_cmd->add_option("--m", s.m, "star leaves / matching edges");
  gen_cmd->add_option("--n", s.n, "vertex count");
  gen_cmd->add_option("--seed", s.seed);
  gen_cmd->add_option("--eps", s.eps, "gadget epsilon, e.g. 1/2");
  gen_cmd->add_option("--p", s.edge_probability, "edge probability, e.g. 2/5");
  gen_cmd->add_option("--pairs", s.terminal_pairs, "terminal pairs");
  gen_cmd->add_option("--base", s.inputs, "base instance for gadgets");

  auto* convert_cmd = app.add_subcommand("convert", "DFVS -> directed multicut, VC -> multicut");
  add_common(convert_cmd);
  convert_cmd->add_option("--to", s.target)->required();
  convert_cmd->add_option("input", s.inputs)->required();

  auto* verify_cmd = app.add_subcommand("verify", "replay a detection report or rounding certificate");
  add_common(verify_cmd);
  verify_cmd->add_option("input", s.inputs)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (*solve_cmd) out << cmd_solve(s).dump() << '\n';
    else if (*detect_cmd) out << cmd_detect(s).dump() << '\n';
    else if (*reduce_cmd) out << cmd_reduce(s).dump() << '\n';
    else if (*gap_cmd) cmd_gap(s, out);
    else if (*gen_cmd) out << cmd_generate(s).dump() << '\n';
    else if (*convert_cmd) out << cmd_convert(s).dump() << '\n';
    else if (*verify_cmd) {
      Json r = cmd_verify(s);
      out << r.dump() << '\n';
      return r["valid"].get<bool>() ? 0 : 1;
    }
  } catch (const ResourceExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace essentia::cli
