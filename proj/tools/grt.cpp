// Command-line front end: formula evaluation, extremal constructions,
// the distilling pipeline with trace output, verification sweeps, and
// asymptotic rate tables.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or parse error, 3 budget or hypothesis error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "grt/formulas.hpp"
#include "grt/graph_file.hpp"
#include "grt/oracle.hpp"
#include "grt/pipeline.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

grt::MatchingProfile parse_thresholds(const std::string& spec) {
  std::vector<int> t;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      t.push_back(value);
    } catch (const std::exception&) {
      throw grt::parse_error("bad threshold list '" + spec + "': expected e.g. \"3\" or \"2,2\"");
    }
  }
  if (t.empty()) throw grt::parse_error("threshold list is empty");
  return grt::MatchingProfile(std::move(t));
}

std::string nu_to_string(const std::vector<int>& nu) {
  std::string out = "(";
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(nu[i]);
  }
  return out + ")";
}

json trace_to_json(const grt::DistilTrace& trace, int ell) {
  json steps = json::array();
  for (const auto& r : trace.records) {
    json sets = json::object();
    for (const auto& [name, verts] : r.sets) sets[name] = verts;
    json step;
    step["kind"] = r.kind;
    step["colour"] = r.colour;
    step["sets"] = std::move(sets);
    step["m_ell"] = r.after.clique_counts[static_cast<std::size_t>(ell - 2)];
    step["nu"] = r.after.nu;
    step["mns"] = r.after.matching_sum;
    step["theta"] = r.after.theta;
    steps.push_back(std::move(step));
  }
  return json{{"schema", 1}, {"ell", ell}, {"steps", std::move(steps)}};
}

int cmd_formula(int ell, long long n, const std::string& t_spec, bool as_json) {
  grt::MatchingProfile t = parse_thresholds(t_spec);
  grt::GrtValue v = grt_number(ell, n, t);
  if (as_json) {
    json out{{"schema", 1},
             {"ell", ell},
             {"n", n},
             {"t", t.thresholds},
             {"lambda", t.lambda()},
             {"t_max", t.max_threshold()},
             {"value", v.value.str()},
             {"regime", grt::to_string(v.regime)}};
    out["sparse_candidate"] = v.sparse_candidate ? json(v.sparse_candidate->str()) : json();
    out["dense_candidate"] = v.dense_candidate ? json(v.dense_candidate->str()) : json();
    std::cout << out.dump(2) << '\n';
    return kExitPass;
  }
  std::cout << "GRT_" << ell << "(" << n << " -> tK2) with t = " << nu_to_string(t.thresholds)
            << "\n";
  std::cout << "  value:   " << v.value << "\n";
  std::cout << "  regime:  " << grt::to_string(v.regime) << "\n";
  std::cout << "  sparse:  "
            << (v.sparse_candidate ? v.sparse_candidate->str() : std::string("-")) << "\n";
  std::cout << "  dense:   " << (v.dense_candidate ? v.dense_candidate->str() : std::string("-"))
            << "\n";
  std::cout << "  lambda:  " << t.lambda() << "\n";
  std::cout << "  t_max:   " << t.max_threshold() << "\n";
  return kExitPass;
}

int cmd_construct(const std::string& kind, int n, const std::string& t_spec,
                  const std::string& out_path, int ell) {
  grt::MatchingProfile t = parse_thresholds(t_spec);
  grt::ColouredGraph cg =
      kind == "sparse" ? grt::sparse_construction(n, t) : grt::dense_construction(n, t);
  grt::save_graph_file(cg, out_path);

  std::vector<int> nu = nu_vector(cg);
  for (std::size_t j = 0; j < nu.size(); ++j)
    if (nu[j] > t.thresholds[j] - 1)
      throw grt::precondition_error("construction self-check failed: colour matching too large");

  long long x = kind == "sparse" ? 1 : 2 * t.max_threshold() - 1;
  long long y = kind == "sparse" ? t.lambda() : t.lambda() - t.max_threshold() + 1;
  std::cout << "wrote " << out_path << "\n";
  std::cout << "  kind:   " << kind << " (x = " << x << ", y = " << y << ")\n";
  std::cout << "  nu:     " << nu_to_string(nu) << "\n";
  std::cout << "  m_" << ell << ":    " << grt::phi(ell, n, x, y) << "\n";
  return kExitPass;
}

int cmd_distil(const std::string& in_path, const std::string& t_spec, int ell,
               const std::string& trace_path, std::string out_path) {
  grt::MatchingProfile t = parse_thresholds(t_spec);
  grt::ColouredGraph input = grt::load_graph_file(in_path);
  if (input.colours() != t.q())
    throw grt::parse_error("threshold count does not match the file's colour count");

  // Hypothesis diagnostics, reported before the pipeline runs.
  const int n = input.order();
  if (input.layer(0).has_any_edge())
    throw grt::precondition_error(
        "input has uncoloured edges; distilling starts from a plain colouring");
  std::vector<int> nu_in = nu_vector(input);
  for (std::size_t j = 0; j < nu_in.size(); ++j) {
    if (2 * nu_in[j] >= n)
      throw grt::precondition_error("colour " + std::to_string(j + 1) +
                                    " has a perfect matching on the " + std::to_string(n) +
                                    " vertices");
    if (nu_in[j] > t.thresholds[j] - 1)
      throw grt::precondition_error("colour " + std::to_string(j + 1) + " already has a " +
                                    std::to_string(t.thresholds[j]) + "-matching");
  }
  if (grt::mns(input) >= n)
    throw grt::precondition_error("matching-number sum must stay below the vertex count");

  grt::DistilResult r = grt::distil(input);
  grt::ColouredGraph recoloured = grt::recolour(r.graph, r.cone, r.kappa, t.thresholds, &r.trace);

  if (out_path.empty()) out_path = in_path + ".distilled";
  grt::save_graph_file(recoloured, out_path);
  if (!trace_path.empty()) {
    std::ofstream trace_out(trace_path, std::ios::binary);
    if (!trace_out) throw grt::parse_error("cannot open for writing: " + trace_path);
    trace_out << trace_to_json(r.trace, ell).dump(2) << '\n';
  }

  std::uint64_t before = count_cliques(input.underlying(), ell);
  std::uint64_t after = count_cliques(r.graph.underlying(), ell);
  std::cout << "m_" << ell << " before: " << before << "\n";
  std::cout << "m_" << ell << " after:  " << after << "\n";
  std::cout << "clique-cone (x, y) = (" << 2 * r.kappa + 1 << ", " << r.cone.size() << ")\n";

  grt::DistilChecks checks = check_distilled(input, r);
  auto report = [](const char* name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
    return ok;
  };
  bool all = true;
  all &= report("single surviving colour", checks.single_colour);
  all &= report("odd clique plus isolated vertices, off the cone", checks.clique_shape);
  all &= report("clique counts non-decreasing (ell = 2..5)", checks.clique_counts_up);
  all &= report("matching vector dominated, kappa at the survivor", checks.nu_dominated);
  all &= report("matching sum dropped by at least |S|", checks.mns_drop);
  all &= report("cone covers the uncoloured layer", checks.cone_covers);
  all &= report("underlying graph is the clique-cone graph", checks.clique_cone_shape);

  std::vector<int> nu_plus = nu_vector(recoloured);
  bool still_free = !recoloured.layer(0).has_any_edge();
  for (std::size_t j = 0; j < nu_plus.size(); ++j)
    still_free = still_free && nu_plus[j] <= t.thresholds[j] - 1;
  all &= report("recoloured graph stays below every threshold", still_free);

  std::cout << "wrote " << out_path << "\n";
  return all ? kExitPass : kExitVerifyFail;
}

int cmd_verify_grt(int max_n, int ell, const grt::MatchingProfile& t) {
  bool all = true;
  for (int n = 1; n <= max_n; ++n) {
    grt::BigInt formula = grt_number(ell, n, t).value;
    grt::oracle::GrtSearchResult brute = grt::oracle::brute_grt(ell, n, t);
    bool ok = grt::BigInt(brute.value) == formula;
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  n=" << n << "  brute=" << brute.value
              << "  formula=" << formula << "\n";
  }
  return all ? kExitPass : kExitVerifyFail;
}

int cmd_verify_ramsey(const grt::MatchingProfile& t) {
  int expected = t.max_threshold() + t.lambda() + 1;
  int found = grt::oracle::ramsey_search(t);
  bool ok = found == expected;
  std::cout << (ok ? "PASS" : "FAIL") << "  ramsey_search=" << found
            << "  closed form=" << expected << "\n";
  return ok ? kExitPass : kExitVerifyFail;
}

int cmd_verify_pipeline(int max_n, const grt::MatchingProfile& t, unsigned seed, int cases) {
  std::mt19937 rng(seed);
  int ran = 0, passed = 0;
  while (ran < cases) {
    int n = 3 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, max_n - 2)));
    std::vector<grt::Graph> layers(static_cast<std::size_t>(t.q()) + 1, grt::Graph(n));
    for (int i = 0; i < 3 * n * n; ++i) {
      int u = static_cast<int>(rng() % static_cast<unsigned>(n));
      int v = static_cast<int>(rng() % static_cast<unsigned>(n));
      if (u == v) continue;
      int j = 1 + static_cast<int>(rng() % static_cast<unsigned>(t.q()));
      grt::Graph& layer = layers[static_cast<std::size_t>(j)];
      if (layer.has_edge(u, v)) continue;
      layer.add_edge(u, v);
      if (matching_number(layer) > t.thresholds[static_cast<std::size_t>(j - 1)] - 1)
        layer.remove_edge(u, v);
    }
    grt::ColouredGraph cg(std::move(layers));
    bool hypotheses = grt::mns(cg) < n;
    for (int j = 1; j <= t.q() && hypotheses; ++j)
      hypotheses = 2 * matching_number(cg.layer(j)) < n;
    if (!hypotheses) continue;
    ++ran;

    grt::DistilResult r = grt::distil(cg);
    bool ok = check_distilled(cg, r).all() && trace_is_monotone(r.trace);
    grt::ColouredGraph plus = grt::recolour(r.graph, r.cone, r.kappa, t.thresholds);
    std::vector<int> nu = nu_vector(plus);
    for (std::size_t j = 0; j < nu.size(); ++j)
      ok = ok && nu[j] <= t.thresholds[j] - 1;
    if (ok) ++passed;
  }
  std::cout << (passed == ran ? "PASS" : "FAIL") << "  " << passed << "/" << ran
            << " monotone distil traces\n";
  return passed == ran ? kExitPass : kExitVerifyFail;
}

int cmd_asymptotics(int q, double alpha, int sweep, const std::string& out_path) {
  if (sweep > 0) {
    std::ostringstream csv;
    csv << "alpha,sparse,dense,bound\n";
    for (int i = 0; i < sweep; ++i) {
      double a = sweep == 1 ? 0.0 : static_cast<double>(i) / (sweep - 1);
      grt::AsymptoticRates r = grt::asymptotics(q, a);
      csv << a << ',' << r.sparse << ',' << r.dense << ',' << r.bound << '\n';
    }
    if (out_path.empty()) {
      std::cout << csv.str();
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw grt::parse_error("cannot open for writing: " + out_path);
      out << csv.str();
      std::cout << "wrote " << out_path << "\n";
    }
    return kExitPass;
  }
  grt::AsymptoticRates r = grt::asymptotics(q, alpha);
  std::cout << "q = " << q << ", alpha = " << alpha << "\n";
  std::cout << "  sparse rate: " << r.sparse << "\n";
  std::cout << "  dense rate:  " << r.dense << "\n";
  std::cout << "  M(q):        " << r.crossover << "\n";
  std::cout << "  bound:       " << r.bound << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal clique counts for graphs with bounded-matching colourings"};
  app.require_subcommand(1);

  int f_ell = 2;
  long long f_n = 0;
  std::string f_t;
  bool f_json = false;
  CLI::App* formula = app.add_subcommand("formula", "evaluate the closed-form maximum");
  formula->add_option("--ell", f_ell, "clique size (default 2)");
  formula->add_option("--n", f_n, "vertex count")->required();
  formula->add_option("--t", f_t, "thresholds, comma separated")->required();
  formula->add_flag("--json", f_json, "machine-readable output");

  std::string c_kind, c_t, c_out = "construction.graph";
  int c_n = 0, c_ell = 2;
  CLI::App* construct = app.add_subcommand("construct", "emit an extremal colouring");
  construct->add_option("--kind", c_kind, "sparse or dense")
      ->required()
      ->check(CLI::IsMember({"sparse", "dense"}));
  construct->add_option("--n", c_n, "vertex count")->required();
  construct->add_option("--t", c_t, "thresholds, comma separated")->required();
  construct->add_option("--out", c_out, "output path (default construction.graph)");
  construct->add_option("--ell", c_ell, "clique size to report (default 2)");

  std::string d_in, d_t, d_trace, d_out;
  int d_ell = 2;
  CLI::App* distil_cmd =
      app.add_subcommand("distil", "compress a colouring to a clique-cone graph");
  distil_cmd->add_option("--in", d_in, "input graph file")->required();
  distil_cmd->add_option("--t", d_t, "thresholds, comma separated")->required();
  distil_cmd->add_option("--ell", d_ell, "clique size to report (default 2)")
      ->check(CLI::Range(2, 5));
  distil_cmd->add_option("--trace", d_trace, "write the JSON step trace here");
  distil_cmd->add_option("--out", d_out, "output path (default <in>.distilled)");

  std::string v_mode, v_t;
  int v_max_n = -1, v_ell = 2, v_cases = 200;
  unsigned v_seed = 1;
  CLI::App* verify = app.add_subcommand("verify", "cross-check against brute force");
  verify->add_option("--mode", v_mode, "grt, ramsey, or pipeline")
      ->required()
      ->check(CLI::IsMember({"grt", "ramsey", "pipeline"}));
  verify->add_option("--max-n", v_max_n, "largest vertex count (default 6; 8 for pipeline)");
  verify->add_option("--ell", v_ell, "clique size (default 2)");
  verify->add_option("--t", v_t, "thresholds, comma separated")->required();
  verify->add_option("--seed", v_seed, "random seed for pipeline mode (default 1)");
  verify->add_option("--cases", v_cases, "pipeline cases (default 200)");

  int a_q = 1, a_sweep = 0;
  double a_alpha = -1.0;
  std::string a_out;
  CLI::App* asym = app.add_subcommand("asymptotics", "guaranteed matching rates for ell = 2");
  asym->add_option("--q", a_q, "colour count")->required();
  asym->add_option("--alpha", a_alpha, "edge density in [0, 1]");
  asym->add_option("--sweep", a_sweep, "emit a CSV over this many densities");
  asym->add_option("--out", a_out, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
    if (formula->parsed()) return cmd_formula(f_ell, f_n, f_t, f_json);
    if (construct->parsed()) return cmd_construct(c_kind, c_n, c_t, c_out, c_ell);
    if (distil_cmd->parsed()) return cmd_distil(d_in, d_t, d_ell, d_trace, d_out);
    if (verify->parsed()) {
      grt::MatchingProfile t = parse_thresholds(v_t);
      if (v_mode == "grt") return cmd_verify_grt(v_max_n < 0 ? 6 : v_max_n, v_ell, t);
      if (v_mode == "ramsey") return cmd_verify_ramsey(t);
      return cmd_verify_pipeline(v_max_n < 0 ? 8 : v_max_n, t, v_seed, v_cases);
    }
    if (asym->parsed()) {
      if (a_sweep <= 0 && a_alpha < 0.0)
        throw grt::parse_error("asymptotics needs --alpha or --sweep");
      return cmd_asymptotics(a_q, a_alpha, a_sweep, a_out);
    }
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const grt::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const grt::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const grt::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitBudget;
  }
}
