#pragma once

// Command-line front end.  Subcommands:
//
//   solve <instance>     exact weighted solver; prints a mapping certificate
//                        ("map <overlay> <host>" lines + "weight <w>"), or
//                        INFEASIBLE.  With a budget line the command answers
//                        the decision form: exit 0 and a certificate iff the
//                        optimum fits the budget.
//   feasible <instance>  unweighted feasibility; prints yes/no, and with
//                        --construct a mapping certificate instead of "yes".
//   oracle <instance>    brute-force reference solver (same output as solve).
//   check <instance> <mapping>
//                        verifies a certificate: structural defects (not
//                        injective, out of range, not total, weight line
//                        wrong) exit 2; a well-formed mapping that fails the
//                        connectivity target or budget exits 1; otherwise 0.
//   gen                  emits a seeded random instance.
//   bench <instance>     times the solver; prints CSV (the only command whose
//                        output depends on the wall clock).
//
// Exit codes: 0 = yes/solved, 1 = no/infeasible, 2 = usage or parse error,
// 3 = oracle cap exceeded.  File arguments accept "-" for stdin.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sca/cover.hpp"
#include "sca/generators.hpp"
#include "sca/instance.hpp"
#include "sca/oracle.hpp"
#include "sca/solve_connect.hpp"
#include "sca/solve_two_connect.hpp"
#include "sca/unweighted.hpp"

namespace sca {

namespace detail {

inline std::string read_text_file(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

inline void require_cover_bound(const Graph& h, int t_max) {
  if (t_max >= 0 && !minimum_vertex_cover(h, t_max))
    throw std::invalid_argument("overlay has no vertex cover within --tmax " +
                                std::to_string(t_max));
}

inline int report_solution(const Instance& inst, const std::optional<Solution>& sol,
                           std::ostream& out) {
  if (!sol || (inst.budget && sol->weight > *inst.budget)) {
    out << "INFEASIBLE\n";
    return 1;
  }
  out << serialize_solution(*sol);
  return 0;
}

inline int cmd_solve(const Instance& inst, int t_max, int parallel, std::ostream& out) {
  require_cover_bound(inst.h, t_max);
  std::optional<Solution> sol = inst.k == 1
                                    ? solve_connect(inst.g, inst.h, inst.omega, parallel)
                                    : solve_2connect(inst.g, inst.h, inst.omega, parallel);
  return report_solution(inst, sol, out);
}

inline int cmd_oracle(const Instance& inst, std::uint64_t cap, std::ostream& out) {
  OracleOptions opts;
  if (cap > 0) opts.cap = cap;
  auto sol = brute_force_optimum(inst.g, inst.h, inst.omega, inst.k, opts);
  return report_solution(inst, sol, out);
}

inline int cmd_feasible(const Instance& inst, bool construct, std::ostream& out) {
  if (construct) {
    auto phi = inst.k == 1 ? construct_connect(inst.g, inst.h)
                           : construct_2connect(inst.g, inst.h);
    if (!phi) {
      out << "no\n";
      return 1;
    }
    out << serialize_solution(Solution{*phi, mapping_weight(inst.h, *phi, inst.omega)});
    return 0;
  }
  bool ok = inst.k == 1 ? feasible_connect(inst.g, inst.h) : feasible_2connect(inst.g, inst.h);
  out << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

inline int cmd_check(const Instance& inst, const Solution& sol, std::ostream& out,
                     std::ostream& err) {
  for (const auto& [from, to] : sol.phi.pairs()) {
    if (from >= inst.h.n()) {
      err << "check: vertex " << from << " is outside the overlay\n";
      return 2;
    }
    if (to >= inst.g.n()) {
      err << "check: image " << to << " is outside the host\n";
      return 2;
    }
  }
  if (!sol.phi.total_on(inst.h.n())) {
    err << "check: mapping is not total on the overlay\n";
    return 2;
  }
  Weight actual = mapping_weight(inst.h, sol.phi, inst.omega);
  if (actual != sol.weight) {
    err << "check: stated weight " << sol.weight << " but the mapping weighs " << actual
        << "\n";
    return 2;
  }
  if (inst.budget && actual > *inst.budget) {
    out << "no: weight " << actual << " exceeds budget " << *inst.budget << "\n";
    return 1;
  }
  if (!is_k_edge_connected(superpose(inst.g, inst.h, sol.phi), inst.k)) {
    out << "no: superposition is not " << inst.k << "-edge-connected\n";
    return 1;
  }
  out << "ok weight " << actual << "\n";
  return 0;
}

inline int cmd_bench(const Instance& inst, int parallel, int repeat, std::ostream& out) {
  out << "run,weight,microseconds\n";
  for (int run = 0; run < repeat; ++run) {
    auto start = std::chrono::steady_clock::now();
    std::optional<Solution> sol = inst.k == 1
                                      ? solve_connect(inst.g, inst.h, inst.omega, parallel)
                                      : solve_2connect(inst.g, inst.h, inst.omega, parallel);
    auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    out << run << ",";
    if (sol)
      out << sol->weight;
    else
      out << "INFEASIBLE";
    out << "," << micros << "\n";
  }
  return 0;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv) {
  CLI::App app{"exact structured connectivity augmentation"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string mapping_path;
  int parallel = 1;
  int t_max = -1;
  std::uint64_t cap = 0;
  bool construct = false;
  int repeat = 1;
  GenParams gen_params;
  std::uint64_t seed = 0;

  auto* solve = app.add_subcommand("solve", "exact weighted solver");
  solve->add_option("instance", instance_path, "instance file ('-' for stdin)")->required();
  solve->add_option("--parallel", parallel, "worker threads")->check(CLI::Range(1, 1 << 20));
  solve->add_option("--tmax", t_max, "reject instances whose overlay needs a larger vertex cover");

  auto* feasible = app.add_subcommand("feasible", "unweighted feasibility");
  feasible->add_option("instance", instance_path, "instance file ('-' for stdin)")->required();
  feasible->add_flag("--construct", construct, "print a mapping certificate instead of yes");

  auto* oracle = app.add_subcommand("oracle", "brute-force reference solver");
  oracle->add_option("instance", instance_path, "instance file ('-' for stdin)")->required();
  oracle->add_option("--cap", cap, "abort when the injection count exceeds this bound");

  auto* check = app.add_subcommand("check", "verify a mapping certificate");
  check->add_option("instance", instance_path, "instance file ('-' for stdin)")->required();
  check->add_option("mapping", mapping_path, "mapping file")->required();

  auto* gen = app.add_subcommand("gen", "emit a seeded random instance");
  gen->add_option("--seed", seed, "rng seed");
  gen->add_option("--ng", gen_params.n_g, "host vertex count");
  gen->add_option("--nh", gen_params.n_h, "overlay vertex count before stripping isolates");
  gen->add_option("--p", gen_params.edge_prob, "edge probability");
  gen->add_option("--wmax", gen_params.weight_max, "weights are drawn from 0..wmax");
  gen->add_option("--k", gen_params.k, "connectivity target");
  gen->add_flag("--connected-g", gen_params.connected_g, "patch the host to be connected");

  auto* bench = app.add_subcommand("bench", "time the solver, print CSV");
  bench->add_option("instance", instance_path, "instance file ('-' for stdin)")->required();
  bench->add_option("--parallel", parallel, "worker threads")->check(CLI::Range(1, 1 << 20));
  bench->add_option("--repeat", repeat, "number of timed runs")->check(CLI::Range(1, 1 << 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      std::cout << serialize_instance(gen_random(gen_params, seed));
      return 0;
    }
    Instance inst = parse_instance(detail::read_text_file(instance_path));
    if (solve->parsed()) return detail::cmd_solve(inst, t_max, parallel, std::cout);
    if (feasible->parsed()) return detail::cmd_feasible(inst, construct, std::cout);
    if (oracle->parsed()) return detail::cmd_oracle(inst, cap, std::cout);
    if (bench->parsed()) return detail::cmd_bench(inst, parallel, repeat, std::cout);
    Solution sol = parse_solution(detail::read_text_file(mapping_path));
    return detail::cmd_check(inst, sol, std::cout, std::cerr);
  } catch (const OracleCapExceeded& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace sca
