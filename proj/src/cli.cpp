#include "hamvol/cli.hpp"

#include "hamvol/chekanov.hpp"
#include "hamvol/cn_tori.hpp"
#include "hamvol/cpn.hpp"
#include "hamvol/toric.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace hamvol::cli {

namespace {

using io::json;

int threads_from_env() {
  const char* env = std::getenv("HAMVOL_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  const long v = std::strtol(env, nullptr, 10);
  return v > 0 ? static_cast<int>(v) : 0;
}

toric::DelzantPolytope load_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open polytope file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, "polytope file '" + path + "': " + e.what());
  }
  return io::polytope_from_json(j);
}

void emit(const Report& report, bool as_json, const std::string& text, std::ostream& out) {
  if (as_json) {
    json j{{"command", report.command},
           {"inputs", report.inputs},
           {"result", report.result},
           {"exit_code", report.exit_code}};
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

struct CmdContext {
  Report report;
  bool as_json = false;
};

void cmd_invariants(CmdContext& ctx, const std::string& vec, std::ostream& out) {
  const RatVec a = parse_rat_vector(vec);
  const auto inv = chekanov::invariants(a);
  ctx.report.inputs = json{{"a", io::to_json(a)}};
  ctx.report.result = io::to_json(inv);
  ctx.report.exit_code = 0;
  std::ostringstream text;
  text << "min:          " << to_string(inv.min_val) << "\n"
       << "multiplicity: " << inv.multiplicity << "\n"
       << "gamma:        " << to_string(inv.gamma_gen) << "\n"
       << "distinct:     " << inv.n_distinct << "\n"
       << "total:        " << to_string(inv.total) << "\n"
       << "norm:         " << to_string(inv.norm) << "\n"
       << "conorm:       " << to_string(inv.conorm) << "\n";
  emit(ctx.report, ctx.as_json, text.str(), out);
}

void cmd_equiv(CmdContext& ctx, const std::string& lhs, const std::string& rhs,
               std::ostream& out) {
  const RatVec a = parse_rat_vector(lhs);
  const RatVec b = parse_rat_vector(rhs);
  const bool eq = chekanov::isotopy_equivalent(a, b);
  ctx.report.inputs = json{{"a", io::to_json(a)}, {"b", io::to_json(b)}};
  ctx.report.result = json{{"equivalent", eq}};
  ctx.report.exit_code = 0;
  emit(ctx.report, ctx.as_json, std::string("equivalent: ") + (eq ? "true" : "false") + "\n",
       out);
}

void cmd_witness(CmdContext& ctx, const std::string& vec, std::ostream& out) {
  const RatVec a = parse_rat_vector(vec);
  ctx.report.inputs = json{{"a", io::to_json(a)}};
  const auto step = cn_tori::witness(a);
  ctx.report.result = io::to_json(step);
  ctx.report.exit_code = 0;
  std::ostringstream text;
  text << "i:      " << step.index_i << "\n"
       << "j:      " << step.index_j << "\n"
       << "before: " << to_string(step.before) << "\n"
       << "after:  " << to_string(step.after) << "\n"
       << "product: " << to_string(product(step.before)) << " -> "
       << to_string(product(step.after)) << "\n";
  emit(ctx.report, ctx.as_json, text.str(), out);
}

void cmd_reduce(CmdContext& ctx, const std::string& vec, std::ostream& out) {
  const RatVec a = parse_rat_vector(vec);
  ctx.report.inputs = json{{"a", io::to_json(a)}};
  const auto steps = cn_tori::greedy_reduce(a);
  const RatVec& final_vec = steps.empty() ? a : steps.back().after;
  json jsteps = json::array();
  for (const auto& s : steps) jsteps.push_back(io::to_json(s));
  ctx.report.result = json{{"steps", jsteps}, {"final", io::to_json(final_vec)}};
  ctx.report.exit_code = 0;
  std::ostringstream text;
  text << "steps: " << steps.size() << "\n";
  for (const auto& s : steps)
    text << "  " << to_string(s.before) << " -> " << to_string(s.after) << "\n";
  text << "final: " << to_string(final_vec) << "\n"
       << "product: " << to_string(product(a)) << " -> " << to_string(product(final_vec))
       << "\n";
  emit(ctx.report, ctx.as_json, text.str(), out);
}

void cmd_cpn_certify(CmdContext& ctx, const std::string& point, int n, int chart,
                     std::ostream& out) {
  const RatVec coords = parse_rat_vector(point);
  if (n > 0 && n != static_cast<int>(coords.size()))
    throw Error(Errc::dimension_mismatch,
                "--n " + std::to_string(n) + " but point has length " +
                    std::to_string(coords.size()));
  const cpn::ChartPoint p{chart, coords};
  ctx.report.inputs = json{{"chart", chart}, {"point", io::to_json(coords)}};
  const auto cert = cpn::certify(p);
  ctx.report.result = io::to_json(cert);
  ctx.report.exit_code = cert.verdict == cpn::Verdict::NotVolumeMinimizing ? 0 : 2;
  std::ostringstream text;
  text << "verdict: " << cpn::verdict_name(cert.verdict) << "\n";
  if (cert.verdict == cpn::Verdict::NotVolumeMinimizing) {
    text << "chart:      " << cert.chart << "\n"
         << "source:     " << to_string(cert.source) << "\n"
         << "target:     " << to_string(cert.target) << "\n"
         << "sqvol_drop: " << to_string(cert.sqvol_drop) << "\n";
  }
  emit(ctx.report, ctx.as_json, text.str(), out);
}

void cmd_cpn_density(CmdContext& ctx, int n, std::int64_t samples, std::uint64_t seed,
                     std::ostream& out) {
  ctx.report.inputs = json{{"n", n}, {"samples", samples}, {"seed", seed}};
  const auto res = cpn::dn_density(n, samples, seed, threads_from_env());
  ctx.report.result = json{{"n", n},
                           {"samples", res.samples},
                           {"seed", seed},
                           {"certified", res.certified},
                           {"fraction", res.fraction()}};
  ctx.report.exit_code = 0;
  std::ostringstream text;
  text << "n:         " << n << "\n"
       << "samples:   " << res.samples << "\n"
       << "seed:      " << seed << "\n"
       << "certified: " << res.certified << "\n"
       << "fraction:  " << res.fraction() << "\n";
  emit(ctx.report, ctx.as_json, text.str(), out);
}

void cmd_toric_s0(CmdContext& ctx, const std::string& path, std::ostream& out) {
  const auto P = load_polytope(path);
  ctx.report.inputs = json{{"polytope", io::to_json(P)}};
  const Rat s0 = P.s0();
  ctx.report.result = json{{"s0", to_string(s0)}};
  ctx.report.exit_code = 0;
  emit(ctx.report, ctx.as_json, "s0: " + to_string(s0) + "\n", out);
}

void cmd_toric_witness(CmdContext& ctx, const std::string& path, const std::string& point,
                       const std::string& delta0, std::ostream& out) {
  const auto P = load_polytope(path);
  const RatVec a = parse_rat_vector(point);
  const toric::VolumeModel model(parse_rat(delta0));
  ctx.report.inputs = json{{"polytope", io::to_json(P)},
                           {"point", io::to_json(a)},
                           {"delta0", to_string(model.delta0())}};

  const auto w = toric::toric_witness(P, a);
  const Rat s0 = P.s0();
  const Rat norm = chekanov::invariants(a).norm;

  json result{{"support_ok", w.support_ok},
              {"s0", to_string(s0)},
              {"norm", to_string(norm)},
              {"source", io::to_json(a)},
              {"target", io::to_json(w.after)},
              {"delta0", to_string(model.delta0())}};
  std::ostringstream text;
  const char* verdict = "Unknown";
  if (w.support_ok) {
    const Rat threshold = toric::c_threshold(P, model, a, w.after);
    const Rat drop =
        toric_orbit_sqvolume(P, model, a) - toric_orbit_sqvolume(P, model, w.after);
    if (drop > 0) verdict = cpn::verdict_name(cpn::Verdict::NotVolumeMinimizing);
    result["c_threshold"] = to_string(threshold);
    result["sqvol_drop"] = to_string(drop);
    result["details"] = io::to_json(w.step);
    text << "verdict: " << verdict << "\n"
         << "support_ok: true\n"
         << "s0:          " << to_string(s0) << "\n"
         << "norm:        " << to_string(norm) << "\n"
         << "target:      " << to_string(w.after) << "\n"
         << "sqvol_drop:  " << to_string(drop) << "\n"
         << "c_threshold: " << to_string(threshold) << "\n";
  } else {
    result["c_threshold"] = nullptr;
    result["sqvol_drop"] = nullptr;
    result["details"] = nullptr;
    text << "verdict: Unknown\n"
         << "support_ok: false (norm " << to_string(norm) << " >= s0 " << to_string(s0)
         << ")\n";
  }
  result["verdict"] = verdict;
  ctx.report.result = result;
  ctx.report.exit_code = std::string(verdict) == "Unknown" ? 2 : 0;
  emit(ctx.report, ctx.as_json, text.str(), out);
}

}  // namespace

Report run(const std::vector<std::string>& args, std::ostream& out) {
  CmdContext ctx;
  ctx.report.command = args.empty() ? "" : args.front();

  CLI::App app{"Decides Hamiltonian-isotopy equivalence of Lagrangian product tori,"
               " builds volume-reducing witness tori, and certifies torus orbits in"
               " projective space and general compact toric manifolds as not volume"
               " minimizing, all in exact rational arithmetic."};
  app.require_subcommand(1);

  std::string vec_arg, vec_arg2, point_arg, polytope_arg;
  std::string delta0_arg = "1";
  int n_arg = 0;
  int chart_arg = 0;
  std::int64_t samples_arg = 0;
  std::uint64_t seed_arg = 0;

  auto* inv_cmd = app.add_subcommand("invariants", "Isotopy invariants of a product torus");
  inv_cmd->add_option("vector", vec_arg, "moment vector, e.g. 1,2,2,4")->required();
  inv_cmd->add_flag("--json", ctx.as_json, "emit the report as JSON");

  auto* equiv_cmd = app.add_subcommand("equiv", "Decide Hamiltonian isotopy equivalence");
  equiv_cmd->add_option("a", vec_arg, "first moment vector")->required();
  equiv_cmd->add_option("b", vec_arg2, "second moment vector")->required();
  equiv_cmd->add_flag("--json", ctx.as_json, "emit the report as JSON");

  auto* wit_cmd = app.add_subcommand("witness", "One volume-reducing move in the class");
  wit_cmd->add_option("vector", vec_arg, "moment vector with >= 3 distinct entries")
      ->required();
  wit_cmd->add_flag("--json", ctx.as_json, "emit the report as JSON");

  auto* red_cmd = app.add_subcommand("reduce", "Greedy volume reduction inside the class");
  red_cmd->add_option("vector", vec_arg, "moment vector")->required();
  red_cmd->add_flag("--json", ctx.as_json, "emit the report as JSON");

  auto* cpn_cmd = app.add_subcommand("cpn", "Torus orbits in complex projective space");
  cpn_cmd->require_subcommand(1);
  auto* certify_cmd = cpn_cmd->add_subcommand("certify", "Certify one orbit");
  certify_cmd->add_option("--point", point_arg, "action coordinates, e.g. 1/10,1/5,2/5")
      ->required();
  certify_cmd->add_option("--n", n_arg, "dimension check (optional)");
  certify_cmd->add_option("--chart", chart_arg, "chart of the input coordinates")
      ->check(CLI::NonNegativeNumber);
  certify_cmd->add_flag("--json", ctx.as_json, "emit the report as JSON");

  auto* density_cmd = cpn_cmd->add_subcommand("density", "Certified fraction of random orbits");
  density_cmd->add_option("--n", n_arg, "dimension")->required();
  density_cmd->add_option("--samples", samples_arg, "number of samples")->required();
  density_cmd->add_option("--seed", seed_arg, "RNG seed");
  density_cmd->add_flag("--json", ctx.as_json, "emit the report as JSON");

  auto* toric_cmd = app.add_subcommand("toric", "General compact toric manifolds");
  toric_cmd->require_subcommand(1);
  auto* s0_cmd = toric_cmd->add_subcommand("s0", "Corner simplex radius of a polytope");
  s0_cmd->add_option("--polytope", polytope_arg, "polytope JSON file")->required();
  s0_cmd->add_flag("--json", ctx.as_json, "emit the report as JSON");

  auto* twit_cmd = toric_cmd->add_subcommand("witness", "Witness torus and c-threshold");
  twit_cmd->add_option("--polytope", polytope_arg, "polytope JSON file")->required();
  twit_cmd->add_option("--point", point_arg, "interior point, e.g. 1/10,1/5,2/5")->required();
  twit_cmd->add_option("--delta0", delta0_arg, "constant density factor (default 1)");
  twit_cmd->add_flag("--json", ctx.as_json, "emit the report as JSON");

  std::vector<const char*> argv;
  argv.push_back("hamvol");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (inv_cmd->parsed()) {
      ctx.report.command = "invariants";
      cmd_invariants(ctx, vec_arg, out);
    } else if (equiv_cmd->parsed()) {
      ctx.report.command = "equiv";
      cmd_equiv(ctx, vec_arg, vec_arg2, out);
    } else if (wit_cmd->parsed()) {
      ctx.report.command = "witness";
      cmd_witness(ctx, vec_arg, out);
    } else if (red_cmd->parsed()) {
      ctx.report.command = "reduce";
      cmd_reduce(ctx, vec_arg, out);
    } else if (certify_cmd->parsed()) {
      ctx.report.command = "cpn certify";
      cmd_cpn_certify(ctx, point_arg, n_arg, chart_arg, out);
    } else if (density_cmd->parsed()) {
      ctx.report.command = "cpn density";
      cmd_cpn_density(ctx, n_arg, samples_arg, seed_arg, out);
    } else if (s0_cmd->parsed()) {
      ctx.report.command = "toric s0";
      cmd_toric_s0(ctx, polytope_arg, out);
    } else if (twit_cmd->parsed()) {
      ctx.report.command = "toric witness";
      cmd_toric_witness(ctx, polytope_arg, point_arg, delta0_arg, out);
    }
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    ctx.report.exit_code = 0;
    ctx.report.result = json{{"help", true}};
  } catch (const CLI::ParseError& e) {
    out << "error: " << e.what() << "\n";
    ctx.report.exit_code = 1;
    ctx.report.result = json{{"error", e.what()}};
  } catch (const Error& e) {
    ctx.report.exit_code = e.kind() == Errc::not_applicable ? 2 : 1;
    ctx.report.result = json{{"error", e.what()}};
    if (ctx.as_json)
      emit(ctx.report, true, "", out);
    else
      out << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    ctx.report.exit_code = 1;
    ctx.report.result = json{{"error", e.what()}};
    out << "error: " << e.what() << "\n";
  }
  return ctx.report;
}

}  // namespace hamvol::cli
