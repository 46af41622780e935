#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>

#include "hyperorbit/explog.hpp"
#include "hyperorbit/pipeline.hpp"

using namespace hyperorbit;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitInconclusive = 3;

struct GlobalOpts {
  long prec = 192;
  std::string backend = "auto";
  long max_relation_norm = 1000000;
  bool include_first_block = false;
  unsigned seed = 12345;
  std::string csv_out;

  RunConfig run_config() const {
    RunConfig cfg;
    cfg.prec = prec;
    cfg.backend = backend;
    cfg.max_relation_norm = max_relation_norm;
    cfg.include_first_block = include_first_block;
    cfg.seed = seed;
    return cfg;
  }
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int exit_code_for(const HypercyclicityReport& rep) {
  switch (rep.verdict) {
    case Hypercyclicity::ValidationFailed:
      return kExitValidation;
    case Hypercyclicity::Inconclusive:
      return kExitInconclusive;
    default:
      return kExitOk;
  }
}

json input_error_to_json(const InputError& e) {
  json errs = json::array();
  for (const auto& v : e.violations) errs.push_back(json{{"where", v.where}, {"what", v.message}});
  return json{{"status", "PARSE_ERROR"}, {"errors", errs}};
}

json complex_hex(const BigComplex& z) {
  return json::array({z.re.to_hex_string(), z.im.to_hex_string()});
}

json matrix_hex(const Matrix<BigComplex>& m) {
  json out = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(complex_hex(m(i, j)));
    out.push_back(row);
  }
  return out;
}

int cmd_validate(const std::string& path, const GlobalOpts& g) {
  PresentationSource src = load_presentation_file(path);
  auto rep = validate_presentation(src.realize_numeric(g.prec));
  emit(validation_to_json(rep));
  return rep.ok ? kExitOk : kExitValidation;
}

int cmd_normalize(const std::string& path, const GlobalOpts& g) {
  PresentationSource src = load_presentation_file(path);
  auto numeric = src.realize_numeric(g.prec);
  auto vrep = validate_presentation(numeric);
  if (!vrep.ok) {
    emit(validation_to_json(vrep));
    return kExitValidation;
  }
  NfOptions opts;
  opts.prec = g.prec;
  opts.seed = g.seed;
  NormalForm nf = affine_normal_form(numeric, opts);
  json w0 = json::array();
  for (const auto& z : nf.w0) w0.push_back(complex_hex(z));
  emit(json{{"P", matrix_hex(nf.P)},
            {"eta", nf.eta.sizes()},
            {"r", nf.r},
            {"case", nf.case_tag},
            {"w0", w0},
            {"residual", double_to_hex(nf.residual.to_double())}});
  return kExitOk;
}

int cmd_logs(const std::string& path, const GlobalOpts& g) {
  PresentationSource src = load_presentation_file(path);
  auto numeric = src.realize_numeric(g.prec);
  auto vrep = validate_presentation(numeric);
  if (!vrep.ok) {
    emit(validation_to_json(vrep));
    return kExitValidation;
  }
  NfOptions opts;
  opts.prec = g.prec;
  opts.seed = g.seed;
  NormalForm nf = affine_normal_form(numeric, opts);
  auto logs = compute_log_generators(nf, numeric, opts);
  json out = json::array();
  for (const auto& lg : logs) {
    json t = json::array();
    for (const auto& z : lg.map.translation) t.push_back(complex_hex(z));
    out.push_back(json{{"k", lg.source_index + 1},
                       {"B", matrix_hex(lg.map.linear)},
                       {"b", t},
                       {"branch_shifts", lg.branch_shifts},
                       {"residual", double_to_hex(lg.residual.to_double())}});
  }
  emit(out);
  return kExitOk;
}

int cmd_density(const std::string& path, const GlobalOpts& g) {
  PresentationSource src = load_presentation_file(path);
  HypercyclicityReport rep = decide_hypercyclic(src, g.run_config());
  json j = verdict_to_json(rep.density);
  if (rep.m >= 0) j["m"] = rep.m;
  j["witness_w0"] = rep.witness_w0;
  if (rep.stage_error)
    j["error"] = json{{"stage", rep.stage_error->first}, {"message", rep.stage_error->second}};
  j["config"] = run_config_to_json(rep.config);
  emit(j);
  return exit_code_for(rep);
}

int cmd_check(const std::vector<std::string>& paths, const GlobalOpts& g) {
  if (paths.size() == 1) {
    PresentationSource src = load_presentation_file(paths[0]);
    HypercyclicityReport rep = decide_hypercyclic(src, g.run_config());
    emit(report_to_json(rep));
    return exit_code_for(rep);
  }
  // batch mode: per-file isolation, evaluated concurrently
  std::vector<std::future<std::pair<json, int>>> futs;
  for (const auto& p : paths) {
    futs.push_back(std::async(std::launch::async, [p, &g]() -> std::pair<json, int> {
      try {
        PresentationSource src = load_presentation_file(p);
        HypercyclicityReport rep = decide_hypercyclic(src, g.run_config());
        json j = report_to_json(rep);
        j["file"] = p;
        return {j, exit_code_for(rep)};
      } catch (const InputError& e) {
        json j = input_error_to_json(e);
        j["file"] = p;
        return {j, kExitValidation};
      }
    }));
  }
  json out = json::array();
  int code = kExitOk;
  for (auto& f : futs) {
    auto [j, c] = f.get();
    out.push_back(j);
    code = std::max(code, c);
  }
  emit(out);
  return code;
}

int cmd_orbit(const std::string& path, const GlobalOpts& g, const std::string& point_lit,
              long exponent_bound, double epsilon, long long budget,
              const std::vector<double>& box_flat, const std::string& histogram_out) {
  PresentationSource src = load_presentation_file(path);
  auto numeric = src.realize_numeric(g.prec);
  auto vrep = validate_presentation(numeric);
  if (!vrep.ok) {
    emit(validation_to_json(vrep));
    return kExitValidation;
  }

  std::vector<BigComplex> x;
  if (point_lit.empty()) {
    NfOptions opts;
    opts.prec = g.prec;
    opts.seed = g.seed;
    x = affine_normal_form(numeric, opts).w0;
  } else {
    std::string rest = point_lit;
    while (!rest.empty()) {
      auto pos = rest.find(';');
      x.push_back(ScalarExpr::parse(rest.substr(0, pos)).to_numeric(g.prec));
      rest = pos == std::string::npos ? "" : rest.substr(pos + 1);
    }
    if (static_cast<int>(x.size()) != src.n)
      throw InputError({{"--point", "expected " + std::to_string(src.n) + " coordinates"}});
  }

  CoverageConfig cfg;
  cfg.epsilon = epsilon;
  cfg.exponent_bound = exponent_bound;
  cfg.sample_budget = budget;
  cfg.seed = g.seed;
  if (box_flat.empty()) {
    cfg.box.assign(2 * src.n, {-1.0, 1.0});
  } else {
    if (box_flat.size() != static_cast<size_t>(4 * src.n))
      throw InputError({{"--box", "expected " + std::to_string(4 * src.n) + " numbers"}});
    for (int c = 0; c < 2 * src.n; ++c) cfg.box.push_back({box_flat[2 * c], box_flat[2 * c + 1]});
  }

  json cfg_json{{"epsilon", epsilon},
                {"exponent_bound", exponent_bound},
                {"budget", budget},
                {"seed", g.seed}};
  if (!g.csv_out.empty() || !histogram_out.empty()) {
    OrbitCloud cloud = sample_orbit(numeric, x, cfg);
    if (!g.csv_out.empty()) {
      std::ofstream os(g.csv_out);
      write_orbit_csv(os, cloud);
    }
    if (!histogram_out.empty()) {
      std::ofstream hs(histogram_out);
      write_cell_histogram_csv(hs, cloud, cfg);
    }
    emit(json{{"points", cloud.points.size()},
              {"overflow_dropped", cloud.overflow_dropped},
              {"coverage", double_to_hex(coverage(cloud, cfg))},
              {"csv", g.csv_out},
              {"config", cfg_json}});
  } else {
    CoverageResult res = orbit_coverage(numeric, x, cfg);
    emit(json{{"coverage", double_to_hex(res.fraction)},
              {"covered_cells", res.covered_cells},
              {"points_in_box", res.points_in_box},
              {"words_evaluated", res.words_evaluated},
              {"overflow_dropped", res.overflow_dropped},
              {"config", cfg_json}});
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperorbit: hypercyclicity decisions for finitely generated abelian affine groups"};
  app.require_subcommand(1);

  GlobalOpts g;
  if (const char* env = std::getenv("HYPERORBIT_PREC")) g.prec = std::atol(env);
  app.add_option("--prec", g.prec, "working precision in bits")->capture_default_str();
  app.add_option("--backend", g.backend, "auto | exact | numeric")->capture_default_str();
  app.add_option("--max-relation-norm", g.max_relation_norm,
                 "largest |s_j| searched for integer relations")
      ->capture_default_str();
  app.add_flag("--include-first-block", g.include_first_block,
               "add the k=1 lattice column to the density instance");
  app.add_option("--seed", g.seed, "seed for randomized searches")->capture_default_str();
  app.add_option("--csv-out", g.csv_out, "write orbit samples to this CSV file");

  std::string path;
  std::vector<std::string> paths;

  auto* validate = app.add_subcommand("validate", "check invertibility/commutativity/log pairing");
  validate->add_option("input", path)->required();

  auto* normalize = app.add_subcommand("normalize", "compute P, eta, r, w0");
  normalize->add_option("input", path)->required();

  auto* logs = app.add_subcommand("logs", "compute log generators");
  logs->add_option("input", path)->required();

  auto* density = app.add_subcommand("density", "decide density of the additive module");
  density->add_option("input", path)->required();

  auto* check = app.add_subcommand("check", "full hypercyclicity decision");
  check->add_option("inputs", paths)->required()->expected(-1);

  std::string point;
  std::string histogram_out;
  long nbound = 20;
  double epsilon = 0.1;
  long long budget = 100000;
  std::vector<double> box_flat;
  auto* orbit = app.add_subcommand("orbit", "sample orbit points and measure coverage");
  orbit->add_option("input", path)->required();
  orbit->add_option("--point", point, "start point, ';'-separated scalar literals (default w0)");
  orbit->add_option("--exponent-bound", nbound, "word exponent bound N")->capture_default_str();
  orbit->add_option("--epsilon", epsilon, "grid resolution (fraction of each axis)")
      ->capture_default_str();
  orbit->add_option("--budget", budget, "sample budget")->capture_default_str();
  orbit->add_option("--box", box_flat, "box bounds lo hi per R^{2n} coordinate");
  orbit->add_option("--histogram-out", histogram_out, "write a per-cell histogram CSV here");

  auto* example = app.add_subcommand("example", "print the built-in worked example");

  CLI11_PARSE(app, argc, argv);

  try {
    if (example->parsed()) {
      emit(presentation_to_json(builtin_example()));
      return kExitOk;
    }
    if (validate->parsed()) return cmd_validate(path, g);
    if (normalize->parsed()) return cmd_normalize(path, g);
    if (logs->parsed()) return cmd_logs(path, g);
    if (density->parsed()) return cmd_density(path, g);
    if (check->parsed()) return cmd_check(paths, g);
    if (orbit->parsed())
      return cmd_orbit(path, g, point, nbound, epsilon, budget, box_flat, histogram_out);
  } catch (const InputError& e) {
    emit(input_error_to_json(e));
    return kExitValidation;
  } catch (const std::exception& e) {
    emit(json{{"status", "ERROR"}, {"message", e.what()}});
    return 1;
  }
  return kExitOk;
}
