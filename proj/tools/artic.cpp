// Command-line surface for the articulation estimation toolkit:
//   gen       synthesize an articulated object sequence
//   estimate  run the discrete search and/or the direct optimizer
//   eval      benchmark estimators over a suite directory
//   ablate    discrete-vs-direct comparison across a degradation grid
#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "artic/axis_search.hpp"
#include "artic/direct_opt.hpp"
#include "artic/manifest.hpp"
#include "artic/metrics.hpp"
#include "artic/overlay.hpp"
#include "artic/ply_io.hpp"
#include "artic/report_io.hpp"
#include "artic/synth.hpp"

namespace fs = std::filesystem;
using namespace artic;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitNumerical = 2;

struct GenArgs {
  std::string template_name = "door";
  int frames = 10;
  int points = 2048;
  double jitter = 0.0;
  double dropout = 0.0;
  double outliers = 0.0;
  double hinge_offset = 0.0;
  std::uint64_t seed = 0;
  std::string out_dir;
  bool ascii = false;
};

struct EstimateArgs {
  std::string manifest_path;
  std::string method = "algo";
  std::string kind = "auto";
  bool seed_from_algo = false;
  std::string config_path;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string overlay_path;
  std::string trace_path;
  bool timing = false;
};

struct EvalArgs {
  std::string suite_dir;
  std::string methods = "algo,direct";
  std::string csv_path;
  std::string json_path;
  std::string config_path;
  std::uint64_t seed = 0;
  bool timing = false;
};

struct AblateArgs {
  std::string noise_grid = "0,0.005,0.01,0.02";
  int seeds = 20;
  std::string out_dir;
  std::string template_name = "door";
  int points = 512;
  int frames = 6;
  double dropout = 0.5;
  double outliers = 0.05;
  std::string config_path;
  std::uint64_t seed = 0;
  bool timing = false;
};

OptimizerConfig load_optimizer_config(const std::string& path, std::uint64_t seed,
                                      bool seed_from_algo) {
  OptimizerConfig cfg;
  cfg.seed = seed;
  cfg.seed_from_algo = seed_from_algo;
  if (path.empty()) {
    return cfg;
  }
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("optimizer config: " + std::string(e.what()),
                     static_cast<std::size_t>(e.byte));
  }
  cfg.max_iters = j.value("max_iters", cfg.max_iters);
  cfg.step_size = j.value("step_size", cfg.step_size);
  cfg.restarts = j.value("restarts", cfg.restarts);
  cfg.fd_step = j.value("fd_step", cfg.fd_step);
  cfg.convergence_tol = j.value("convergence_tol", cfg.convergence_tol);
  return cfg;
}

Json optimizer_config_echo(const OptimizerConfig& cfg) {
  return Json{{"max_iters", cfg.max_iters},
              {"step_size", cfg.step_size},
              {"restarts", cfg.restarts},
              {"fd_step", cfg.fd_step},
              {"convergence_tol", cfg.convergence_tol},
              {"seed", cfg.seed},
              {"seed_from_algo", cfg.seed_from_algo}};
}

std::vector<MotionKind> kinds_from_string(const std::string& kind) {
  if (kind == "auto") {
    return {MotionKind::Revolute, MotionKind::Prismatic};
  }
  if (kind == "revolute") {
    return {MotionKind::Revolute};
  }
  if (kind == "prismatic") {
    return {MotionKind::Prismatic};
  }
  throw CLI::ValidationError("--kind", "expected auto|revolute|prismatic");
}

std::vector<Method> methods_from_string(const std::string& methods) {
  std::vector<Method> out;
  std::stringstream ss(methods);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token == "algo") {
      out.push_back(Method::Algo);
    } else if (token == "direct") {
      out.push_back(Method::Direct);
    } else if (!token.empty()) {
      throw CLI::ValidationError("--methods", "expected a comma list of algo|direct");
    }
  }
  return out;
}

std::string frame_file_name(std::size_t index) {
  std::ostringstream name;
  name << "frame_" << std::setfill('0') << std::setw(3) << index << ".ply";
  return name.str();
}

int run_gen(const GenArgs& args) {
  const TemplateName name = template_from_string(args.template_name);
  const ObjectTemplate tmpl = make_template(name, args.frames, args.hinge_offset);
  auto [seq, gt] = generate(tmpl, args.points, args.frames, args.seed);

  const bool degraded = args.jitter > 0.0 || args.dropout > 0.0 || args.outliers > 0.0;
  if (degraded) {
    DegradeConfig dc;
    dc.jitter_sigma = args.jitter;
    dc.dropout_rate = args.dropout;
    dc.outlier_rate = args.outliers;
    dc.seed = args.seed;
    seq = degrade(seq, dc);
  }

  fs::create_directories(args.out_dir);
  const PlyFormat format = args.ascii ? PlyFormat::Ascii : PlyFormat::BinaryLittleEndian;

  SequenceManifest manifest;
  manifest.object_name = args.template_name;
  manifest.diagonal = bbox_diagonal(seq.rest);
  manifest.template_params = Json{{"template", args.template_name},
                                  {"frames", args.frames},
                                  {"points", args.points},
                                  {"jitter", args.jitter},
                                  {"dropout", args.dropout},
                                  {"outliers", args.outliers},
                                  {"hinge_offset", args.hinge_offset},
                                  {"seed", args.seed}};
  manifest.rest_path = "rest.ply";
  write_cloud_ply((fs::path(args.out_dir) / "rest.ply").string(), seq.rest, format);
  for (std::size_t t = 0; t < seq.frames.size(); ++t) {
    const std::string file = frame_file_name(t);
    manifest.frame_paths.push_back(file);
    write_cloud_ply((fs::path(args.out_dir) / file).string(), seq.frames[t], format);
  }
  manifest.gt_axis = AxisRecord{gt, tmpl.gt_profile};

  write_text_file((fs::path(args.out_dir) / "gt_axis.json").string(),
                  axis_record_to_json(*manifest.gt_axis).dump(2) + "\n");
  write_text_file((fs::path(args.out_dir) / "manifest.json").string(),
                  manifest_to_json(manifest).dump(2) + "\n");

  std::cout << "wrote " << seq.frames.size() << " frames to " << args.out_dir << "\n";
  return 0;
}

int run_estimate(const EstimateArgs& args) {
  const SequenceManifest manifest = load_manifest(args.manifest_path);
  const ObservedSequence seq = load_sequence(manifest);

  const bool run_algo = args.method == "algo" || args.method == "both";
  const bool run_direct = args.method == "direct" || args.method == "both";
  if (!run_algo && !run_direct) {
    throw CLI::ValidationError("--method", "expected algo|direct|both");
  }

  SearchOptions search_opts;
  search_opts.kinds = kinds_from_string(args.kind);
  const OptimizerConfig opt_cfg =
      load_optimizer_config(args.config_path, args.seed, args.seed_from_algo);

  std::optional<EstimateReport> algo;
  std::optional<std::pair<Hypothesis, OptTrace>> direct;
  if (run_algo) {
    algo = search(seq, search_opts);
  }
  if (run_direct) {
    // Direct optimizes one kind; with --kind auto run each requested kind
    // and keep the lower-residual result.
    for (MotionKind kind : search_opts.kinds) {
      auto result = optimize(seq, kind, opt_cfg);
      if (!direct || result.first.residual < direct->first.residual) {
        direct = std::move(result);
      }
    }
  }

  Json config_echo{{"manifest", args.manifest_path},
                   {"method", args.method},
                   {"kind", args.kind},
                   {"seed", args.seed},
                   {"optimizer", optimizer_config_echo(opt_cfg)},
                   {"tie_tolerance", search_opts.tie_tolerance},
                   {"magnitude_grid_samples", kMagnitudeGridSamples},
                   {"magnitude_refine_width", kMagnitudeRefineWidth}};
  const Json report = estimate_report_json(algo, direct, config_echo, args.timing);
  if (!args.out_path.empty()) {
    write_text_file(args.out_path, report.dump(2) + "\n");
  } else {
    std::cout << report.dump(2) << "\n";
  }

  if (!args.overlay_path.empty()) {
    const Hypothesis& best =
        algo && (!direct || algo->best.residual <= direct->first.residual)
            ? algo->best
            : direct->first;
    std::optional<MotionAxis> gt;
    if (manifest.gt_axis) {
      gt = manifest.gt_axis->axis;
    }
    export_overlay(seq, best.axis, gt, args.overlay_path);
  }
  if (!args.trace_path.empty()) {
    if (!direct) {
      throw Error("--trace requires the direct method");
    }
    export_trace(direct->second, args.trace_path);
  }
  return 0;
}

std::vector<std::string> suite_object_dirs(const std::string& suite_dir) {
  if (!fs::is_directory(suite_dir)) {
    throw IoError("suite directory not found: " + suite_dir);
  }
  std::vector<std::string> dirs;
  if (fs::exists(fs::path(suite_dir) / "manifest.json")) {
    dirs.push_back(suite_dir);
    return dirs;
  }
  for (const auto& entry : fs::directory_iterator(suite_dir)) {
    if (entry.is_directory() && fs::exists(entry.path() / "manifest.json")) {
      dirs.push_back(entry.path().string());
    }
  }
  std::sort(dirs.begin(), dirs.end());
  if (dirs.empty()) {
    throw IoError("no manifests under suite directory: " + suite_dir);
  }
  return dirs;
}

int run_eval(const EvalArgs& args) {
  const std::vector<Method> methods = methods_from_string(args.methods);
  const OptimizerConfig opt_cfg = load_optimizer_config(args.config_path, args.seed, false);

  std::vector<BenchmarkCase> suite;
  for (const std::string& dir : suite_object_dirs(args.suite_dir)) {
    const SequenceManifest manifest =
        load_manifest((fs::path(dir) / "manifest.json").string());
    if (!manifest.gt_axis) {
      throw Error("eval requires a ground-truth axis; none in " + dir);
    }
    BenchmarkCase item;
    item.id = fs::path(dir).filename().string();
    item.seq = load_sequence(manifest);
    item.gt = manifest.gt_axis->axis;
    suite.push_back(std::move(item));
  }

  BenchmarkConfig cfg;
  cfg.opt = opt_cfg;
  const BenchmarkResult result = run_benchmark(suite, methods, cfg);

  Json config_echo{{"suite", args.suite_dir},
                   {"methods", args.methods},
                   {"seed", args.seed},
                   {"optimizer", optimizer_config_echo(opt_cfg)}};
  if (!args.csv_path.empty()) {
    write_text_file(args.csv_path, benchmark_to_csv(result, args.timing));
  }
  if (!args.json_path.empty()) {
    write_text_file(args.json_path,
                    benchmark_to_json(result, config_echo, args.timing).dump(2) + "\n");
  }

  for (const auto& [method, agg] : result.aggregates) {
    std::cout << to_string(method) << ": mean MAE " << agg.mean_mae_deg
              << " deg, mean MPE " << agg.mean_mpe << " (line " << agg.mean_mpe_line
              << "), " << agg.count << " rows, " << agg.failures << " failures\n";
  }
  return 0;
}

int run_ablate(const AblateArgs& args) {
  std::vector<double> levels;
  {
    std::stringstream ss(args.noise_grid);
    std::string token;
    while (std::getline(ss, token, ',')) {
      if (!token.empty()) {
        levels.push_back(std::stod(token));
      }
    }
  }
  if (levels.empty()) {
    throw CLI::ValidationError("--noise-grid", "expected a comma list of numbers");
  }
  if (args.seeds < 1) {
    throw CLI::ValidationError("--seeds", "must be >= 1");
  }

  const TemplateName name = template_from_string(args.template_name);
  const OptimizerConfig opt_cfg = load_optimizer_config(args.config_path, args.seed, false);

  // One base object per seed, shared across noise levels so the comparison
  // is paired.
  std::vector<std::pair<ObservedSequence, MotionAxis>> bases;
  bases.reserve(args.seeds);
  const ObjectTemplate tmpl = make_template(name, args.frames);
  for (int s = 0; s < args.seeds; ++s) {
    bases.push_back(generate(tmpl, args.points, args.frames, args.seed + s));
  }

  BenchmarkResult all;
  Json per_level = Json::array();
  for (std::size_t li = 0; li < levels.size(); ++li) {
    std::vector<BenchmarkCase> suite;
    for (int s = 0; s < args.seeds; ++s) {
      DegradeConfig dc;
      dc.jitter_sigma = levels[li];
      dc.dropout_rate = args.dropout;
      dc.outlier_rate = args.outliers;
      dc.seed = args.seed + 1000 * (li + 1) + s;
      BenchmarkCase item;
      std::ostringstream id;
      id << args.template_name << "_j" << levels[li] << "_s" << std::setfill('0')
         << std::setw(3) << s;
      item.id = id.str();
      item.seq = degrade(bases[s].first, dc);
      item.gt = bases[s].second;
      suite.push_back(std::move(item));
    }

    BenchmarkConfig cfg;
    cfg.opt = opt_cfg;
    cfg.opt.seed = args.seed + 7919 * (li + 1);
    const BenchmarkResult result =
        run_benchmark(suite, {Method::Algo, Method::Direct}, cfg);
    for (const auto& row : result.rows) {
      all.rows.push_back(row);
    }

    Json level_json{{"jitter", levels[li]}};
    for (const auto& [method, agg] : result.aggregates) {
      level_json[to_string(method)] = {{"mean_mae_deg", agg.mean_mae_deg},
                                       {"mean_mpe", agg.mean_mpe},
                                       {"mean_mpe_line", agg.mean_mpe_line},
                                       {"failures", agg.failures}};
    }
    per_level.push_back(std::move(level_json));
    std::cout << "jitter " << levels[li] << ": algo MAE "
              << result.aggregates.at(Method::Algo).mean_mae_deg << " deg, direct MAE "
              << result.aggregates.at(Method::Direct).mean_mae_deg << " deg\n";
  }

  // Overall means across the whole grid.
  std::map<Method, Aggregate> overall;
  std::map<Method, int> counts;
  for (const auto& row : all.rows) {
    if (!row.ok) {
      ++overall[row.method].failures;
      continue;
    }
    Aggregate& agg = overall[row.method];
    agg.mean_mae_deg += row.mae_deg;
    agg.mean_mpe += std::isnan(row.mpe) ? 0.0 : row.mpe;
    agg.mean_mpe_line += std::isnan(row.mpe_line) ? 0.0 : row.mpe_line;
    ++agg.count;
    ++counts[row.method];
  }
  for (auto& [method, agg] : overall) {
    if (agg.count > 0) {
      agg.mean_mae_deg /= agg.count;
      agg.mean_mpe /= agg.count;
      agg.mean_mpe_line /= agg.count;
    }
  }

  const bool mae_ordered = overall[Method::Algo].mean_mae_deg <=
                           overall[Method::Direct].mean_mae_deg;
  const bool mpe_ordered = overall[Method::Algo].mean_mpe <=
                           overall[Method::Direct].mean_mpe;

  fs::create_directories(args.out_dir);
  all.aggregates = overall;
  write_text_file((fs::path(args.out_dir) / "ablate_rows.csv").string(),
                  benchmark_to_csv(all, args.timing));

  Json summary{{"format_version", kFormatVersion},
               {"config",
                Json{{"template", args.template_name},
                     {"noise_grid", levels},
                     {"seeds", args.seeds},
                     {"points", args.points},
                     {"frames", args.frames},
                     {"dropout", args.dropout},
                     {"outliers", args.outliers},
                     {"seed", args.seed},
                     {"optimizer", optimizer_config_echo(opt_cfg)}}},
               {"conventions",
                Json{{"chamfer", kChamferConvention}, {"mae", kMaeConvention}}},
               {"per_level", per_level},
               {"overall",
                Json{{"algo_mean_mae_deg", overall[Method::Algo].mean_mae_deg},
                     {"direct_mean_mae_deg", overall[Method::Direct].mean_mae_deg},
                     {"algo_mean_mpe", overall[Method::Algo].mean_mpe},
                     {"direct_mean_mpe", overall[Method::Direct].mean_mpe}}},
               {"algo_mae_le_direct", mae_ordered},
               {"algo_mpe_le_direct", mpe_ordered}};
  write_text_file((fs::path(args.out_dir) / "ablate_summary.json").string(),
                  summary.dump(2) + "\n");

  std::cout << "overall: algo MAE " << overall[Method::Algo].mean_mae_deg
            << " deg vs direct " << overall[Method::Direct].mean_mae_deg
            << " deg; ordering " << (mae_ordered ? "holds" : "VIOLATED") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"articulation axis estimation toolkit"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a synthetic articulated sequence");
  gen->add_option("--template", gen_args.template_name,
                  "door|drawer|lid|laptop|trashcan_lid");
  gen->add_option("--frames", gen_args.frames, "frame count")->check(CLI::PositiveNumber);
  gen->add_option("--points", gen_args.points, "points per part")
      ->check(CLI::PositiveNumber);
  gen->add_option("--jitter", gen_args.jitter, "jitter sigma, fraction of diagonal");
  gen->add_option("--dropout", gen_args.dropout, "dropout rate in [0,1)");
  gen->add_option("--outliers", gen_args.outliers, "outlier rate in [0,1)");
  gen->add_option("--hinge-offset", gen_args.hinge_offset,
                  "hinge offset, fraction of panel size in [0,0.1]");
  gen->add_option("--seed", gen_args.seed, "root RNG seed");
  gen->add_option("--out", gen_args.out_dir, "output directory")->required();
  gen->add_flag("--ascii", gen_args.ascii, "write ASCII PLY instead of binary");

  EstimateArgs est_args;
  auto* est = app.add_subcommand("estimate", "estimate the motion axis of a sequence");
  est->add_option("manifest", est_args.manifest_path, "manifest.json path")->required();
  est->add_option("--method", est_args.method, "algo|direct|both");
  est->add_option("--kind", est_args.kind, "auto|revolute|prismatic");
  est->add_flag("--seed-from-algo", est_args.seed_from_algo,
                "seed one direct restart from the discrete search result");
  est->add_option("--config", est_args.config_path, "optimizer config JSON");
  est->add_option("--seed", est_args.seed, "root RNG seed");
  est->add_option("--out", est_args.out_path, "report JSON path");
  est->add_option("--overlay", est_args.overlay_path, "write a colored overlay PLY");
  est->add_option("--trace", est_args.trace_path, "write the descent trace CSV");
  est->add_flag("--timing", est_args.timing,
                "include wall-clock timings (breaks byte reproducibility)");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "benchmark estimators over a suite");
  eval->add_option("--suite", eval_args.suite_dir, "suite directory")->required();
  eval->add_option("--methods", eval_args.methods, "comma list of algo|direct");
  eval->add_option("--csv", eval_args.csv_path, "metric rows CSV path");
  eval->add_option("--json", eval_args.json_path, "metric report JSON path");
  eval->add_option("--config", eval_args.config_path, "optimizer config JSON");
  eval->add_option("--seed", eval_args.seed, "root RNG seed");
  eval->add_flag("--timing", eval_args.timing,
                 "include wall-clock timings (breaks byte reproducibility)");

  AblateArgs abl_args;
  auto* abl = app.add_subcommand("ablate", "discrete vs direct across noise levels");
  abl->add_option("--noise-grid", abl_args.noise_grid, "comma list of jitter sigmas");
  abl->add_option("--seeds", abl_args.seeds, "seeds per noise level");
  abl->add_option("--out", abl_args.out_dir, "output directory")->required();
  abl->add_option("--template", abl_args.template_name, "object template");
  abl->add_option("--points", abl_args.points, "points per part");
  abl->add_option("--frames", abl_args.frames, "frame count");
  abl->add_option("--dropout", abl_args.dropout, "dropout rate");
  abl->add_option("--outliers", abl_args.outliers, "outlier rate");
  abl->add_option("--config", abl_args.config_path, "optimizer config JSON");
  abl->add_option("--seed", abl_args.seed, "root RNG seed");
  abl->add_flag("--timing", abl_args.timing, "include wall-clock timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      return run_gen(gen_args);
    }
    if (est->parsed()) {
      return run_estimate(est_args);
    }
    if (eval->parsed()) {
      return run_eval(eval_args);
    }
    if (abl->parsed()) {
      return run_ablate(abl_args);
    }
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << " (iteration " << e.iteration
              << ")\n";
    return kExitNumerical;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
