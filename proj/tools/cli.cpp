#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "xscale/xscale.hpp"

namespace xscale::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct ConfigFlags {
  int scale = 2;
  int search_scale = 0;  // 0: scale itself, or 2 when scale is 4
  int k = 5;
  int patch_size = 3;
  int window = 30;
  int stride = 1;
  double bandwidth = 10.0;
  std::string weighting = "gaussian";
  std::string adapn = "on";
  std::string boundary = "reflect";
  bool luma_embedding = false;
  int threads = 0;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& f) {
  cmd->add_option("--scale", f.scale, "Total up-scaling factor")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--search-scale", f.search_scale,
                  "Downsampling ratio of the neighbor search; the pipeline "
                  "runs log_{search}(scale) chained stages");
  cmd->add_option("--k", f.k, "Neighbors per query patch");
  cmd->add_option("--d", f.window, "Search window side in the downsampled image");
  cmd->add_option("--l", f.patch_size, "Query patch side");
  cmd->add_option("--stride", f.stride, "Query grid stride");
  cmd->add_option("--bandwidth", f.bandwidth, "Gaussian edge-weight bandwidth");
  cmd->add_option("--weighting", f.weighting, "average | gaussian")
      ->check(CLI::IsMember({"average", "gaussian"}));
  cmd->add_option("--adapn", f.adapn, "Adaptive patch normalization on | off")
      ->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--boundary", f.boundary, "clamp | reflect")
      ->check(CLI::IsMember({"clamp", "reflect"}));
  cmd->add_flag("--luma-embedding", f.luma_embedding,
                "Match patches on luma instead of RGB");
  cmd->add_option("--threads", f.threads, "Worker threads (0 = all cores)");
}

// Resolved pipeline: cfg.scale is the per-stage search scale.
struct Pipeline {
  AggregationConfig cfg;
  int total_scale = 2;
};

Pipeline resolve(const ConfigFlags& f) {
  Pipeline p;
  p.total_scale = f.scale;
  p.cfg.scale = f.search_scale > 0 ? f.search_scale
                                   : (f.scale == 4 ? 2 : f.scale);
  p.cfg.k = f.k;
  p.cfg.patch_size = f.patch_size;
  p.cfg.window = f.window;
  p.cfg.stride = f.stride;
  p.cfg.bandwidth = f.bandwidth;
  p.cfg.weighting = parse_weighting(f.weighting);
  p.cfg.adapn = f.adapn == "on";
  p.cfg.boundary = parse_boundary(f.boundary);
  p.cfg.luma_embedding = f.luma_embedding;
  p.cfg.threads = f.threads;
  p.cfg.validate();
  return p;
}

json config_json(const Pipeline& p) {
  const AggregationConfig& c = p.cfg;
  return json{{"scale", p.total_scale},
              {"search_scale", c.scale},
              {"k", c.k},
              {"l", c.patch_size},
              {"d", c.window},
              {"stride", c.stride},
              {"bandwidth", c.bandwidth},
              {"weighting", to_string(c.weighting)},
              {"adapn", c.adapn},
              {"adapn_eps", c.adapn_eps},
              {"boundary", to_string(c.boundary)},
              {"luma_embedding", c.luma_embedding},
              {"threads", c.threads}};
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
}

fs::path manifest_path(const fs::path& output) {
  return fs::path(output.string() + ".manifest.json");
}

std::string format_psnr(double psnr) {
  if (std::isinf(psnr)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", psnr);
  return buf;
}

std::string format_ssim(double ssim) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", ssim);
  return buf;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kConfig:
      return kUsage;
    case ErrorKind::kIo:
    case ErrorKind::kUnsupportedFormat:
    case ErrorKind::kCorruptFile:
      return kIoError;
    default:
      return kPipeline;
  }
}

// --- sr -------------------------------------------------------------------

struct SrArgs {
  std::string input;
  std::string output;
  std::string graph_dump;
  ConfigFlags flags;
};

int cmd_sr(const SrArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const Pipeline p = resolve(a.flags);
  const Image lr = load_image(a.input);
  if (!a.graph_dump.empty()) {
    const Image down = bicubic_resample(lr, 1.0 / p.cfg.scale, p.cfg.boundary);
    write_text(a.graph_dump, format_graph(build_graph(lr, down, p.cfg)));
  }
  const Image sr = super_resolve_chained(lr, p.total_scale, p.cfg);
  save_image(sr, a.output);

  json manifest{{"command", "sr"},
                {"config", config_json(p)},
                {"inputs", {a.input}},
                {"outputs", {a.output}},
                {"seed", nullptr},
                {"wall_time_s", seconds_since(start)}};
  write_text(manifest_path(a.output), manifest.dump(2) + "\n");
  out << "wrote " << a.output << " (" << sr.width() << "x" << sr.height()
      << ")\n";
  return kOk;
}

// --- eval -----------------------------------------------------------------

struct EvalArgs {
  std::string result;
  std::string truth;
  int crop = -1;
  int scale = 2;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const Image result = load_image(a.result);
  const Image truth = load_image(a.truth);
  const int crop = a.crop >= 0 ? a.crop : a.scale;
  out << evaluate(result, truth, crop).to_json() << "\n";
  return kOk;
}

// --- ablate ---------------------------------------------------------------

struct AblateArgs {
  std::string input;
  std::string truth;
  std::string axis;
  std::vector<std::string> values;
  std::string table_out;
  int crop = -1;
  ConfigFlags flags;
};

std::vector<std::string> default_values(const std::string& axis) {
  if (axis == "k") return {"1", "3", "5", "7", "9", "11"};
  if (axis == "d") return {"10", "20", "30", "whole"};
  if (axis == "weighting") return {"average", "gaussian"};
  if (axis == "adapn") return {"off", "on"};
  if (axis == "baseline") return {"bicubic", "same-scale-knn", "cross-scale"};
  throw Error(ErrorKind::kConfig, "unknown ablation axis '" + axis +
                                      "' (k, d, weighting, adapn, baseline)");
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::kConfig, "bad " + what + " value '" + text + "'");
}

int cmd_ablate(const AblateArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const Pipeline base = resolve(a.flags);
  const auto values = a.values.empty() ? default_values(a.axis) : a.values;
  default_values(a.axis);  // rejects unknown axes even with explicit values

  const Image lr = load_image(a.input);
  const Image truth = load_image(a.truth);
  const int s = base.total_scale;
  if (truth.width() != lr.width() * s || truth.height() != lr.height() * s) {
    throw Error(ErrorKind::kDimensionMismatch,
                "ground truth is not " + std::to_string(s) + "x the input");
  }
  const int crop = a.crop >= 0 ? a.crop : s;

  std::ostringstream table;
  table << "axis\tvalue\tpsnr_db\tssim\tcrop_border\n";
  json rows = json::array();
  for (const std::string& value : values) {
    Pipeline p = base;
    Image result;
    if (a.axis == "k") {
      p.cfg.k = parse_int(value, "k");
    } else if (a.axis == "d") {
      p.cfg.window = value == "whole"
                         ? 2 * std::max(lr.width(), lr.height())
                         : parse_int(value, "d");
    } else if (a.axis == "weighting") {
      p.cfg.weighting = parse_weighting(value);
    } else if (a.axis == "adapn") {
      if (value != "on" && value != "off") {
        throw Error(ErrorKind::kConfig, "adapn values are on | off");
      }
      p.cfg.adapn = value == "on";
    } else if (a.axis == "baseline") {
      if (value == "bicubic") {
        result = bicubic_baseline(lr, s, p.cfg.boundary);
      } else if (value == "same-scale-knn") {
        result = bicubic_baseline(same_scale_knn(lr, p.cfg), s, p.cfg.boundary);
      } else if (value != "cross-scale") {
        throw Error(ErrorKind::kConfig,
                    "baseline values are bicubic | same-scale-knn | cross-scale");
      }
    }
    p.cfg.validate();
    if (result.empty()) result = super_resolve_chained(lr, s, p.cfg);
    const QualityReport report = evaluate(result, truth, crop);
    table << a.axis << '\t' << value << '\t' << format_psnr(report.psnr_db)
          << '\t' << format_ssim(report.ssim) << '\t' << crop << '\n';
    rows.push_back(json{{"value", value},
                        {"config", config_json(p)},
                        {"report", json::parse(report.to_json())}});
  }

  out << table.str();
  if (!a.table_out.empty()) {
    write_text(a.table_out, table.str());
    json manifest{{"command", "ablate"},
                  {"axis", a.axis},
                  {"config", config_json(base)},
                  {"inputs", {a.input, a.truth}},
                  {"outputs", {a.table_out}},
                  {"seed", nullptr},
                  {"rows", rows},
                  {"wall_time_s", seconds_since(start)}};
    write_text(manifest_path(a.table_out), manifest.dump(2) + "\n");
  }
  return kOk;
}

// --- gen ------------------------------------------------------------------

struct GenArgs {
  std::uint64_t seed = 1;
  int size = 256;
  int scale = 2;
  std::string scheme = "tiled-multiscale";
  std::string hr_out;
  std::string lr_out;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  SyntheticPair pair;
  try {
    pair = generate_synthetic(a.seed, a.size, a.scale, parse_scheme(a.scheme));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kInvalidDimension) throw;
    err << "error: invalid size: " << e.what() << "\n";
    return kUsage;
  }
  save_image(pair.hr, a.hr_out);
  save_image(pair.lr, a.lr_out);
  json manifest{{"command", "gen"},
                {"scheme", a.scheme},
                {"size", a.size},
                {"scale", a.scale},
                {"inputs", json::array()},
                {"outputs", {a.hr_out, a.lr_out}},
                {"seed", a.seed},
                {"wall_time_s", seconds_since(start)}};
  write_text(manifest_path(a.hr_out), manifest.dump(2) + "\n");
  out << "wrote " << a.hr_out << " and " << a.lr_out << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Cross-scale patch-recurrence super-resolution", "xsr"};
  app.require_subcommand(1);

  SrArgs sr;
  auto* sr_cmd = app.add_subcommand("sr", "Super-resolve an image");
  sr_cmd->add_option("input", sr.input, "LR input image")->required();
  sr_cmd->add_option("output", sr.output, "SR output image")->required();
  sr_cmd->add_option("--dump-graph", sr.graph_dump,
                     "Write the first-stage neighbor graph as text");
  add_config_flags(sr_cmd, sr.flags);

  EvalArgs ev;
  auto* eval_cmd = app.add_subcommand("eval", "Y-channel PSNR/SSIM of a result");
  eval_cmd->add_option("result", ev.result, "Result image")->required();
  eval_cmd->add_option("truth", ev.truth, "Ground-truth image")->required();
  eval_cmd->add_option("--crop", ev.crop, "Border crop (default: --scale)");
  eval_cmd->add_option("--scale", ev.scale, "Scale used for the default crop");

  AblateArgs ab;
  auto* ablate_cmd =
      app.add_subcommand("ablate", "Sweep one pipeline setting against truth");
  ablate_cmd->add_option("input", ab.input, "LR input image")->required();
  ablate_cmd->add_option("truth", ab.truth, "HR ground truth")->required();
  ablate_cmd->add_option("--axis", ab.axis, "k | d | weighting | adapn | baseline")
      ->required();
  ablate_cmd->add_option("--values", ab.values, "Comma-separated sweep values")
      ->delimiter(',');
  ablate_cmd->add_option("--out", ab.table_out,
                         "Also write the table (and a manifest) here");
  ablate_cmd->add_option("--crop", ab.crop, "Border crop (default: --scale)");
  add_config_flags(ablate_cmd, ab.flags);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic HR/LR pair");
  gen_cmd->add_option("--seed", gen.seed, "Texture seed");
  gen_cmd->add_option("--size", gen.size, "HR side in pixels");
  gen_cmd->add_option("--scale", gen.scale, "LR = HR / scale");
  gen_cmd->add_option("--scheme", gen.scheme, "tiled-multiscale");
  gen_cmd->add_option("--hr", gen.hr_out, "HR output path")->required();
  gen_cmd->add_option("--lr", gen.lr_out, "LR output path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sr_cmd) return cmd_sr(sr, out);
    if (*eval_cmd) return cmd_eval(ev, out);
    if (*ablate_cmd) return cmd_ablate(ab, out);
    if (*gen_cmd) return cmd_gen(gen, out, err);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kPipeline;
  }
  return kUsage;
}

}  // namespace xscale::cli
