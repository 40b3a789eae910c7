/*
 * Copyright 2026 The cordic-dct Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cordic_dct/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "cordic_dct/codec.hpp"
#include "cordic_dct/cordic.hpp"
#include "cordic_dct/dct8.hpp"
#include "cordic_dct/errors.hpp"
#include "cordic_dct/image.hpp"
#include "cordic_dct/planner.hpp"
#include "cordic_dct/report.hpp"

namespace cdct {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double_strict(std::string_view text, std::string_view what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ParseError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

template <typename T, typename Fn>
std::vector<T> parse_list(std::string_view text, Fn&& parse_one) {
  std::vector<T> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    out.push_back(parse_one(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

double parse_angle(std::string_view text) {
  text = trim(text);
  if (text.starts_with("deg:")) {
    return parse_double_strict(text.substr(4), "degrees") * std::numbers::pi / 180.0;
  }
  const auto pi_pos = text.find("pi");
  if (pi_pos == std::string_view::npos) return parse_double_strict(text, "angle");

  std::string_view coef = trim(text.substr(0, pi_pos));
  if (coef.ends_with('*')) coef = trim(coef.substr(0, coef.size() - 1));
  double factor = 1.0;
  if (coef == "-") {
    factor = -1.0;
  } else if (!coef.empty() && coef != "+") {
    factor = parse_double_strict(coef, "angle coefficient");
  }
  std::string_view rest = trim(text.substr(pi_pos + 2));
  double denom = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw ParseError("cannot parse angle '" + std::string(text) + "'");
    denom = parse_double_strict(rest.substr(1), "angle denominator");
    if (denom == 0.0) throw ParseError("zero denominator in angle '" + std::string(text) + "'");
  }
  return factor * std::numbers::pi / denom;
}

std::string format_angle(double radians) { return fmt::format("{}", radians); }

std::vector<double> parse_number_list(std::string_view text) {
  return parse_list<double>(text, [](std::string_view s) { return parse_double_strict(s, "number"); });
}

std::vector<double> parse_angle_list(std::string_view text) {
  return parse_list<double>(text, [](std::string_view s) { return parse_angle(s); });
}

std::vector<int> parse_int_list(std::string_view text) {
  return parse_list<int>(text, [](std::string_view s) {
    s = trim(s);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError("cannot parse integer '" + std::string(s) + "'");
    }
    return value;
  });
}

namespace {

enum class OutputFormat { kText, kCsv, kJson };

struct RunConfig {
  // global
  double eps = 1e-3;
  std::string policy = "nearest";
  std::string mode = "float";
  int bits = 0;  // 0: subcommand default
  int frac = -1;
  std::string overflow;  // empty: subcommand default
  std::string compensation = "folded";
  bool fold_into_quantizer = false;
  std::string format = "text";
  std::string out_path;

  // decompose / rotate
  std::string angle;
  double x = 1.0;
  double y = 0.0;
  bool no_compensate = false;

  // table
  bool dct_angles = false;
  std::string angles;
  std::string epsilons;

  // dct
  std::string in_path;

  // eval
  std::string image_path;
  std::string synthetic;
  std::string qualities = "95,90,85,80,75";
  int threads = 1;
  bool oracle_transform = false;
};

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw DomainError("unknown output format '" + name + "'");
}

ArithmeticMode make_mode(const RunConfig& cfg, FixedPointFormat default_format,
                         OverflowPolicy default_policy) {
  if (cfg.mode == "float") return ArithmeticMode::exact_float();
  if (cfg.mode != "fixed") throw DomainError("unknown arithmetic mode '" + cfg.mode + "'");
  const int bits = cfg.bits > 0 ? cfg.bits : default_format.total_bits();
  const int frac = cfg.frac >= 0 ? cfg.frac : default_format.frac_bits();
  OverflowPolicy policy = default_policy;
  if (cfg.overflow == "saturate") {
    policy = OverflowPolicy::kSaturate;
  } else if (cfg.overflow == "error") {
    policy = OverflowPolicy::kError;
  } else if (!cfg.overflow.empty()) {
    throw DomainError("unknown overflow policy '" + cfg.overflow + "'");
  }
  return ArithmeticMode::fixed_point(FixedPointFormat(bits, frac), policy);
}

GainCompensation parse_compensation(const std::string& name) {
  if (name == "folded") return GainCompensation::kFolded;
  if (name == "per-rotator") return GainCompensation::kPerRotator;
  throw DomainError("unknown compensation '" + name + "'");
}

std::string spaced_directions(std::span<const int> directions) {
  std::string s;
  for (std::size_t k = 0; k < directions.size(); ++k) {
    if (k) s += ' ';
    s += directions[k] > 0 ? '+' : '-';
  }
  return s;
}

std::string join_fixed(std::span<const double> values, int precision) {
  std::string s;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) s += ' ';
    s += fmt::format("{:.{}f}", values[k], precision);
  }
  return s;
}

void cmd_decompose(const RunConfig& cfg, std::ostream& os) {
  if (cfg.angle.empty()) throw DomainError("decompose requires --angle");
  const double theta = parse_angle(cfg.angle);
  const IndexPolicy policy = parse_index_policy(cfg.policy);
  const RotationPlan plan = decompose(theta, cfg.eps, policy);
  const TableRow row{theta, cfg.eps, plan.indices(), plan.directions(), plan.residual(), plan.gain()};
  switch (parse_format(cfg.format)) {
    case OutputFormat::kCsv:
      os << table_csv(std::span(&row, 1));
      break;
    case OutputFormat::kJson: {
      auto j = table_json(std::span(&row, 1)).at(0);
      j["policy"] = std::string(to_string(policy));
      j["reconstructed_rad"] = reconstruct_angle(plan);
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::kText:
      os << "angle: " << format_angle(theta) << " rad\n";
      os << "eps: " << fmt::format("{:g}", cfg.eps) << "  policy: " << to_string(policy) << '\n';
      if (plan.empty()) {
        os << "i: (none)  sigma: (none)\n";
        os << "empty plan: |angle| <= eps\n";
      } else {
        const auto idx = plan.indices();
        const auto dir = plan.directions();
        os << "i: " << format_indices(idx) << "  sigma: " << spaced_directions(dir) << '\n';
      }
      os << "reconstructed: " << fmt::format("{:.9f}", reconstruct_angle(plan)) << " rad\n";
      os << "residual: " << fmt::format("{:.6e}", plan.residual()) << " rad\n";
      os << "gain: " << fmt::format("{:.16f}", plan.gain()) << '\n';
      break;
  }
}

void cmd_table(const RunConfig& cfg, bool eps_explicit, std::ostream& os) {
  std::vector<double> angles;
  std::vector<double> epsilons = {1e-3, 1e-4};
  if (cfg.dct_angles || cfg.angles.empty()) {
    const auto a = dct_rotation_angles();
    angles.assign(a.begin(), a.end());
  }
  if (!cfg.angles.empty()) angles = parse_angle_list(cfg.angles == "none" ? "" : cfg.angles);
  if (!cfg.epsilons.empty()) {
    epsilons = parse_number_list(cfg.epsilons);
  } else if (eps_explicit) {
    epsilons = {cfg.eps};
  }
  const IndexPolicy policy = parse_index_policy(cfg.policy);
  const auto rows = generate_table(angles, epsilons, policy);
  switch (parse_format(cfg.format)) {
    case OutputFormat::kCsv:
      os << table_csv(rows);
      break;
    case OutputFormat::kJson:
      os << table_json(rows).dump(2) << '\n';
      break;
    case OutputFormat::kText:
      os << fmt::format("{:<22} {:<8} {:<22} {:<14} {:<14} {}\n", "angle_rad", "eps", "i", "sigma",
                        "residual", "gain");
      for (const auto& r : rows) {
        os << fmt::format("{:<22} {:<8g} {:<22} {:<14} {:<14.6e} {:.10f}\n", format_angle(r.angle),
                          r.epsilon, r.indices.empty() ? "-" : format_indices(r.indices),
                          r.directions.empty() ? "-" : format_directions(r.directions), r.residual,
                          r.gain);
      }
      break;
  }
}

void cmd_rotate(const RunConfig& cfg, std::ostream& os) {
  if (cfg.angle.empty()) throw DomainError("rotate requires --angle");
  const double theta = parse_angle(cfg.angle);
  const RotationPlan plan = decompose(theta, cfg.eps, parse_index_policy(cfg.policy));
  const ArithmeticMode mode = make_mode(cfg, unit_fixed_format(), OverflowPolicy::kError);
  const bool compensate = !cfg.no_compensate;
  Instrumentation instr;
  const Vector2 v{cfg.x, cfg.y};
  const Vector2 r = apply_plan(v, plan, mode, compensate, &instr);
  Vector2 ideal = ideal_rotation_matrix(theta) * v;
  if (!compensate) ideal = {ideal.x / plan.gain(), ideal.y / plan.gain()};
  const double err = std::hypot(r.x - ideal.x, r.y - ideal.y);
  switch (parse_format(cfg.format)) {
    case OutputFormat::kJson: {
      nlohmann::json j = {{"angle_rad", theta},
                          {"epsilon", cfg.eps},
                          {"mode", mode.describe()},
                          {"compensate", compensate},
                          {"indices", plan.indices()},
                          {"directions", format_directions(plan.directions())},
                          {"input", {v.x, v.y}},
                          {"output", {r.x, r.y}},
                          {"ideal", {ideal.x, ideal.y}},
                          {"error", err},
                          {"ops", op_counts_json(instr.ops)},
                          {"saturations", instr.saturations}};
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv:
      os << "x,y,ideal_x,ideal_y,error\n";
      os << fmt::format("{:.12f},{:.12f},{:.12f},{:.12f},{:.6e}\n", r.x, r.y, ideal.x, ideal.y, err);
      break;
    case OutputFormat::kText:
      os << "mode: " << mode.describe() << "  compensate: " << (compensate ? "yes" : "no") << '\n';
      os << "i: " << (plan.empty() ? "(none)" : format_indices(plan.indices()))
         << "  sigma: " << (plan.empty() ? "(none)" : spaced_directions(plan.directions())) << '\n';
      os << fmt::format("output: ({:.12f}, {:.12f})\n", r.x, r.y);
      os << fmt::format("ideal:  ({:.12f}, {:.12f})\n", ideal.x, ideal.y);
      os << fmt::format("error: {:.6e}\n", err);
      os << fmt::format("ops: adds={} shifts={} multiplies={}\n", instr.ops.adds, instr.ops.shifts,
                        instr.ops.multiplies);
      break;
  }
}

std::vector<double> read_numbers(std::istream& in) {
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    std::string_view t = token;
    while (!t.empty()) {
      const auto comma = t.find(',');
      const auto piece = t.substr(0, comma);
      if (!piece.empty()) values.push_back(parse_double_strict(piece, "sample"));
      if (comma == std::string_view::npos) break;
      t.remove_prefix(comma + 1);
    }
  }
  return values;
}

void cmd_dct(const RunConfig& cfg, std::istream& stdin_stream, std::ostream& os) {
  std::vector<double> values;
  if (cfg.in_path.empty() || cfg.in_path == "-") {
    values = read_numbers(stdin_stream);
  } else {
    std::ifstream file(cfg.in_path);
    if (!file) throw ParseError("cannot open " + cfg.in_path);
    values = read_numbers(file);
  }
  if (values.size() != 8 && values.size() != 64) {
    throw DomainError("dct expects 8 or 64 numbers, got " + std::to_string(values.size()));
  }

  DctConfig dc;
  dc.epsilon = cfg.eps;
  dc.policy = parse_index_policy(cfg.policy);
  dc.mode = make_mode(cfg, dct_fixed_format(), OverflowPolicy::kSaturate);
  dc.compensation = parse_compensation(cfg.compensation);
  dc.fold_into_quantizer = cfg.fold_into_quantizer;
  const DctEngine engine(dc);

  Instrumentation instr;
  std::vector<double> coefs, exact;
  if (values.size() == 8) {
    SampleVec8 x{};
    std::copy(values.begin(), values.end(), x.begin());
    auto c = dct8_cordic(x, engine, &instr);
    if (engine.fold_into_quantizer()) {
      const auto ps = engine.post_scales();
      for (int k = 0; k < 8; ++k) c[k] *= ps[k];
    }
    const auto o = dct8_oracle(x);
    coefs.assign(c.begin(), c.end());
    exact.assign(o.begin(), o.end());
  } else {
    Block8 b{};
    std::copy(values.begin(), values.end(), b.begin());
    auto c = dct2d(b, engine, &instr);
    if (engine.fold_into_quantizer()) {
      for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v) c[u * 8 + v] *= engine.post_scale_2d(u, v);
    }
    const auto o = dct2d_oracle(b);
    coefs.assign(c.begin(), c.end());
    exact.assign(o.begin(), o.end());
  }
  double max_err = 0.0;
  for (std::size_t k = 0; k < coefs.size(); ++k) max_err = std::max(max_err, std::fabs(coefs[k] - exact[k]));
  const OpCounts per8 = engine.operation_counts();

  switch (parse_format(cfg.format)) {
    case OutputFormat::kJson: {
      nlohmann::json j = {{"epsilon", cfg.eps},
                          {"mode", engine.mode().describe()},
                          {"coefficients", coefs},
                          {"oracle", exact},
                          {"max_abs_error", max_err},
                          {"ops_per_8pt", op_counts_json(per8)},
                          {"saturations", instr.saturations}};
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv:
      os << "index,coefficient,oracle,abs_error\n";
      for (std::size_t k = 0; k < coefs.size(); ++k) {
        os << fmt::format("{},{:.9f},{:.9f},{:.3e}\n", k, coefs[k], exact[k], std::fabs(coefs[k] - exact[k]));
      }
      break;
    case OutputFormat::kText:
      os << "engine: eps=" << fmt::format("{:g}", cfg.eps) << " policy=" << cfg.policy
         << " mode=" << engine.mode().describe() << '\n';
      if (values.size() == 8) {
        os << "coef:   " << join_fixed(coefs, 6) << '\n';
        os << "oracle: " << join_fixed(exact, 6) << '\n';
      } else {
        for (int r = 0; r < 8; ++r) {
          os << "coef[" << r << "]: " << join_fixed(std::span(coefs).subspan(r * 8, 8), 4) << '\n';
        }
      }
      os << fmt::format("max_abs_error: {:.6e}\n", max_err);
      os << fmt::format("ops_per_8pt: adds={} shifts={} multiplies={}\n", per8.adds, per8.shifts,
                        per8.multiplies);
      os << "saturations: " << instr.saturations << '\n';
      break;
  }
}

void cmd_eval(const RunConfig& cfg, bool eps_explicit, std::ostream& os) {
  GrayImage image;
  std::string source;
  if (!cfg.image_path.empty()) {
    image = read_pgm(std::filesystem::path(cfg.image_path));
    source = cfg.image_path;
  } else if (!cfg.synthetic.empty()) {
    image = synthetic_by_name(cfg.synthetic);
    source = "synthetic:" + cfg.synthetic;
  } else {
    throw DomainError("eval requires an image path or --synthetic NAME");
  }

  std::vector<double> epsilons = {1e-3, 1e-4};
  if (!cfg.epsilons.empty()) {
    epsilons = parse_number_list(cfg.epsilons);
  } else if (eps_explicit) {
    epsilons = {cfg.eps};
  }
  const std::vector<int> qualities = parse_int_list(cfg.qualities);

  SweepOptions opts;
  opts.policy = parse_index_policy(cfg.policy);
  opts.mode = make_mode(cfg, dct_fixed_format(), OverflowPolicy::kSaturate);
  opts.compensation = parse_compensation(cfg.compensation);
  opts.fold_into_quantizer = cfg.fold_into_quantizer;
  opts.roundtrip.threads = cfg.threads;
  opts.roundtrip.oracle_transform = cfg.oracle_transform;
  const PsnrReport report = sweep(image, epsilons, qualities, opts);

  switch (parse_format(cfg.format)) {
    case OutputFormat::kCsv:
      os << psnr_report_csv(report);
      break;
    case OutputFormat::kJson: {
      nlohmann::json j = {{"image", source},
                          {"width", image.width()},
                          {"height", image.height()},
                          {"mode", opts.mode.describe()},
                          {"rows", psnr_report_json(report)}};
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::kText:
      os << "image: " << source << " (" << image.width() << "x" << image.height() << ")  mode: "
         << opts.mode.describe() << '\n';
      os << fmt::format("{:<10} {:<8} {:<10} {:<18} {}\n", "epsilon", "quality", "psnr_db",
                        "mean_abs_coef_err", "saturations");
      for (const auto& r : report.rows) {
        os << fmt::format("{:<10g} {:<8} {:<10} {:<18.6e} {}\n", r.epsilon, r.quality,
                          format_psnr(r.psnr_db), r.mean_abs_coef_error, r.saturations);
      }
      break;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"CORDIC rotation planning, CORDIC-based 8x8 DCT and codec quality sweeps",
               "cordic_dct"};
  app.require_subcommand(1);
  app.fallthrough();

  CLI::Option* eps_opt = app.add_option("--eps", cfg.eps, "Rotation precision in radians")
                             ->check(CLI::Range(kMinTolerance, kMaxTolerance));
  app.add_option("--policy", cfg.policy, "Index policy")->check(CLI::IsMember({"literal", "nearest"}));
  app.add_option("--mode", cfg.mode, "Arithmetic mode")->check(CLI::IsMember({"float", "fixed"}));
  app.add_option("--bits", cfg.bits, "Fixed-point total bits")->check(CLI::Range(8, 32));
  app.add_option("--frac", cfg.frac, "Fixed-point fractional bits")->check(CLI::Range(0, 30));
  app.add_option("--overflow", cfg.overflow, "Fixed-point overflow policy")
      ->check(CLI::IsMember({"saturate", "error"}));
  app.add_option("--compensation", cfg.compensation, "Rotator gain compensation")
      ->check(CLI::IsMember({"folded", "per-rotator"}));
  app.add_flag("--fold-into-quantizer", cfg.fold_into_quantizer,
               "Leave DCT post-scales to the quantizer");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", cfg.out_path, "Write the report to PATH instead of stdout");

  auto* decompose_cmd = app.add_subcommand("decompose", "Micro-rotation plan for one angle");
  decompose_cmd->add_option("--angle", cfg.angle, "Angle: 0.19, pi/16, 3pi/8, deg:22.5")->required();

  auto* table_cmd = app.add_subcommand("table", "Plan table over angles x precisions");
  table_cmd->add_flag("--dct-angles", cfg.dct_angles, "The four flow-graph angles at 1e-3 and 1e-4");
  table_cmd->add_option("--angles", cfg.angles, "Comma-separated angles ('none' for an empty list)");
  table_cmd->add_option("--epsilons", cfg.epsilons, "Comma-separated precisions");

  auto* rotate_cmd = app.add_subcommand("rotate", "Rotate a vector with a planned CORDIC");
  rotate_cmd->add_option("--angle", cfg.angle, "Rotation angle")->required();
  rotate_cmd->add_option("--x", cfg.x, "Input x");
  rotate_cmd->add_option("--y", cfg.y, "Input y");
  rotate_cmd->add_flag("--no-compensate", cfg.no_compensate, "Skip gain compensation");

  auto* dct_cmd = app.add_subcommand("dct", "8-point or 8x8 CORDIC DCT against the exact transform");
  dct_cmd->add_option("--in", cfg.in_path, "File with 8 or 64 numbers (default stdin)");

  auto* eval_cmd = app.add_subcommand("eval", "PSNR sweep over precisions and quality factors");
  eval_cmd->add_option("image", cfg.image_path, "Binary PGM (P5) input");
  eval_cmd->add_option("--synthetic", cfg.synthetic, "Built-in 512x512 image")
      ->check(CLI::IsMember({"gradient", "zoneplate", "texture", "scene"}));
  eval_cmd->add_option("--qualities", cfg.qualities, "Comma-separated quality factors");
  eval_cmd->add_option("--epsilons", cfg.epsilons, "Comma-separated precisions");
  eval_cmd->add_option("--threads", cfg.threads, "Block workers")->check(CLI::Range(1, 256));
  eval_cmd->add_flag("--oracle-transform", cfg.oracle_transform, "Encode with the exact DCT");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    out << "status: ok\n";
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    out << "status: ok\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    out << "status: error: " << e.what() << '\n';
    return e.get_exit_code() == 0 ? 2 : e.get_exit_code();
  }

  const bool eps_explicit = eps_opt->count() > 0;
  try {
    std::ostringstream report;
    if (decompose_cmd->parsed()) {
      cmd_decompose(cfg, report);
    } else if (table_cmd->parsed()) {
      cmd_table(cfg, eps_explicit, report);
    } else if (rotate_cmd->parsed()) {
      cmd_rotate(cfg, report);
    } else if (dct_cmd->parsed()) {
      cmd_dct(cfg, in, report);
    } else if (eval_cmd->parsed()) {
      cmd_eval(cfg, eps_explicit, report);
    }
    if (cfg.out_path.empty()) {
      out << report.str();
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) throw ParseError("cannot write " + cfg.out_path);
      file << report.str();
      if (!file) throw ParseError("write failed for " + cfg.out_path);
      out << "wrote: " << cfg.out_path << '\n';
    }
    out << "status: ok\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    out << "status: error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cdct
