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

#include "cordic_dct/report.hpp"

#include <cmath>

#include <fmt/format.h>

namespace cdct {

std::string format_psnr(double db) {
  if (std::isinf(db) && db > 0) return "inf";
  return fmt::format("{:.3f}", db);
}

std::string table_csv(std::span<const TableRow> rows) {
  std::string out = "angle_rad,epsilon,indices,directions,residual_rad,gain\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{:g},{},{},{:.6e},{:.16f}\n", r.angle, r.epsilon,
                       format_indices(r.indices), format_directions(r.directions), r.residual,
                       r.gain);
  }
  return out;
}

nlohmann::json table_json(std::span<const TableRow> rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"angle_rad", r.angle},
                   {"epsilon", r.epsilon},
                   {"indices", r.indices},
                   {"directions", format_directions(r.directions)},
                   {"residual_rad", r.residual},
                   {"gain", r.gain}});
  }
  return arr;
}

std::string psnr_report_csv(const PsnrReport& report) {
  std::string out = "epsilon,quality,psnr_db,mean_abs_coef_err,saturations\n";
  for (const auto& r : report.rows) {
    out += fmt::format("{:g},{},{},{:.6e},{}\n", r.epsilon, r.quality, format_psnr(r.psnr_db),
                       r.mean_abs_coef_error, r.saturations);
  }
  return out;
}

nlohmann::json psnr_report_json(const PsnrReport& report) {
  auto arr = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json psnr_field;
    if (std::isinf(r.psnr_db)) {
      psnr_field = "inf";
    } else {
      // Rounded to the printed precision so JSON and CSV agree.
      psnr_field = std::round(r.psnr_db * 1000.0) / 1000.0;
    }
    arr.push_back({{"epsilon", r.epsilon},
                   {"quality", r.quality},
                   {"psnr_db", psnr_field},
                   {"mean_abs_coef_err", r.mean_abs_coef_error},
                   {"saturations", r.saturations}});
  }
  return arr;
}

nlohmann::json op_counts_json(const OpCounts& ops) {
  return {{"adds", ops.adds}, {"shifts", ops.shifts}, {"multiplies", ops.multiplies}};
}

}  // namespace cdct
