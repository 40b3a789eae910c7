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

// CSV / JSON renderings of decomposition tables, PSNR sweeps and operation
// counts. CSV output is byte-stable: fixed column order, fixed precision.

#ifndef CORDIC_DCT_REPORT_HPP_
#define CORDIC_DCT_REPORT_HPP_

#include <span>
#include <string>

#include "json.hpp"

#include "cordic_dct/arithmetic.hpp"
#include "cordic_dct/codec.hpp"
#include "cordic_dct/planner.hpp"

namespace cdct {

// Three decimals, or "inf".
std::string format_psnr(double db);

// angle_rad,epsilon,indices,directions,residual_rad,gain
std::string table_csv(std::span<const TableRow> rows);
nlohmann::json table_json(std::span<const TableRow> rows);

// epsilon,quality,psnr_db,mean_abs_coef_err,saturations
std::string psnr_report_csv(const PsnrReport& report);
nlohmann::json psnr_report_json(const PsnrReport& report);

nlohmann::json op_counts_json(const OpCounts& ops);

}  // namespace cdct

#endif  // CORDIC_DCT_REPORT_HPP_
