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

// Command-line front end. The tool binary is a thin wrapper around run_cli so
// the subcommands can be driven in-process by tests.

#ifndef CORDIC_DCT_CLI_HPP_
#define CORDIC_DCT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cdct {

// Accepts decimals ("0.19635", "1e-3"), multiples of pi ("pi", "pi/16",
// "3pi/8", "-3*pi/16") and degrees ("deg:22.5"). Throws ParseError.
double parse_angle(std::string_view text);
// Shortest text that parse_angle maps back to exactly the same double.
std::string format_angle(double radians);

// Comma-separated lists; empty text gives an empty list.
std::vector<double> parse_number_list(std::string_view text);
std::vector<double> parse_angle_list(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);

// args excludes the program name; `in` feeds `dct` when no --in file is
// given. Returns the process exit code, 0 iff no operation error. Every run
// ends `out` with a "status: ..." line.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace cdct

#endif  // CORDIC_DCT_CLI_HPP_
