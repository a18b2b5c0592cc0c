/* Copyright (C) 2026 The gbsym Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef GBSYM_TOOLS_CLI_HPP
#define GBSYM_TOOLS_CLI_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <gbsym/identities.hpp>

namespace gbsym::cli {

inline constexpr const char* kToolName = "gbsym";
inline constexpr const char* kToolVersion = "1.0.0";

enum class ExitCode { ok = 0, failures = 1, usage = 2 };

// Bad flags, malformed config files, unknown character labels.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };
Format parse_format(const std::string& s);

struct SweepConfig {
  GridDescription grid;
  Format format = Format::text;
  int jobs = 1;
};

// The grid the acceptance criteria are stated on.
GridDescription default_sweep_grid();

// Config file reader. `source` names the file in diagnostics.
SweepConfig parse_sweep_config(const std::string& text, const std::string& source);
SweepConfig load_sweep_config(const std::string& path);

// Same schema parse_sweep_config() reads; jobs and format are not echoed
// so output is independent of them.
nlohmann::ordered_json config_to_json(const GridDescription& grid);

std::string render_value(const CycloElement& v);
std::vector<int> parse_int_list(const std::string& s, const std::string& what);
Weights parse_weights(const std::string& s);
std::array<Rational, 3> parse_ys(const std::string& s);
Perturbation parse_perturbation(const std::string& s);

nlohmann::ordered_json report_document(const std::string& command, const GridDescription& grid,
                                       const SweepResult& result);
void write_report(std::ostream& out, const nlohmann::ordered_json& doc, Format format);

// Full command-line entry point. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gbsym::cli

#endif // GBSYM_TOOLS_CLI_HPP
