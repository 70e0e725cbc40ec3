// Copyright 2026 The mcugen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "support/host_compiler.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <sys/wait.h>

#include "mcugen/csv.hpp"

namespace fs = std::filesystem;

namespace mcugen::testing {

namespace {

std::string quote(const fs::path& p) { return "'" + p.string() + "'"; }

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::string prefix_of(const SourceBundle& bundle) {
  const std::string suffix = "_forward";
  return bundle.entry_symbol.substr(0, bundle.entry_symbol.size() - suffix.size());
}

void write_bundle(const SourceBundle& bundle, const fs::path& dir) {
  for (const auto& [name, text] : bundle.files) write_text(dir / name, text);
}

}  // namespace

TempDir::TempDir() {
  std::string tmpl = (fs::temp_directory_path() / "mcugen-test-XXXXXX").string();
  if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
  path_ = tmpl;
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

void write_text(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + command);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

HostModel::HostModel(const SourceBundle& bundle, const std::string& c_standard) {
  write_bundle(bundle, dir_.path());
  const std::string prefix = prefix_of(bundle);
  exe_ = dir_.path() / "model";
  std::ostringstream cmd;
  cmd << MCUGEN_C_COMPILER << " -std=" << c_standard
      << " -O2 -ffp-contract=off -Wall -Wextra -Werror"
      << " -I" << quote(dir_.path()) << " -DNN_HEADER='\"" << prefix << ".h\"'"
      << " -DNN_FORWARD=" << prefix << "_forward"
      << " -DNN_IN=" << upper(prefix) << "_INPUT_LEN"
      << " -DNN_OUT=" << upper(prefix) << "_OUTPUT_LEN " << quote(MCUGEN_DRIVER_SOURCE) << " "
      << quote(dir_.path() / (prefix + ".c")) << " -lm -o " << quote(exe_);
  const CommandResult r = run_command(cmd.str());
  if (r.exit_code != 0) throw std::runtime_error("C compile failed:\n" + cmd.str() + "\n" + r.output);
}

std::vector<std::vector<float>> HostModel::run(const std::vector<std::vector<float>>& rows) const {
  std::string csv;
  for (const auto& row : rows) csv += format_csv_row(std::span<const float>(row)) + "\n";
  const fs::path in = dir_.path() / "in.csv";
  const fs::path out = dir_.path() / "out.csv";
  write_text(in, csv);
  const CommandResult r = run_command(quote(exe_) + " < " + quote(in) + " > " + quote(out));
  if (r.exit_code != 0) throw std::runtime_error("model driver failed: " + r.output);
  return parse_csv_rows(read_text(out));
}

CommandResult check_c89(const SourceBundle& bundle) {
  TempDir dir;
  write_bundle(bundle, dir.path());
  return run_command(std::string(MCUGEN_C_COMPILER) +
                     " -std=c89 -pedantic -Wall -Wextra -Werror -c -I" + quote(dir.path()) + " " +
                     quote(dir.path() / (prefix_of(bundle) + ".c")) + " -o " +
                     quote(dir.path() / "model.o"));
}

}  // namespace mcugen::testing
