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

// mcugen: command-line front end.
//
//   mcugen inspect MODEL
//   mcugen check MODEL --flash-bits S [--gamma G] [--bits B]
//   mcugen eval MODEL --inputs CSV [--fixed K]
//   mcugen quantize-report MODEL --inputs CSV [--bits 2,8,16] [--json]
//   mcugen codegen MODEL --out DIR [--prefix P]
//
// Exit status: 0 success, 1 validation/parse failure, 2 footprint rejection,
// 3 I/O failure. Diagnostics go to stderr, data to stdout.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mcugen/codegen.hpp"
#include "mcugen/csv.hpp"
#include "mcugen/errors.hpp"
#include "mcugen/footprint.hpp"
#include "mcugen/interpreter.hpp"
#include "mcugen/parser.hpp"
#include "mcugen/quantizer.hpp"

namespace fs = std::filesystem;

namespace {

enum ExitStatus : int { kOk = 0, kInvalid = 1, kDoesNotFit = 2, kIoFailure = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return ss.str();
}

mcugen::NetworkGraph load_model(const fs::path& path) {
  const std::string text = read_file(path);
  if (auto sidecar = mcugen::declared_sidecar(text)) {
    const std::string raw = read_file(path.parent_path() / *sidecar);
    const mcugen::Bytes bytes(raw.begin(), raw.end());
    return mcugen::parse_model(text, std::span<const std::uint8_t>(bytes));
  }
  return mcugen::parse_model(text);
}

std::vector<mcugen::TensorData> load_inputs(const fs::path& path,
                                            const mcugen::NetworkGraph& graph) {
  const auto rows = mcugen::parse_csv_rows(read_file(path));
  const std::size_t width = mcugen::element_count(graph.input_shape());
  std::vector<mcugen::TensorData> inputs;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) {
      throw mcugen::ShapeError("input row " + std::to_string(r + 1) + " has " +
                               std::to_string(rows[r].size()) + " values, model expects " +
                               std::to_string(width));
    }
    inputs.emplace_back(graph.input_shape(), rows[r]);
  }
  return inputs;
}

int cmd_inspect(const fs::path& model) {
  const auto graph = load_model(model);
  std::printf("model: %s\ninput: %s\n\n", graph.name().c_str(),
              mcugen::to_string(graph.input_shape()).c_str());
  std::printf("%-20s %-10s %-16s %10s\n", "id", "kind", "output", "params");
  for (const std::string& id : graph.order()) {
    const auto& node = graph.node(id);
    std::printf("%-20s %-10s %-16s %10zu\n", id.c_str(),
                std::string(mcugen::kind_name(node.spec.kind)).c_str(),
                mcugen::to_string(graph.shapes().at(id)).c_str(), mcugen::param_count(node));
  }
  std::printf("\ntotal params: %zu\n", mcugen::param_count(graph));
  return kOk;
}

int cmd_check(const fs::path& model, std::uint64_t flash_bits, const std::string& gamma,
              int bits) {
  const mcugen::Ratio g = mcugen::parse_ratio(gamma);
  mcugen::max_params(flash_bits, g, bits);  // domain check before touching the model
  const auto graph = load_model(model);
  const auto report = mcugen::footprint(graph, flash_bits, g, bits);
  std::fputs(mcugen::to_text(report).c_str(), stdout);
  return report.fits ? kOk : kDoesNotFit;
}

int cmd_eval(const fs::path& model, const fs::path& csv, std::optional<int> fixed) {
  const auto graph = load_model(model);
  const auto inputs = load_inputs(csv, graph);
  if (fixed) {
    if (inputs.empty()) throw mcugen::DomainError("--fixed needs at least one input row");
    const auto plan = mcugen::make_plan(mcugen::calibrate(graph, inputs), *fixed);
    for (const auto& in : inputs) {
      const auto out = mcugen::forward_fixed(graph, in, plan);
      std::printf("%s\n", mcugen::format_csv_row(std::span<const double>(out.values)).c_str());
    }
    return kOk;
  }
  for (const auto& in : inputs) {
    const auto out = mcugen::forward(graph, in);
    std::printf("%s\n", mcugen::format_csv_row(out.data()).c_str());
  }
  return kOk;
}

std::vector<int> parse_bits_list(const std::string& text) {
  std::vector<int> bits;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      bits.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw mcugen::DomainError("--bits expects a comma-separated list of integers, got '" +
                                text + "'");
    }
  }
  if (bits.empty()) throw mcugen::DomainError("--bits list is empty");
  return bits;
}

int cmd_quantize_report(const fs::path& model, const fs::path& csv, const std::string& bits,
                        bool json) {
  const auto ks = parse_bits_list(bits);
  const auto graph = load_model(model);
  const auto inputs = load_inputs(csv, graph);
  if (inputs.empty()) throw mcugen::DomainError("input CSV has no rows");
  const auto report = mcugen::fidelity_report(graph, inputs, ks);
  std::fputs((json ? mcugen::to_json(report) : mcugen::to_text(report)).c_str(), stdout);
  return kOk;
}

int cmd_codegen(const fs::path& model, const fs::path& out_dir, const std::string& prefix) {
  const auto graph = load_model(model);
  const auto bundle = mcugen::generate_code(graph, {.prefix = prefix});
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
  for (const auto& [name, contents] : bundle.files) {
    const fs::path path = out_dir / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << contents;
    out.close();
    if (!out) throw IoError("cannot write " + path.string());
    std::printf("%s\n", path.string().c_str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile trained feed-forward networks into allocation-less C for microcontrollers"};
  app.require_subcommand(1);

  std::string model;
  auto* inspect = app.add_subcommand("inspect", "Print the layer table and parameter count");
  inspect->add_option("model", model, "Model document")->required();

  std::uint64_t flash_bits = 0;
  std::string gamma = "1";
  int bits = 32;
  auto* check = app.add_subcommand("check", "Check the flash footprint bound P <= floor(gamma*S/b)");
  check->add_option("model", model, "Model document")->required();
  check->add_option("--flash-bits", flash_bits, "Flash size S in bits")->required();
  check->add_option("--gamma", gamma, "Usable fraction of flash, 0 < gamma <= 1 (decimal or p/q)");
  check->add_option("--bits", bits, "Bits per parameter (8, 16 or 32)");

  std::string inputs_csv;
  std::optional<int> fixed;
  auto* eval = app.add_subcommand("eval", "Run the reference forward pass over CSV rows");
  eval->add_option("model", model, "Model document")->required();
  eval->add_option("--inputs", inputs_csv, "CSV file, one flattened sample per row")->required();
  eval->add_option("--fixed", fixed, "Simulate K-bit fixed point (2, 8, 16 or 32)");

  std::string bit_list = "2,8,16";
  bool json = false;
  auto* qreport = app.add_subcommand("quantize-report", "Fixed-point fidelity against 32-bit fixed point");
  qreport->add_option("model", model, "Model document")->required();
  qreport->add_option("--inputs", inputs_csv, "CSV file, one flattened sample per row")->required();
  qreport->add_option("--bits", bit_list, "Comma-separated bit widths");
  qreport->add_flag("--json", json, "Emit the report as JSON");

  std::string out_dir;
  std::string prefix;
  auto* codegen = app.add_subcommand("codegen", "Emit C sources for the model");
  codegen->add_option("model", model, "Model document")->required();
  codegen->add_option("--out", out_dir, "Output directory")->required();
  codegen->add_option("--prefix", prefix, "C identifier prefix (default: sanitized model name)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*inspect) return cmd_inspect(model);
    if (*check) return cmd_check(model, flash_bits, gamma, bits);
    if (*eval) return cmd_eval(model, inputs_csv, fixed);
    if (*qreport) return cmd_quantize_report(model, inputs_csv, bit_list, json);
    if (*codegen) return cmd_codegen(model, out_dir, prefix);
  } catch (const IoError& e) {
    std::fprintf(stderr, "mcugen: %s\n", e.what());
    return kIoFailure;
  } catch (const mcugen::Error& e) {
    std::fprintf(stderr, "mcugen: %s\n", e.what());
    return kInvalid;
  }
  return kInvalid;
}
