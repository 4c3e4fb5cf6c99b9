// Copyright 2026 The tropcx Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "arrangement_io.hpp"
#include "svg_render.hpp"
#include "tropcx/complex.hpp"
#include "tropcx/text_format.hpp"

namespace tropcx::tools {
namespace {

struct Options {
  std::string matrix_file;
  std::string point;
  std::string type;
  std::string partition;
  std::string out_path;
  std::string viewport;
  bool check_geometric = false;
  std::size_t cap = kDefaultEnumerationCap;
};

class ExitError : public std::runtime_error {
 public:
  ExitError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

Arrangement load(const Options& opt) {
  try {
    return read_arrangement_file(opt.matrix_file);
  } catch (const std::invalid_argument& e) {
    throw ExitError(kExitParseError, e.what());
  }
}

TropicalComplex build_complex(const Arrangement& arr, std::size_t cap) {
  try {
    return TropicalComplex(arr, cap);
  } catch (const std::length_error& e) {
    throw ExitError(kExitSizeCap, e.what());
  }
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text)) throw ExitError(kExitFailure, "cannot write '" + opt.out_path + "'");
}

int cmd_type_of_point(const Options& opt, std::ostream& out) {
  const Arrangement arr = load(opt);
  Point x;
  try {
    x = parse_point(opt.point);
  } catch (const std::invalid_argument& e) {
    throw ExitError(kExitParseError, e.what());
  }
  if (x.size() != arr.rows()) {
    throw ExitError(kExitParseError, "point has " + std::to_string(x.size()) + " coordinates, expected " +
                                         std::to_string(arr.rows()));
  }
  out << format_type(type_of_point(arr, x)) << "\n";
  return kExitOk;
}

int cmd_enumerate(const Options& opt, std::ostream& out, std::ostream& err) {
  const Arrangement arr = load(opt);
  const TropicalComplex complex = build_complex(arr, opt.cap);
  if (opt.check_geometric) {
    for (const auto& cell : complex.cells()) {
      const auto x = realizing_point(arr, cell.type);
      if (!x || type_of_point(arr, *x) != cell.type) {
        err << "geometric check failed for " << format_type(cell.type) << "\n";
        return kExitFailure;
      }
    }
  }
  emit(opt, complex_report_text(complex), out);
  return kExitOk;
}

int cmd_act(const Options& opt, std::ostream& out) {
  const Arrangement arr = load(opt);
  BoolMatrix type;
  std::optional<OrderedSetPartition> partition;
  try {
    type = parse_type(opt.type, arr.rows());
    partition = parse_partition(opt.partition, arr.rows());
  } catch (const std::invalid_argument& e) {
    throw ExitError(kExitParseError, e.what());
  }
  if (type.cols() != arr.cols()) {
    throw ExitError(kExitParseError, "type has " + std::to_string(type.cols()) + " columns, expected " +
                                         std::to_string(arr.cols()));
  }
  if (std::min(arr.rows(), arr.cols()) > kDefaultPermanentCap) {
    throw ExitError(kExitSizeCap, "arrangement is too large for the permanent structure");
  }
  const PermanentStructure perm = permanent_structure(arr);
  if (!is_type(perm, type)) throw ExitError(kExitNotType, format_type(type) + " is not a type");
  const TypeCell moved = act_on_type(perm, make_cell(perm, type), *partition);
  out << format_type(moved.type) << "\n";
  return kExitOk;
}

int cmd_render(const Options& opt, std::ostream& out) {
  const Arrangement arr = load(opt);
  if (arr.rows() != 3) {
    throw ExitError(kExitUnsupportedDimension,
                    "render needs n = 3, the arrangement has n = " + std::to_string(arr.rows()));
  }
  std::optional<Viewport> viewport;
  if (!opt.viewport.empty()) {
    try {
      viewport = parse_viewport(opt.viewport);
    } catch (const std::invalid_argument& e) {
      throw ExitError(kExitParseError, e.what());
    }
  }
  const TropicalComplex complex = build_complex(arr, opt.cap);
  emit(opt, render_svg(complex, viewport), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Combinatorics of min-plus tropical hyperplane arrangements", "tropcx"};
  app.require_subcommand(1);

  auto* type_cmd = app.add_subcommand("type-of-point", "Print the type of a point");
  type_cmd->add_option("matrix-file", opt.matrix_file, "Arrangement JSON file")->required();
  type_cmd->add_option("point", opt.point, "Comma-separated rational coordinates")->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate all types and write a complex report");
  enum_cmd->add_option("matrix-file", opt.matrix_file, "Arrangement JSON file")->required();
  enum_cmd->add_option("--out", opt.out_path, "Report path (default: stdout)");
  enum_cmd->add_flag("--check-geometric", opt.check_geometric, "Verify every cell by strict feasibility");
  enum_cmd->add_option("--cap", opt.cap, "Largest n*d to enumerate")->capture_default_str();

  auto* act_cmd = app.add_subcommand("act", "Act on a type by an ordered set partition");
  act_cmd->add_option("matrix-file", opt.matrix_file, "Arrangement JSON file")->required();
  act_cmd->add_option("type", opt.type, "Type, e.g. ({2},{1,2},{1},{1,3})")->required();
  act_cmd->add_option("partition", opt.partition, "Partition, e.g. ({3}|{2}|{1})")->required();

  auto* render_cmd = app.add_subcommand("render", "Draw an arrangement in R^3 as SVG");
  render_cmd->add_option("matrix-file", opt.matrix_file, "Arrangement JSON file")->required();
  render_cmd->add_option("--out", opt.out_path, "SVG path (default: stdout)");
  render_cmd->add_option("--viewport", opt.viewport, "XMIN,XMAX,YMIN,YMAX in projected coordinates");
  render_cmd->add_option("--cap", opt.cap, "Largest n*d to enumerate")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "tropcx: " << e.what() << "\n";
    return kExitParseError;
  }

  try {
    if (type_cmd->parsed()) return cmd_type_of_point(opt, out);
    if (enum_cmd->parsed()) return cmd_enumerate(opt, out, err);
    if (act_cmd->parsed()) return cmd_act(opt, out);
    if (render_cmd->parsed()) return cmd_render(opt, out);
  } catch (const ExitError& e) {
    err << "tropcx: " << e.what() << "\n";
    return e.code();
  } catch (const std::exception& e) {
    err << "tropcx: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitParseError;
}

}  // namespace tropcx::tools
