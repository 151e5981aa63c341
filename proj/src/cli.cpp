// Copyright 2026 The ipskit Authors
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

#include "ipskit/cli.hpp"

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ipskit/io.hpp"

namespace ipskit {

namespace {

struct Options {
  std::string channel;
  std::string code;
  std::string stochastic;
  std::string projector;
  std::string mode = "noiseless";
  std::string level = "preserved";
  std::string out_dir;
  bool full = false;
  bool text = false;
  bool json = false;
  bool list = false;
  std::uint64_t seed = 0;
  double tol = -1.0;
};

ToleranceConfig tolerance(const Options& o) {
  ToleranceConfig t;
  if (o.tol > 0.0) {
    t.equality = o.tol;
    t.structure = o.tol;
    t.preservation = o.tol;
  }
  return t;
}

QuantumChannel load_valid_channel(const std::string& path, const ToleranceConfig& tol) {
  QuantumChannel ch = load_channel(path);
  CptpReport rep = is_cptp(ch, tol.equality);
  if (!rep.trace_preserving)
    throw InputError("channel is not trace preserving (residual " + std::to_string(rep.tp_residual) + ")");
  if (!rep.completely_positive) throw InputError("channel Choi matrix is not positive");
  return ch;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

void print_text(const Json& report, std::ostream& out) {
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (it.value().is_object()) {
      for (auto jt = it.value().begin(); jt != it.value().end(); ++jt)
        out << it.key() << "." << jt.key() << ": " << jt.value().dump() << "\n";
    } else {
      out << it.key() << ": " << it.value().dump() << "\n";
    }
  }
}

int analyze(const Options& o, std::ostream& out) {
  const ToleranceConfig tol = tolerance(o);
  QuantumChannel ch = load_valid_channel(o.channel, tol);
  Json report;
  if (o.mode == "noiseless") {
    report = structure_report(noiseless_ips(ch, o.seed, tol), tol);
  } else if (o.mode == "unitarily-noiseless") {
    report = structure_report(unitarily_noiseless_ips(ch, o.seed, tol), tol);
  } else if (o.mode == "unconditional") {
    report = structure_report(unconditional_ips(ch, o.seed, tol), tol);
  } else if (o.mode == "fixed-structure") {
    FixedStructureReport fs = fixed_point_structure(ch, o.seed, tol);
    report = structure_report(fs.structure, tol);
    report["triangular"] = Json{{"leak", fs.triangular.leak},
                                {"off_sector", fs.triangular.off_sector},
                                {"cofactor_form", fs.triangular.cofactor_form},
                                {"ok", fs.triangular.ok}};
    std::vector<bool> init_free;
    for (std::size_t k = 0; k < fs.structure.algebra.sectors.size(); ++k)
      init_free.push_back(initialization_free_check(ch, fs.structure, static_cast<int>(k)).initialization_free);
    report["initialization_free"] = init_free;
  } else {
    throw InputError("unknown mode: " + o.mode);
  }
  if (o.text)
    print_text(report, out);
  else
    out << format_json(report);
  return 0;
}

int verify_code(const Options& o, std::ostream& out) {
  const ToleranceConfig tol = tolerance(o);
  QuantumChannel ch = load_valid_channel(o.channel, tol);
  Code code = load_code(o.code);
  if (code.dim() != ch.dim_in) throw InputError("code dimension does not match channel input");
  Json report;
  bool verdict = false;
  if (o.level == "fixed") {
    verdict = is_fixed(code, ch, tol.equality);
    report = Json{{"verdict", verdict}};
  } else if (o.level == "preserved") {
    PreservationReport r = is_preserved(code, ch, tol);
    verdict = r.verdict;
    report = preservation_to_json(r);
  } else if (o.level == "noiseless") {
    if (ch.dim_in != ch.dim_out) throw InputError("noiseless level needs a square channel");
    NoiselessReport r = is_noiseless(code, ch, tol);
    verdict = r.verdict;
    report = Json{{"verdict", verdict}, {"failing_map", r.failing_map}, {"worst", preservation_to_json(r.worst)}};
  } else if (o.level == "correctable") {
    CorrectabilityReport r = is_correctable_via_transpose(code, ch, tol);
    verdict = r.verdict;
    report = Json{{"verdict", verdict},
                  {"support_rank", static_cast<int>(std::lround(r.support.trace().real()))},
                  {"unitality_residual", r.unitality_residual},
                  {"failing_map", r.noiseless.failing_map}};
  } else {
    throw InputError("unknown level: " + o.level);
  }
  report["level"] = o.level;
  out << "verdict: " << (verdict ? "pass" : "fail") << "\n";
  out << format_json(report);
  return verdict ? 0 : 1;
}

int transpose(const Options& o, std::ostream& out, std::ostream& err) {
  const ToleranceConfig tol = tolerance(o);
  QuantumChannel ch = load_valid_channel(o.channel, tol);
  Operator p;
  if (o.full == !o.projector.empty()) throw InputError("give exactly one of --projector or --full");
  if (o.full)
    p = identity(ch.dim_in);
  else
    p = projector_from_json(read_json_file(o.projector));
  if (p.rows() != ch.dim_in || p.cols() != ch.dim_in) throw InputError("projector dimension does not match channel input");
  if (!is_projector(p, tol.projector)) throw InputError("projector file does not hold an orthogonal projector");
  QuantumChannel hat = transpose_channel(ch, p, tol);
  SupportComposite sc = transpose_composite_on_support(ch, p, tol);
  const Eigen::Index r = sc.basis.cols();
  err << "tp_residual: " << Json(tp_residual(hat)).dump() << "\n";
  err << "composite_unitality_residual: "
      << Json(max_abs(ipskit::apply(sc.composite, identity(r)) - identity(r))).dump() << "\n";
  out << format_json(channel_to_json(hat));
  return 0;
}

int classical_maxcode(const Options& o, std::ostream& out) {
  StochasticChannel sc = load_stochastic(o.stochastic);
  if (sc.n_in > kMaxSearchVertices) throw InputError("classical-maxcode supports at most 30 input symbols");
  std::vector<int> code = max_zero_error_code(sc);
  if (o.json) {
    out << format_json(Json{{"code", code}, {"size", code.size()}});
  } else {
    out << "code: " << join(code) << "\n";
    out << "size: " << code.size() << "\n";
  }
  return 0;
}

int fixtures(const Options& o, std::ostream& out) {
  if (o.list || o.out_dir.empty()) {
    for (const auto& name : fixture_names()) out << name << "\n";
    for (const auto& name : code_fixture_names()) out << "codes/" << name << "\n";
    return 0;
  }
  namespace fs = std::filesystem;
  for (const auto& [rel, text] : fixture_documents()) {
    fs::path path = fs::path(o.out_dir) / rel;
    fs::create_directories(path.parent_path());
    write_text_file(path.string(), text);
    out << path.string() << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-error information-preserving structures of quantum channels", "ipskit"};
  app.require_subcommand(1);
  Options o;

  auto* an = app.add_subcommand("analyze", "Extract an information-preserving structure");
  an->add_option("--channel", o.channel, "Channel JSON file")->required();
  an->add_option("--mode", o.mode, "noiseless | unitarily-noiseless | unconditional | fixed-structure")
      ->check(CLI::IsMember({"noiseless", "unitarily-noiseless", "unconditional", "fixed-structure"}));
  auto* as_json = an->add_flag("--json", o.json, "JSON report (default)");
  an->add_flag("--text", o.text, "Plain text report")->excludes(as_json);
  an->add_option("--seed", o.seed, "Random seed");
  an->add_option("--tol", o.tol, "Equality, structure and preservation tolerance");

  auto* vc = app.add_subcommand("verify-code", "Check a code against the operational hierarchy");
  vc->add_option("--channel", o.channel, "Channel JSON file")->required();
  vc->add_option("--code", o.code, "Code JSON file")->required();
  vc->add_option("--level", o.level, "fixed | preserved | noiseless | correctable")
      ->check(CLI::IsMember({"fixed", "preserved", "noiseless", "correctable"}));
  vc->add_option("--tol", o.tol, "Equality, structure and preservation tolerance");

  auto* tr = app.add_subcommand("transpose", "Build the transpose channel for a code projector");
  tr->add_option("--channel", o.channel, "Channel JSON file")->required();
  tr->add_option("--projector", o.projector, "Projector JSON file");
  tr->add_flag("--full", o.full, "Use the identity projector");

  auto* cm = app.add_subcommand("classical-maxcode", "Maximum zero-error code of a stochastic map");
  cm->add_option("--stochastic", o.stochastic, "Stochastic map JSON file")->required();
  cm->add_flag("--json", o.json, "JSON output");

  auto* fx = app.add_subcommand("fixtures", "List or write the fixture files");
  fx->add_option("--out", o.out_dir, "Directory to write into");
  fx->add_flag("--list", o.list, "List fixture names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (an->parsed()) return analyze(o, out);
    if (vc->parsed()) return verify_code(o, out);
    if (tr->parsed()) return transpose(o, out, err);
    if (cm->parsed()) return classical_maxcode(o, out);
    if (fx->parsed()) return fixtures(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace ipskit
