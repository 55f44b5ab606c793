// Copyright 2026 The fsi Authors
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

#include "commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "fsi/baselines.hpp"
#include "fsi/discrimination.hpp"
#include "fsi/fock_oracle.hpp"
#include "fsi/parallel.hpp"
#include "fsi/reading.hpp"
#include "fsi/spin_core.hpp"
#include "report.hpp"

namespace fsi::cli {

namespace {

constexpr double kOracleTol = 1e-9;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

double parse_real(const std::string& text) {
  const std::string t = trim(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "'");
  }
  if (used != t.size() || !std::isfinite(v)) throw UsageError("not a finite number: '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

Cell num(double v) { return v; }
Cell num(int v) { return static_cast<std::int64_t>(v); }
Cell text(std::string s) { return s; }

struct Common {
  std::string format = "csv";
  std::string out = "-";
  int n_a = -1;
  int n_b = -1;
  std::string grid;
  int max_two_j = 0;
  std::string phases;
  std::string ns_grid = "0.5,1,1.5,2,2.5,3,4,5";
  bool bpsk_sweep = false;
};

SpinState state_of(const Common& c) {
  if (c.n_a < 0 || c.n_b < 0) throw UsageError("--na and --nb are required and must be nonnegative");
  return SpinState::from_photons(c.n_a, c.n_b);
}

double grid_of(const Common& c, double fallback) {
  if (c.grid.empty()) return fallback;
  const double g = parse_angle(c.grid);
  if (!(g > 0.0)) throw UsageError("--grid must be positive");
  return g;
}

// Invocation recorded in metadata, without the output destination so that
// reruns to different files stay byte-identical.
std::string invocation(int argc, const char* const* argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--out") {
      ++i;
      continue;
    }
    if (a.rfind("--out=", 0) == 0) continue;
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

Document base_document(const std::string& command, const std::string& args) {
  Document d;
  d.meta = {{"tool", "fsi"}, {"version", kVersion}, {"command", command}, {"arguments", args}};
  return d;
}

void write_document(const Document& doc, const Common& c, std::ostream& out) {
  const std::string body = c.format == "json" ? to_json(doc) : to_csv(doc);
  if (c.out.empty() || c.out == "-") {
    out << body;
    out.flush();
    if (!out) throw IoError("failed writing to standard output");
    return;
  }
  std::ofstream f(c.out, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open output file '" + c.out + "'");
  f << body;
  f.close();
  if (!f) throw IoError("failed writing output file '" + c.out + "'");
}

Document cmd_binary_sweep(const Common& c, const std::string& args) {
  const SpinState s = state_of(c);
  const double grid = grid_of(c, 1e-3);
  const SweepResult r = binary_sweep(s, grid);
  Document d = base_document("binary-sweep", args);
  d.meta.emplace_back("state", s.label());
  d.meta.emplace_back("grid_rad", format_double(grid));
  d.meta.emplace_back("priors", "uniform");
  Table t{"sweep", {"theta_rad", "pe", "mi"}, {}};
  for (Eigen::Index k = 0; k < r.thetas.size(); ++k) t.rows.push_back({num(r.thetas(k)), num(r.pe(k)), num(r.mi(k))});
  d.tables.push_back(std::move(t));
  return d;
}

Document cmd_sop_fit(const Common& c, const std::string& args) {
  const int max_two_j = c.max_two_j > 0 ? c.max_two_j : 10;
  if (max_two_j > kMaxTwoJ) throw UsageError("--max-two-j exceeds " + std::to_string(kMaxTwoJ));
  Document d = base_document("sop-fit", args);
  d.meta.emplace_back("max_two_j", std::to_string(max_two_j));
  d.meta.emplace_back("zero_tol", format_double(kZeroErrorTol));
  Table sop{"sop", {"two_j", "m", "sop_rad"}, {}};
  std::vector<int> fit_x;
  std::vector<double> fit_y;
  for (int two_j = 1; two_j <= max_two_j; ++two_j) {
    if (two_j % 2 == 0) {
      const double v = smallest_optimum_phase(SpinState::from_spin(HalfInt::from_twice(two_j), HalfInt(0)));
      sop.rows.push_back({num(two_j), num(0.0), num(v)});
      fit_x.push_back(two_j);
      fit_y.push_back(v);
    }
    const HalfInt j = HalfInt::from_twice(two_j);
    sop.rows.push_back({num(two_j), num(j.value()), num(smallest_optimum_phase(SpinState::from_spin(j, j)))});
  }
  const PowerLawFit fit = fit_sop_scaling(fit_x, fit_y);
  d.tables.push_back(std::move(sop));
  d.tables.push_back(Table{"fit",
                           {"series", "points", "amplitude", "exponent", "amplitude_se", "exponent_se"},
                           {{text("m=0"), num(static_cast<int>(fit_x.size())), num(fit.amplitude), num(fit.exponent),
                             num(fit.amplitude_se), num(fit.exponent_se)}}});
  return d;
}

Document cmd_ternary_surface(const Common& c, const std::string& args) {
  const SpinState s = state_of(c);
  const double grid = grid_of(c, 5e-3);
  const TernarySurface surf = ternary_surface(s, grid, kTernaryMaxTheta, worker_count());
  Document d = base_document("ternary-surface", args);
  d.meta.emplace_back("state", s.label());
  d.meta.emplace_back("grid_rad", format_double(grid));
  d.meta.emplace_back("max_theta_rad", format_double(kTernaryMaxTheta));
  Table t{"surface", {"theta1", "theta2", "pe"}, {}};
  for (Eigen::Index a = 0; a < surf.thetas.size(); ++a) {
    for (Eigen::Index b = a + 1; b < surf.thetas.size(); ++b) {
      t.rows.push_back({num(surf.thetas(a)), num(surf.thetas(b)), num(surf.pe(a, b))});
    }
  }
  d.tables.push_back(std::move(t));
  return d;
}

Document cmd_ternary_optimize(const Common& c, const std::string& args) {
  const SpinState s = state_of(c);
  TernarySearchOptions opt;
  opt.coarse = grid_of(c, 5e-3);
  opt.threads = worker_count();
  const TernaryOptimum min_pe = ternary_optimize(s, opt);
  const TernaryOptimum max_mi = ternary_maximize_information(s, opt);
  Document d = base_document("ternary-optimize", args);
  d.meta.emplace_back("state", s.label());
  d.meta.emplace_back("coarse_grid_rad", format_double(opt.coarse));
  d.meta.emplace_back("refine_tol_rad", format_double(opt.tolerance));
  Table t{"optimum", {"criterion", "theta1", "theta2", "pe", "mi"}, {}};
  t.rows.push_back({text("min-pe"), num(min_pe.theta1), num(min_pe.theta2), num(min_pe.pe), num(min_pe.mi)});
  t.rows.push_back({text("max-mi"), num(max_mi.theta1), num(max_mi.theta2), num(max_mi.pe), num(max_mi.mi)});
  d.tables.push_back(std::move(t));
  return d;
}

Document cmd_table2(const Common& c, const std::string& args) {
  const double coarse = grid_of(c, 5e-3);
  const std::vector<Table2Row> rows = compute_table2(worker_count(), coarse);
  Document d = base_document("table2", args);
  d.meta.emplace_back("coarse_grid_rad", format_double(coarse));
  d.meta.emplace_back("pe_tolerance", "max(" + format_double(kReferencePeRelTol) + " relative, " +
                                          format_double(kReferencePeAbsTol) + " absolute)");
  d.meta.emplace_back("mi_tolerance_bits", format_double(kReferenceMiTol));
  d.meta.emplace_back("phase_tolerance_rad", format_double(kReferencePhaseTol));
  Table t{"table2",
          {"state", "spin", "theta1", "theta2", "pe_min", "mi", "ref_theta1", "ref_theta2", "ref_pe", "ref_mi",
           "pe_at_ref_phases", "mi_at_ref_phases", "deviates"},
          {}};
  for (const auto& r : rows) {
    const SpinState s = SpinState::from_photons(r.reference.n_a, r.reference.n_b);
    std::string dev;
    auto flag = [&dev](bool ok, const char* what) {
      if (!ok) dev += dev.empty() ? what : std::string(";") + what;
    };
    flag(r.pe_ok, "pe");
    flag(r.mi_ok, "mi");
    flag(r.phases_ok, "phases");
    t.rows.push_back({text(s.label()), text(s.spin_label()), num(r.computed.theta1), num(r.computed.theta2),
                      num(r.computed.pe), num(r.computed.mi), num(r.reference.theta1), num(r.reference.theta2),
                      num(r.reference.pe), num(r.reference.mi), num(r.at_reference_phases.pe),
                      num(r.at_reference_phases.mi), text(dev)});
  }
  d.tables.push_back(std::move(t));
  return d;
}

void add_report(Table& t, const ReadingReport& r) {
  std::string phases;
  for (double p : r.phases) phases += (phases.empty() ? "" : ";") + format_double(p);
  t.rows.push_back({text(r.probe), text(to_string(r.encoding)), text(r.placement), num(r.n_s), num(r.capacity),
                    r.pie ? num(*r.pie) : text(""), num(r.pe), text(phases)});
}

Document cmd_reading(const Common& c, const std::string& args) {
  const std::vector<double> grid = parse_real_list(c.ns_grid);
  Document d = base_document("reading", args);
  d.meta.emplace_back("ns_grid", c.ns_grid);
  d.meta.emplace_back("photon_accounting", "fsi: n_s = j; coherent bpsk: |alpha|^2 = n_s; ook: n_s photons probe every pixel");
  Table recv{"receivers", {"n_s_requested", "receiver", "n_s", "capacity_bits", "pie_bits_per_photon", "pe", "note"}, {}};
  for (const auto& r : receiver_comparison(grid)) {
    recv.rows.push_back({num(r.n_s_requested), text(r.receiver), num(r.n_s), num(r.capacity), num(r.pie), num(r.pe),
                         text(r.note)});
  }
  d.tables.push_back(std::move(recv));

  const bool have_probe = c.n_a >= 0 || c.n_b >= 0;
  if (!have_probe && (c.bpsk_sweep || !c.phases.empty())) throw UsageError("--bpsk-sweep and --phases need --na and --nb");
  if (have_probe) {
    const SpinState s = state_of(c);
    d.meta.emplace_back("probe", s.label());
    Table reports{"probe_reports", {"probe", "encoding", "placement", "n_s", "capacity_bits", "pie", "pe", "phases"}, {}};
    add_report(reports, bpsk_capacity(s));
    TernarySearchOptions opt;
    opt.threads = worker_count();
    add_report(reports, tpsk_report(s, std::nullopt, opt));
    add_report(reports, tpsk_min_error_report(s, opt));
    if (!c.phases.empty()) add_report(reports, tpsk_report(s, parse_angle_list(c.phases), opt));
    d.tables.push_back(std::move(reports));
    if (c.bpsk_sweep) {
      const SweepResult r = binary_sweep(s, grid_of(c, 1e-3));
      Table t{"bpsk_sweep", {"theta_rad", "pe", "mi"}, {}};
      for (Eigen::Index k = 0; k < r.thetas.size(); ++k) t.rows.push_back({num(r.thetas(k)), num(r.pe(k)), num(r.mi(k))});
      d.tables.push_back(std::move(t));
    }
  }
  return d;
}

Document cmd_oracle_check(const Common& c, const std::string& args, bool& healthy) {
  const int max_two_j = c.max_two_j > 0 ? c.max_two_j : 8;
  if (max_two_j > oracle::kOracleMaxTwoJ) throw UsageError("--max-two-j exceeds the oracle cap");
  Document d = base_document("oracle-check", args);
  d.meta.emplace_back("max_two_j", std::to_string(max_two_j));
  d.meta.emplace_back("theta_grid", "k*pi/16, k=0..32");
  d.meta.emplace_back("tolerance", format_double(kOracleTol));
  Table t{"oracle", {"n_a", "n_b", "max_abs_diff", "ok"}, {}};
  healthy = true;
  for (int two_j = 0; two_j <= max_two_j; ++two_j) {
    for (int n_a = two_j; n_a >= 0; --n_a) {
      const PhotonPair p{n_a, two_j - n_a};
      const SpinState s = SpinState::from_photons(p);
      double worst = 0.0;
      for (int k = 0; k <= 32; ++k) {
        const double theta = k * std::numbers::pi / 16;
        const Eigen::VectorXd diff = outcome_distribution(s, theta).probs - oracle::mzi_distribution(p, theta).probs;
        worst = std::max(worst, diff.cwiseAbs().maxCoeff());
      }
      const bool ok = worst <= kOracleTol;
      healthy = healthy && ok;
      t.rows.push_back({num(p.n_a), num(p.n_b), num(worst), num(ok ? 1 : 0)});
    }
  }
  d.tables.push_back(std::move(t));
  return d;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "Output path ('-' for standard output)");
}

void add_state(CLI::App* sub, Common& c, bool required) {
  auto* na = sub->add_option("--na", c.n_a, "Photons in input port a");
  auto* nb = sub->add_option("--nb", c.n_b, "Photons in input port b");
  if (required) {
    na->required();
    nb->required();
  }
}

}  // namespace

double parse_angle(const std::string& text) {
  std::string t = trim(text);
  if (t.size() > 3 && t.compare(t.size() - 3, 3, "deg") == 0) {
    return parse_real(t.substr(0, t.size() - 3)) * std::numbers::pi / 180.0;
  }
  return parse_real(t);
}

std::vector<double> parse_angle_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& p : split(text)) out.push_back(parse_angle(p));
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& p : split(text)) out.push_back(parse_real(p));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FSI_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return hw;
}

std::vector<Table2Row> compute_table2(unsigned threads, double coarse) {
  const auto refs = ternary_reference_table();
  std::vector<Table2Row> rows(refs.size());
  parallel_for(refs.size(), threads, [&](std::size_t i) {
    const TernaryReference& ref = refs[i];
    const SpinState s = SpinState::from_photons(ref.n_a, ref.n_b);
    TernarySearchOptions opt;
    opt.coarse = coarse;
    Table2Row r;
    r.reference = ref;
    r.computed = ternary_optimize(s, opt);
    r.at_reference_phases = ternary_summary(s, ref.theta1, ref.theta2);
    r.pe_ok = std::abs(r.computed.pe - ref.pe) <= std::max(kReferencePeRelTol * ref.pe, kReferencePeAbsTol);
    r.mi_ok = std::abs(r.computed.mi - ref.mi) <= kReferenceMiTol;
    r.phases_ok = std::abs(r.computed.theta1 - ref.theta1) <= kReferencePhaseTol &&
                  std::abs(r.computed.theta2 - ref.theta2) <= kReferencePhaseTol;
    rows[i] = r;
  });
  return rows;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fock-state interferometry: phase discrimination and quantum reading"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Common c;

  auto* sweep = app.add_subcommand("binary-sweep", "Binary (0, theta) error and information sweep");
  add_state(sweep, c, true);
  sweep->add_option("--grid", c.grid, "Grid resolution (rad, or suffix 'deg')");
  add_common(sweep, c);

  auto* sop = app.add_subcommand("sop-fit", "Smallest optimum phase vs 2j and power-law fit");
  sop->add_option("--max-two-j", c.max_two_j, "Largest total photon number (default 10)");
  add_common(sop, c);

  auto* surface = app.add_subcommand("ternary-surface", "Ternary error surface over (theta1, theta2)");
  add_state(surface, c, true);
  surface->add_option("--grid", c.grid, "Grid resolution (rad, or suffix 'deg')");
  add_common(surface, c);

  auto* topt = app.add_subcommand("ternary-optimize", "Optimal ternary phase placement");
  add_state(topt, c, true);
  topt->add_option("--grid", c.grid, "Coarse grid resolution (rad, or suffix 'deg')");
  add_common(topt, c);

  auto* t2 = app.add_subcommand("table2", "Ternary optima for every input with 2 <= j <= 6");
  t2->add_option("--grid", c.grid, "Coarse grid resolution (rad, or suffix 'deg')");
  add_common(t2, c);

  auto* reading = app.add_subcommand("reading", "Quantum-reading capacity and receiver comparison");
  add_state(reading, c, false);
  reading->add_option("--ns-grid", c.ns_grid, "Comma-separated signal photon numbers");
  reading->add_option("--phases", c.phases, "Fixed ternary phases, comma-separated (rad, or suffix 'deg')");
  reading->add_option("--grid", c.grid, "Resolution of --bpsk-sweep (rad, or suffix 'deg')");
  reading->add_flag("--bpsk-sweep", c.bpsk_sweep, "Also emit MI vs theta for the probe");
  add_common(reading, c);

  auto* ocheck = app.add_subcommand("oracle-check", "Compare rotation-matrix and Fock-space outcome distributions");
  ocheck->add_option("--max-two-j", c.max_two_j, "Largest total photon number (default 8)");
  add_common(ocheck, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const std::string args = invocation(argc, argv);
  reset_health_warnings();
  bool healthy = true;
  try {
    Document doc;
    if (*sweep) doc = cmd_binary_sweep(c, args);
    else if (*sop) doc = cmd_sop_fit(c, args);
    else if (*surface) doc = cmd_ternary_surface(c, args);
    else if (*topt) doc = cmd_ternary_optimize(c, args);
    else if (*t2) doc = cmd_table2(c, args);
    else if (*reading) doc = cmd_reading(c, args);
    else doc = cmd_oracle_check(c, args, healthy);
    write_document(doc, c, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::logic_error& e) {
    // DomainError and friends: the configuration asked for something invalid.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  if (!healthy || health_warning_count() > 0) {
    err << "error: numerical-health check failed\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace fsi::cli
