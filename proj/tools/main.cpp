// Command-line front end: evaluates the generalized logistic family, its
// derivative pulse and the closed-form spectrum over grids, emits CSV/JSON
// tables for plotting, and runs the self-verification residual suite.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "glogis/logistic.hpp"
#include "glogis/spectral.hpp"
#include "table_writers.hpp"
#include "verify_suite.hpp"

namespace {

using glogis::FrequencyGrid;
using glogis::SigmoidParams;
using glogis::SpectrumTable;
using glogis::TimeFunction;
using glogis::cli::NamedColumn;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitWriteFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailure = 3;

std::vector<SigmoidParams> figure_shape_sets() {
  std::vector<SigmoidParams> sets;
  for (double nu : {1.0, 4.0, 8.0, 12.0, 1.0 / 4.0, 1.0 / 8.0, 1.0 / 12.0}) {
    sets.emplace_back(1.0, 2.0, nu);
  }
  return sets;
}

std::vector<SigmoidParams> parametric_shape_sets() {
  std::vector<SigmoidParams> sets;
  for (double nu : {1.0, 4.0, 8.0, 9.0, 10.0, 11.0, 12.0, 1.0 / 4.0, 1.0 / 8.0,
                    1.0 / 9.0, 1.0 / 10.0, 1.0 / 11.0, 1.0 / 12.0}) {
    sets.emplace_back(1.0, 2.0, nu);
  }
  return sets;
}

std::optional<double> parse_number(const std::string& s) {
  double value = 0.0;
  const char* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, value);
  if (res.ec != std::errc{} || res.ptr != end) return std::nullopt;
  return value;
}

// "k,beta,nu" -> SigmoidParams; nullopt on malformed input.
std::optional<SigmoidParams> parse_curve_triple(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = spec.find(',', start);
    if (pos == std::string::npos) {
      parts.push_back(spec.substr(start));
      break;
    }
    parts.push_back(spec.substr(start, pos - start));
    start = pos + 1;
  }
  if (parts.size() != 3) return std::nullopt;
  const auto k = parse_number(parts[0]);
  const auto beta = parse_number(parts[1]);
  const auto nu = parse_number(parts[2]);
  if (!k || !beta || !nu) return std::nullopt;
  try {
    return SigmoidParams(*k, *beta, *nu);
  } catch (const glogis::ArgumentError&) {
    return std::nullopt;
  }
}

std::optional<std::vector<SigmoidParams>> resolve_curves(
    const std::vector<std::string>& specs, std::vector<SigmoidParams> defaults) {
  if (specs.empty()) return defaults;
  std::vector<SigmoidParams> sets;
  for (const std::string& s : specs) {
    const auto p = parse_curve_triple(s);
    if (!p) {
      std::cerr << "glogis: invalid --curve '" << s
                << "' (expected k,beta,nu with k,beta,nu > 0)\n";
      return std::nullopt;
    }
    sets.push_back(*p);
  }
  return sets;
}

template <typename WriteFn>
int with_output(const std::string& path, WriteFn&& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    return std::cout ? kExitOk : kExitWriteFailure;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "glogis: cannot open output file: " << path << "\n";
    return kExitWriteFailure;
  }
  write(out);
  out.flush();
  if (!out) {
    std::cerr << "glogis: write failure: " << path << "\n";
    return kExitWriteFailure;
  }
  return kExitOk;
}

json params_json(const SigmoidParams& p) {
  return json{{"k", p.k}, {"beta", p.beta}, {"nu", p.nu}};
}

int run_time_domain(const std::vector<SigmoidParams>& sets, double t_min, double t_max,
                    std::size_t n, TimeFunction function, const std::string& format,
                    const std::string& output) {
  std::vector<glogis::TimeSeries> series;
  series.reserve(sets.size());
  for (const SigmoidParams& p : sets) {
    series.push_back(glogis::sample_time_domain(p, t_min, t_max, n, function));
  }
  const std::string prefix = function == TimeFunction::curve ? "y(" : "f(";

  if (format == "json") {
    json doc;
    doc["subcommand"] = "time-domain";
    doc["function"] = function == TimeFunction::curve ? "curve" : "derivative";
    doc["grid"] = json{{"t_min", t_min}, {"t_max", t_max}, {"n", n}};
    doc["t"] = series.front().t;
    doc["curves"] = json::array();
    for (const auto& ts : series) {
      doc["curves"].push_back(json{{"params", params_json(ts.params)},
                                   {"values", ts.values}});
    }
    return with_output(output, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
  }

  std::vector<NamedColumn> columns;
  columns.push_back(NamedColumn{"t", series.front().t});
  for (const auto& ts : series) {
    columns.push_back(
        NamedColumn{prefix + glogis::cli::param_label(ts.params) + ")", ts.values});
  }
  return with_output(output,
                     [&](std::ostream& out) { glogis::cli::write_csv(out, columns); });
}

int run_spectrum(const std::vector<SigmoidParams>& sets, const FrequencyGrid& grid,
                 const std::string& format, const std::string& output) {
  std::vector<SpectrumTable> tables;
  tables.reserve(sets.size());
  for (const SigmoidParams& p : sets) {
    tables.push_back(glogis::sample_spectrum(p, grid));
  }

  if (format == "json") {
    json doc;
    doc["subcommand"] = "spectrum";
    doc["grid"] = json{{"omega_min", grid.omega_min},
                       {"omega_max", grid.omega_max},
                       {"n", grid.n}};
    doc["omega"] = tables.front().omega;
    doc["curves"] = json::array();
    for (const auto& tab : tables) {
      json entry;
      entry["params"] = params_json(tab.params);
      json re = json::array(), im = json::array(), mag = json::array(),
           phase = json::array();
      for (std::size_t i = 0; i < tab.F.size(); ++i) {
        re.push_back(tab.F[i].real());
        im.push_back(tab.F[i].imag());
        mag.push_back(tab.magnitude(i));
        phase.push_back(tab.phase(i));
      }
      entry["re"] = std::move(re);
      entry["im"] = std::move(im);
      entry["magnitude"] = std::move(mag);
      entry["phase"] = std::move(phase);
      doc["curves"].push_back(std::move(entry));
    }
    return with_output(output, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
  }

  std::vector<NamedColumn> columns;
  columns.push_back(NamedColumn{"omega", tables.front().omega});
  for (const auto& tab : tables) {
    const std::string label = glogis::cli::param_label(tab.params);
    NamedColumn re{"re(" + label + ")", {}}, im{"im(" + label + ")", {}},
        mag{"mag(" + label + ")", {}}, phase{"phase(" + label + ")", {}};
    for (std::size_t i = 0; i < tab.F.size(); ++i) {
      re.values.push_back(tab.F[i].real());
      im.values.push_back(tab.F[i].imag());
      mag.values.push_back(tab.magnitude(i));
      phase.values.push_back(tab.phase(i));
    }
    columns.push_back(std::move(re));
    columns.push_back(std::move(im));
    columns.push_back(std::move(mag));
    columns.push_back(std::move(phase));
  }
  return with_output(output,
                     [&](std::ostream& out) { glogis::cli::write_csv(out, columns); });
}

int run_parametric(const std::vector<SigmoidParams>& sets, const FrequencyGrid& grid,
                   const std::string& format, const std::string& output) {
  std::vector<SpectrumTable> tables;
  tables.reserve(sets.size());
  for (const SigmoidParams& p : sets) {
    tables.push_back(glogis::sample_spectrum(p, grid));
  }

  if (format == "json") {
    json doc;
    doc["subcommand"] = "parametric";
    doc["grid"] = json{{"omega_min", grid.omega_min},
                       {"omega_max", grid.omega_max},
                       {"n", grid.n}};
    doc["omega"] = tables.front().omega;
    doc["curves"] = json::array();
    for (const auto& tab : tables) {
      json re = json::array(), im = json::array();
      for (const auto& F : tab.F) {
        re.push_back(F.real());
        im.push_back(F.imag());
      }
      doc["curves"].push_back(json{{"params", params_json(tab.params)},
                                   {"re", std::move(re)},
                                   {"im", std::move(im)}});
    }
    return with_output(output, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
  }

  std::vector<NamedColumn> columns;
  for (const auto& tab : tables) {
    const std::string label = glogis::cli::param_label(tab.params);
    NamedColumn re{"re(" + label + ")", {}}, im{"im(" + label + ")", {}};
    for (const auto& F : tab.F) {
      re.values.push_back(F.real());
      im.values.push_back(F.imag());
    }
    columns.push_back(std::move(re));
    columns.push_back(std::move(im));
  }
  return with_output(output,
                     [&](std::ostream& out) { glogis::cli::write_csv(out, columns); });
}

int run_verify(bool as_json, const std::string& output, bool flip_shift_sign) {
  glogis::cli::VerifyOptions opts;
  opts.flip_shift_sign = flip_shift_sign;
  const auto checks = glogis::cli::run_verification(opts);
  bool all_pass = true;
  for (const auto& c : checks) all_pass &= c.pass;

  int rc;
  if (as_json) {
    json doc;
    doc["subcommand"] = "verify";
    doc["pass"] = all_pass;
    doc["checks"] = json::array();
    for (const auto& c : checks) {
      doc["checks"].push_back(json{{"name", c.name},
                                   {"max_residual", c.max_residual},
                                   {"threshold", c.threshold},
                                   {"pass", c.pass}});
    }
    rc = with_output(output, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
  } else {
    rc = with_output(output, [&](std::ostream& out) {
      for (const auto& c : checks) {
        out << std::left << std::setw(34) << c.name << " max residual "
            << std::scientific << std::setprecision(3) << c.max_residual
            << "  threshold " << std::setprecision(1) << c.threshold << "  "
            << (c.pass ? "PASS" : "FAIL") << '\n';
      }
      out << "overall: " << (all_pass ? "PASS" : "FAIL") << '\n';
    });
  }
  if (rc != kExitOk) return rc;
  return all_pass ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized logistic growth curves, their derivative pulses and "
               "closed-form spectra"};
  app.require_subcommand(1);

  std::vector<std::string> curve_specs;
  std::string format = "csv";
  std::string output;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--curve", curve_specs,
                    "Parameter triple k,beta,nu (repeatable; default: the "
                    "figure families k=1, beta=2)");
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output,-o", output, "Write to file instead of stdout");
  };

  // time-domain
  double t_min = -6.0, t_max = 6.0;
  std::size_t t_samples = 1201;
  std::string function = "derivative";
  CLI::App* td = app.add_subcommand("time-domain",
                                    "Sample the curve or its derivative pulse");
  add_common(td);
  td->add_option("--t-min", t_min, "Left edge of the time grid");
  td->add_option("--t-max", t_max, "Right edge of the time grid");
  td->add_option("--samples,-n", t_samples, "Number of grid points");
  td->add_option("--function", function, "Which function to sample")
      ->check(CLI::IsMember({"curve", "derivative"}));

  // spectrum
  double w_min = -15.0, w_max = 15.0;
  std::size_t w_samples = 1201;
  CLI::App* sp = app.add_subcommand("spectrum",
                                    "Sample the transform: re, im, magnitude, phase");
  add_common(sp);
  sp->add_option("--omega-min", w_min, "Left edge of the frequency grid");
  sp->add_option("--omega-max", w_max, "Right edge of the frequency grid");
  sp->add_option("--samples,-n", w_samples, "Number of grid points");

  // parametric
  double pw_min = -30.0, pw_max = 30.0;
  std::size_t pw_samples = 2401;
  CLI::App* pm = app.add_subcommand(
      "parametric", "Emit (re, im) traces of the transform ordered by omega");
  add_common(pm);
  pm->add_option("--omega-min", pw_min, "Left edge of the frequency grid");
  pm->add_option("--omega-max", pw_max, "Right edge of the frequency grid");
  pm->add_option("--samples,-n", pw_samples, "Number of grid points");

  // verify
  bool verify_json = false;
  bool flip_shift_sign = false;
  CLI::App* vf = app.add_subcommand("verify",
                                    "Run the identity/oracle residual suite");
  vf->add_flag("--json", verify_json, "Machine-readable report");
  vf->add_option("--output,-o", output, "Write the report to a file");
  vf->add_flag("--flip-shift-sign", flip_shift_sign)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (td->parsed()) {
      const auto sets = resolve_curves(curve_specs, figure_shape_sets());
      if (!sets) return kExitUsage;
      if (!(t_min < t_max) || t_samples < 2) {
        std::cerr << "glogis: invalid time grid\n";
        return kExitUsage;
      }
      const TimeFunction fn =
          function == "curve" ? TimeFunction::curve : TimeFunction::derivative;
      return run_time_domain(*sets, t_min, t_max, t_samples, fn, format, output);
    }
    if (sp->parsed()) {
      const auto sets = resolve_curves(curve_specs, figure_shape_sets());
      if (!sets) return kExitUsage;
      return run_spectrum(*sets, FrequencyGrid(w_min, w_max, w_samples), format, output);
    }
    if (pm->parsed()) {
      const auto sets = resolve_curves(curve_specs, parametric_shape_sets());
      if (!sets) return kExitUsage;
      return run_parametric(*sets, FrequencyGrid(pw_min, pw_max, pw_samples), format,
                            output);
    }
    if (vf->parsed()) {
      return run_verify(verify_json, output, flip_shift_sign);
    }
  } catch (const glogis::ArgumentError& e) {
    std::cerr << "glogis: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
