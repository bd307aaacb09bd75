#pragma once

// Shared helpers for the unit and acceptance suites: subprocess capture,
// CSV parsing of the CLI output, and the Parseval energy integrals.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "glogis/logistic.hpp"
#include "glogis/quadrature.hpp"
#include "glogis/spectral.hpp"

namespace testsupport {

struct RunResult {
  int exit_code;
  std::string output;
};

inline RunResult run_command(const std::string& cmd) {
  RunResult res{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return res;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    res.output.append(buf, n);
  }
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Rows of comma-separated fields; the trailing newline does not produce a row.
inline std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  for (const std::string& line : split(text, '\n')) {
    if (line.empty()) continue;
    rows.push_back(split(line, ','));
  }
  return rows;
}

// \int f(t)^2 dt by adaptive quadrature over the tail-bounded window.
inline double time_energy(const glogis::SigmoidParams& p) {
  const auto tb = glogis::tail_bounds(p, 1e-13);
  glogis::QuadratureConfig cfg;
  return glogis::integrate_adaptive_real(
      [&](double t) {
        const double f = glogis::derivative(p, t);
        return f * f;
      },
      tb.t_lower, tb.t_upper, cfg);
}

// \int |F(omega)|^2 domega with the window grown until the exponentially
// decaying integrand is negligible.
inline double frequency_energy(const glogis::SigmoidParams& p) {
  double cut = 10.0 * p.beta;
  while (cut < 400.0 * p.beta) {
    const double mag = std::abs(glogis::fourier_closed_form(p, cut));
    if (mag * mag * cut < 1e-12) break;
    cut *= 1.5;
  }
  glogis::QuadratureConfig cfg;
  return glogis::integrate_adaptive_real(
      [&](double w) {
        const double mag = std::abs(glogis::fourier_closed_form(p, w));
        return mag * mag;
      },
      -cut, cut, cfg);
}

}  // namespace testsupport
