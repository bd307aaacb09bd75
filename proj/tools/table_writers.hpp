#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "glogis/logistic.hpp"

namespace glogis::cli {

/// Locale-independent decimal rendering, 17 significant digits.
std::string format_double(double v);

/// Shortest round-trip rendering (used in column labels).
std::string format_double_shortest(double v);

/// "k=...;beta=...;nu=..." with shortest round-trip values. Semicolons keep
/// the label a single CSV field.
std::string param_label(const SigmoidParams& p);

struct NamedColumn {
  std::string name;
  std::vector<double> values;
};

/// Header row then one row per sample, comma-delimited, '\n' line ends.
void write_csv(std::ostream& out, const std::vector<NamedColumn>& columns);

}  // namespace glogis::cli
