#include "table_writers.hpp"

#include <array>
#include <charconv>

namespace glogis::cli {

namespace {

std::string to_chars_str(double v, int precision) {
  std::array<char, 64> buf;
  std::to_chars_result res =
      precision > 0
          ? std::to_chars(buf.data(), buf.data() + buf.size(), v,
                          std::chars_format::general, precision)
          : std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

}  // namespace

std::string format_double(double v) { return to_chars_str(v, 17); }

std::string format_double_shortest(double v) { return to_chars_str(v, 0); }

std::string param_label(const SigmoidParams& p) {
  return "k=" + format_double_shortest(p.k) + ";beta=" + format_double_shortest(p.beta) +
         ";nu=" + format_double_shortest(p.nu);
}

void write_csv(std::ostream& out, const std::vector<NamedColumn>& columns) {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out << (c ? "," : "") << columns[c].name;
  }
  out << '\n';
  const std::size_t rows = columns.empty() ? 0 : columns.front().values.size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out << (c ? "," : "") << format_double(columns[c].values[r]);
    }
    out << '\n';
  }
}

}  // namespace glogis::cli
