#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qb {

struct RunConfig {
  std::vector<std::string> inputs;
  /// "suq2", "u1", "trivial-base" or "podles-line"; `line_n` holds the power.
  std::string preset;
  int line_n = 1;
  std::optional<std::size_t> max_degree;
  /// Rational specialization of q; unset means symbolic only.
  std::optional<mpq_class> q0;
  std::string functional = "constant-term";
  std::string corep;
  std::string connection;
  std::string map = "collapse";
  std::string output;
};

/// Identity checked by a report line, as a short formula; empty if unknown.
std::string formula_tag(const std::string& check_name);

/// Runs one command. `args` excludes the program name.
/// Returns 0 when every check passes, 1 on a failed check, 2 on bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qb
