#pragma once

#include <string>

#include "json.hpp"

namespace hmf::cmd {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kVerifyMismatch = 1,
  kConfigError = 2,
  kUnsupportedCase = 3,
};

struct RunConfig {
  int disc = 5;
  long kmax = 8;
  long trace_bound = 4;
  long xy_degree = -1;  // -1: follow kmax
  std::string format = "text";

  long effective_xy_degree() const { return xy_degree < 0 ? kmax : xy_degree; }
  void validate() const;  // throws std::invalid_argument on bad values
};

struct CommandResult {
  int exit_code = kOk;
  std::string text;          // human-readable rendering
  nlohmann::json json;       // machine rendering, schema documented in README

  std::string render(const std::string& format) const;
};

CommandResult cmd_zeta(const RunConfig& cfg);
CommandResult cmd_eisenstein(const RunConfig& cfg, long k);
CommandResult cmd_kronecker_expand(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_extract(const RunConfig& cfg, long k);
CommandResult cmd_rc_check(const RunConfig& cfg, long k, long p, long q);
CommandResult cmd_theta_oracle(const RunConfig& cfg, long q_order, long uv_degree);

}  // namespace hmf::cmd
