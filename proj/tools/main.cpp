#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hmf/commands.hpp"

namespace {

int emit(const hmf::cmd::CommandResult& res, const hmf::cmd::RunConfig& cfg,
         const std::string& out_path) {
  std::string rendered = res.render(cfg.format);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot open output file " << out_path << "\n";
      return hmf::cmd::kConfigError;
    }
    out << rendered;
  }
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert Eisenstein series, Kronecker series layers, and eigenform extraction "
               "over real quadratic fields of strict class number 1 (exact arithmetic)"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  hmf::cmd::RunConfig cfg;
  std::string out_path;
  app.add_option("--disc", cfg.disc, "field discriminant (1 for Q)")->capture_default_str();
  app.add_option("--kmax", cfg.kmax, "largest even weight")->capture_default_str();
  app.add_option("--trace-bound", cfg.trace_bound, "Fourier truncation by trace")
      ->capture_default_str();
  app.add_option("--xy-degree", cfg.xy_degree, "cap on stored monomial exponents (-1: kmax)");
  app.add_option("--format", cfg.format, "output format: text | json")->capture_default_str();
  app.add_option("--out", out_path, "write output to file instead of stdout");
  app.set_config("--config", "", "plain key=value configuration file");

  long k = 0, p = 0, q = 0;
  long q_order = 8, uv_degree = 8;

  CLI::App* zeta = app.add_subcommand("zeta", "table of zeta_F(1-k), even k <= kmax");
  CLI::App* eis = app.add_subcommand("eisenstein", "q-expansion of G_{F,k}");
  eis->add_option("--k", k, "weight")->required();
  CLI::App* expand =
      app.add_subcommand("kronecker-expand", "T-layers of F(T,-XYT) F(XT,YT), even k <= kmax");
  CLI::App* verify =
      app.add_subcommand("verify", "layer-by-layer identity and structure checks");
  CLI::App* extract = app.add_subcommand("extract", "cusp eigenform and period factors");
  extract->add_option("--k", k, "weight")->required();
  CLI::App* rc = app.add_subcommand("rc-check", "Rankin-Cohen consistency for one (k,p,q)");
  rc->add_option("--k", k, "weight")->required();
  rc->add_option("--p", p, "lower exponent")->required();
  rc->add_option("--q", q, "upper exponent")->required();
  CLI::App* oracle = app.add_subcommand("theta-oracle", "t = 1 theta quotient comparison");
  oracle->add_option("--q-order", q_order, "q truncation")->capture_default_str();
  oracle->add_option("--uv-degree", uv_degree, "total (u,v) degree")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : hmf::cmd::kConfigError;
  }

  try {
    cfg.validate();
    hmf::cmd::CommandResult res;
    if (zeta->parsed()) {
      res = hmf::cmd::cmd_zeta(cfg);
    } else if (eis->parsed()) {
      res = hmf::cmd::cmd_eisenstein(cfg, k);
    } else if (expand->parsed()) {
      res = hmf::cmd::cmd_kronecker_expand(cfg);
    } else if (verify->parsed()) {
      res = hmf::cmd::cmd_verify(cfg);
    } else if (extract->parsed()) {
      res = hmf::cmd::cmd_extract(cfg, k);
    } else if (rc->parsed()) {
      res = hmf::cmd::cmd_rc_check(cfg, k, p, q);
    } else if (oracle->parsed()) {
      res = hmf::cmd::cmd_theta_oracle(cfg, q_order, uv_degree);
    }
    return emit(res, cfg, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return hmf::cmd::kConfigError;
  } catch (const std::domain_error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return hmf::cmd::kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hmf::cmd::kUnsupportedCase;
  }
}
