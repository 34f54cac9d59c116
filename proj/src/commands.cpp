#include "hmf/commands.hpp"

#include <sstream>
#include <stdexcept>

#include "hmf/arithmetic.hpp"
#include "hmf/periods.hpp"
#include "hmf/theta.hpp"

namespace hmf::cmd {

using nlohmann::json;
using periods::EigenformExtraction;
using series::FourierSeries;
using series::Monomial;
using series::PolySeries;

namespace {

json rat_json(const Rat& r) { return rat_str(r); }

json fe_json(const field::FieldElement& x) {
  return json::array({rat_str(x.a), rat_str(x.b)});
}

json nu_json(const field::NuIndex& nu) { return json::array({nu.m, nu.n}); }

json series_json(const FourierSeries& s) {
  json terms = json::array();
  for (const auto& [nu, c] : s.terms) {
    terms.push_back(json{{"nu", nu_json(nu)}, {"a", fe_json(c)}});
  }
  return json{{"constant", fe_json(s.constant)}, {"terms", terms}};
}

json mono_json(const Monomial& m, int t) {
  if (t == 1) return json{{"x", json::array({m.x[0]})}, {"y", json::array({m.y[0]})}};
  return json{{"x", json::array({m.x[0], m.x[1]})}, {"y", json::array({m.y[0], m.y[1]})}};
}

json poly_json(const PolySeries& p, int t) {
  json monos = json::array();
  for (const auto& [m, s] : p.mono) {
    monos.push_back(json{{"monomial", mono_json(m, t)}, {"series", series_json(s)}});
  }
  return monos;
}

json header_json(const RunConfig& cfg) {
  return json{{"field", {{"disc", cfg.disc}}},
              {"truncation",
               {{"trace_bound", cfg.trace_bound},
                {"kmax", cfg.kmax},
                {"xy_degree", cfg.effective_xy_degree()}}}};
}

kron::Bounds bounds_of(const RunConfig& cfg) {
  return kron::Bounds{cfg.trace_bound, cfg.effective_xy_degree()};
}

// Structural report for one grade: the residual after removing the
// Eisenstein layer must look like a sum of cusp eigenform blocks.
struct GradeCheck {
  long k = 0;
  long rank = 0;
  bool eis_boundary_ok = true;   // pure-Eisenstein monomials cancel exactly
  bool constants_ok = true;      // residual has no constant terms
  bool parallel_ok = true;
  bool rational_ok = true;
  bool factor_ok = true;         // rank-1 factorization exact when rank == 1
  std::vector<std::string> diffs;

  bool ok() const {
    return eis_boundary_ok && constants_ok && parallel_ok && rational_ok && factor_ok;
  }
};

GradeCheck check_grade(long k, const RunConfig& cfg) {
  int t = field::degree(cfg.disc);
  GradeCheck gc;
  gc.k = k;
  PolySeries cusp = periods::extract_cusp(k, cfg.disc, bounds_of(cfg));
  cusp.prune();
  for (const auto& [m, s] : cusp.mono) {
    bool boundary = false;
    for (long e : {m.x[0], m.x[1], m.y[0], m.y[1]}) {
      if (e < 0 || e >= k - 1) boundary = true;
    }
    if (t == 1) boundary = m.x[0] < 0 || m.x[0] >= k - 1 || m.y[0] < 0 || m.y[0] >= k - 1;
    if (boundary) {
      gc.eis_boundary_ok = false;
      std::ostringstream os;
      os << "k=" << k << " " << m.str(t) << ": nonzero boundary residual";
      gc.diffs.push_back(os.str());
    }
    if (!s.constant.is_zero()) gc.constants_ok = false;
    if (!series::exp_parallel(m.x, t) || !series::exp_parallel(m.y, t)) gc.parallel_ok = false;
    if (!s.is_rational()) gc.rational_ok = false;
  }
  EigenformExtraction ex = periods::extract_eigenform(k, cfg.disc, bounds_of(cfg));
  gc.rank = ex.rank;
  if (ex.status == EigenformExtraction::Status::rank_one) {
    gc.factor_ok = ex.factor_split_consistent && ex.factors_rational;
    if (!gc.factor_ok)
      gc.diffs.push_back("k=" + std::to_string(k) +
                         ": rank-1 factor does not split into even/odd parts");
  }
  if (!gc.constants_ok)
    gc.diffs.push_back("k=" + std::to_string(k) + ": residual has a constant term");
  if (!gc.parallel_ok)
    gc.diffs.push_back("k=" + std::to_string(k) + ": non-parallel residual monomial");
  if (!gc.rational_ok)
    gc.diffs.push_back("k=" + std::to_string(k) + ": irrational residual coefficient");
  return gc;
}

}  // namespace

void RunConfig::validate() const {
  if (!arith::disc_supported(disc))
    throw std::invalid_argument("unsupported discriminant " + std::to_string(disc));
  if (kmax < 2 || kmax % 2 != 0)
    throw std::invalid_argument("kmax must be an even integer >= 2");
  if (trace_bound < 1) throw std::invalid_argument("trace_bound must be >= 1");
  if (format != "text" && format != "json")
    throw std::invalid_argument("format must be 'text' or 'json'");
}

std::string CommandResult::render(const std::string& format) const {
  if (format == "json") return json.dump(2) + "\n";
  return text;
}

CommandResult cmd_zeta(const RunConfig& cfg) {
  CommandResult res;
  std::ostringstream os;
  json rows = json::array();
  os << "zeta_F(1-k) for disc " << cfg.disc << "\n";
  for (long k = 2; k <= cfg.kmax; k += 2) {
    Rat z = arith::zeta_f_neg(k, cfg.disc);
    os << "  k=" << k << "  " << rat_str(z) << "\n";
    rows.push_back(json{{"k", k}, {"zeta_1_minus_k", rat_json(z)}});
  }
  res.text = os.str();
  res.json = header_json(cfg);
  res.json["results"] = rows;
  return res;
}

CommandResult cmd_eisenstein(const RunConfig& cfg, long k) {
  CommandResult res;
  FourierSeries g = series::eisenstein(k, cfg.disc, cfg.trace_bound);
  std::ostringstream os;
  os << "G_{F," << k << "} over disc " << cfg.disc << ", trace <= " << cfg.trace_bound << "\n";
  os << "  constant " << rat_str(g.constant.a) << "\n";
  for (const auto& [nu, c] : g.terms) {
    os << "  nu=[" << nu.m << "," << nu.n << "]  " << rat_str(c.a) << "\n";
  }
  res.text = os.str();
  res.json = header_json(cfg);
  res.json["results"] = json::array({json{{"k", k}, {"series", series_json(g)}}});
  return res;
}

CommandResult cmd_kronecker_expand(const RunConfig& cfg) {
  CommandResult res;
  int t = field::degree(cfg.disc);
  std::ostringstream os;
  json rows = json::array();
  for (long k = 2; k <= cfg.kmax; k += 2) {
    PolySeries layer = kron::product_layer(k, cfg.disc, bounds_of(cfg));
    os << "grade k=" << k << ": " << layer.mono.size() << " monomials\n";
    for (const auto& [m, s] : layer.mono) {
      os << "  " << m.str(t) << "\n";
    }
    rows.push_back(json{{"k", k}, {"layer", poly_json(layer, t)}});
  }
  res.text = os.str();
  res.json = header_json(cfg);
  res.json["results"] = rows;
  return res;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  CommandResult res;
  std::ostringstream os;
  json rows = json::array();
  bool all_ok = true;
  for (long k = 2; k <= cfg.kmax; k += 2) {
    GradeCheck gc = check_grade(k, cfg);
    all_ok = all_ok && gc.ok();
    os << "k=" << gc.k << "  rank=" << gc.rank << "  "
       << (gc.ok() ? "ok" : "MISMATCH") << "\n";
    for (const auto& d : gc.diffs) os << "    " << d << "\n";
    rows.push_back(json{{"k", gc.k},
                        {"rank", gc.rank},
                        {"eis_boundary_ok", gc.eis_boundary_ok},
                        {"constants_ok", gc.constants_ok},
                        {"parallel_ok", gc.parallel_ok},
                        {"rational_ok", gc.rational_ok},
                        {"factor_ok", gc.factor_ok},
                        {"diffs", gc.diffs}});
  }
  // odd grades are reported as diagnostics; the even-weight table makes them
  // empty and nothing is asserted about them
  json odd_rows = json::array();
  for (long k = 3; k < cfg.kmax; k += 2) {
    PolySeries layer = kron::product_layer(k, cfg.disc, bounds_of(cfg));
    layer.prune();
    odd_rows.push_back(json{{"k", k}, {"zero", layer.is_zero()}});
  }
  os << (all_ok ? "verified" : "verification FAILED") << "\n";
  res.text = os.str();
  res.json = header_json(cfg);
  res.json["results"] = rows;
  res.json["odd_layer_diagnostics"] = odd_rows;
  res.exit_code = all_ok ? kOk : kVerifyMismatch;
  return res;
}

CommandResult cmd_extract(const RunConfig& cfg, long k) {
  CommandResult res;
  EigenformExtraction ex = periods::extract_eigenform(k, cfg.disc, bounds_of(cfg));
  std::ostringstream os;
  json result;
  result["k"] = k;
  result["rank"] = ex.rank;
  if (ex.status == EigenformExtraction::Status::unsupported_rank) {
    os << "rank " << ex.rank << " cusp space: extraction unsupported\n";
    result["status"] = "unsupported_rank";
    res.exit_code = kUnsupportedCase;
  } else if (ex.status == EigenformExtraction::Status::no_cusp_forms) {
    os << "no cusp forms at weight " << k << "\n";
    result["status"] = "empty";
  } else {
    os << "eigenform at weight " << k << " (first orbit coefficient = 1)\n";
    for (const auto& [nu, c] : ex.eigenform.terms) {
      os << "  nu=[" << nu.m << "," << nu.n << "]  " << c.str() << "\n";
    }
    os << "even factor: " << ex.even_factor.str() << "\n";
    os << "odd factor:  " << ex.odd_factor.str() << "\n";
    result["status"] = "rank_one";
    result["eigenform"] = series_json(ex.eigenform);
    json even = json::array(), odd = json::array();
    for (const auto& [n, c] : ex.even_factor.coeff)
      even.push_back(json{{"n", n}, {"c", rat_json(c)}});
    for (const auto& [n, c] : ex.odd_factor.coeff)
      odd.push_back(json{{"n", n}, {"c", rat_json(c)}});
    result["even_factor"] = even;
    result["odd_factor"] = odd;
    result["factors_rational"] = ex.factors_rational;
  }
  res.text = os.str();
  res.json = header_json(cfg);
  res.json["results"] = json::array({result});
  return res;
}

CommandResult cmd_rc_check(const RunConfig& cfg, long k, long p, long q) {
  CommandResult res;
  periods::RCReport rep = periods::rc_consistency(k, p, q, cfg.disc, bounds_of(cfg));
  std::ostringstream os;
  os << "rc-check k=" << k << " p=" << p << " q=" << q << ": "
     << (rep.zero ? "zero diff" : "NONZERO diff") << "\n";
  if (!rep.zero) {
    for (const auto& [nu, c] : rep.diff.terms)
      os << "  nu=[" << nu.m << "," << nu.n << "]  " << c.str() << "\n";
  }
  res.text = os.str();
  res.json = header_json(cfg);
  res.json["results"] = json::array(
      {json{{"k", k}, {"p", p}, {"q", q}, {"zero", rep.zero}, {"diff", series_json(rep.diff)}}});
  res.exit_code = rep.zero ? kOk : kVerifyMismatch;
  return res;
}

CommandResult cmd_theta_oracle(const RunConfig& cfg, long q_order, long uv_degree) {
  CommandResult res;
  theta::OracleReport rep = theta::theta_oracle_compare(q_order, uv_degree);
  std::ostringstream os;
  os << (rep.equal ? "EQUAL" : "MISMATCH") << "\n";
  for (const auto& m : rep.mismatches) os << "  " << m << "\n";
  res.text = os.str();
  res.json = header_json(cfg);
  res.json["results"] = json::array({json{{"q_order", q_order},
                                          {"uv_degree", uv_degree},
                                          {"equal", rep.equal},
                                          {"mismatches", rep.mismatches}}});
  res.exit_code = rep.equal ? kOk : kVerifyMismatch;
  return res;
}

}  // namespace hmf::cmd
