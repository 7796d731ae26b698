// cyclotomix: compute cyclotomic and inverse cyclotomic coefficients, gap
// and jump statistics, numerical-semigroup views, census tables, and the
// analytic constants; `verify` runs the theorem-check suites.
//
// Exit codes: 0 success, 1 a theorem check came out false, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cyclotomix/analytic.hpp"
#include "cyclotomix/census.hpp"
#include "cyclotomix/gaps.hpp"
#include "cyclotomix/jumps.hpp"
#include "cyclotomix/poly.hpp"
#include "cyclotomix/semigroup.hpp"
#include "cyclotomix/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace cyclotomix;

struct GlobalOpts {
  std::string format = "json";  // json | csv
  std::int64_t budget = kDefaultDegreeBudget;
  int threads = 0;
  std::uint64_t seed = 20250808;
  std::string out;  // empty = stdout
};

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream file(g.out);
  if (!file) throw std::runtime_error("cannot open output file: " + g.out);
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
}

json poly_json(const IntPolynomial& f, std::optional<std::int64_t> n) {
  json obj;
  if (n) obj["n"] = *n;
  obj["coeffs"] = f.coeffs();
  return obj;
}

std::string poly_sparse(const IntPolynomial& f) {
  std::ostringstream os;
  const Support s = support_of(f);
  for (std::size_t i = 0; i < s.exponents.size(); ++i)
    os << s.exponents[i] << ":" << s.signs[i] << "\n";
  return os.str();
}

std::string render_verify(const std::vector<CriterionResult>& results, int& failures) {
  std::ostringstream os;
  for (const auto& res : results) {
    if (!res.pass) ++failures;
    os << (res.pass ? "[PASS]" : "[FAIL]");
    if (res.id > 0) os << " criterion " << res.id;
    os << " " << res.name << ": " << res.detail << "\n";
  }
  return os.str();
}

std::uint64_t to_u64(double v, const char* what) {
  if (!(v >= 0 && v < 1.9e18)) throw CLI::ValidationError(std::string(what) + " out of range");
  return static_cast<std::uint64_t>(v);
}

int run(std::vector<std::string> args) {
  GlobalOpts g;
  CLI::App app{"cyclotomic coefficient gaps, jumps, and census toolkit", "cyclotomix"};
  app.require_subcommand(1);
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--budget", g.budget, "degree budget for any single polynomial")
      ->check(CLI::Range(static_cast<std::int64_t>(1000), static_cast<std::int64_t>(1) << 40))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "worker cap (default: CYCLOTOMIX_THREADS or hardware)");
  app.add_option("--seed", g.seed, "seed for randomized property checks")->capture_default_str();
  app.add_option("--out", g.out, "write output to a file instead of stdout");
  app.fallthrough(true);  // global flags may follow the subcommand

  // phi / psi / incl-excl -------------------------------------------------
  std::int64_t phi_n = 0;
  auto* cmd_phi = app.add_subcommand("phi", "coefficients of Phi_n");
  cmd_phi->add_option("n", phi_n, "index n >= 1")->required();

  std::int64_t psi_n = 0;
  auto* cmd_psi = app.add_subcommand("psi", "coefficients of Psi_n = (Z^n-1)/Phi_n");
  cmd_psi->add_option("n", psi_n, "index n >= 1")->required();

  std::int64_t ie_a = 0, ie_b = 0;
  auto* cmd_ie = app.add_subcommand("incl-excl", "binary inclusion-exclusion polynomial P_<a,b>");
  cmd_ie->add_option("a", ie_a)->required();
  cmd_ie->add_option("b", ie_b)->required();

  // gaps ------------------------------------------------------------------
  std::vector<std::int64_t> gaps_pqr;
  std::int64_t gaps_phi_n = 0;
  auto* cmd_gaps = app.add_subcommand("gaps", "gap report for Phi_n or the ternary Psi check");
  cmd_gaps->add_option("primes", gaps_pqr, "odd primes p < q < r: ternary Psi_n gap check")
      ->expected(0, 3);
  cmd_gaps->add_option("--phi", gaps_phi_n, "report the maximum gap of Phi_n instead");

  // semigroup ---------------------------------------------------------------
  std::int64_t sg_a = 0, sg_b = 0;
  auto* cmd_sg = app.add_subcommand("semigroup", "numerical semigroup <a,b> report");
  cmd_sg->add_option("a", sg_a)->required();
  cmd_sg->add_option("b", sg_b)->required();

  // jumps (report + family + search; pre-routed below) ---------------------
  std::vector<std::int64_t> jumps_pqr;
  auto* cmd_jumps = app.add_subcommand("jumps", "jump statistics of ternary Phi_pqr");
  cmd_jumps->add_option("primes", jumps_pqr, "odd primes p < q < r")->expected(3);

  std::int64_t family_max = 0;
  auto* cmd_family = app.add_subcommand("jumps-family", "m, 6m-1, 12m-1 all prime");
  cmd_family->add_option("--max", family_max, "largest m to test")->required();

  double search_P = 0, search_rho = 0.5, search_eps = 0.05;
  std::int64_t search_budget = 10;
  bool search_scan = false;
  auto* cmd_search = app.add_subcommand("jumps-search", "small-inverse triple search");
  cmd_search->add_option("--P", search_P, "dyadic window base for p")->required();
  cmd_search->add_option("--rho", search_rho, "L = ceil(P^rho)")->capture_default_str();
  cmd_search->add_option("--eps", search_eps, "window exponent epsilon")->capture_default_str();
  cmd_search->add_option("--budget", search_budget, "max candidates")->capture_default_str();
  cmd_search->add_flag("--scan", search_scan, "append the jump exponent table");

  // census ------------------------------------------------------------------
  double census_x = 0, census_e3 = 0;
  bool census_allow_small = false;
  auto* cmd_census = app.add_subcommand("census", "exact counts of Q3/R3/E4/E3 up to x");
  cmd_census->add_option("--x", census_x, "threshold (accepts 1e6 style)")->required();
  cmd_census->add_option("--e3-below", census_e3, "count E3 for n below this bound (0 = skip)");
  cmd_census->add_flag("--allow-small", census_allow_small, "emit a zero row when x < 105");

  // constants ----------------------------------------------------------------
  int cc_bits = 128;
  double cc_cutoff = 0;
  bool cc_odd = false;
  auto* cmd_cc = app.add_subcommand("constant-c", "constants C and c");
  cmd_cc->add_option("--bits", cc_bits, "fixed-point precision for C")->capture_default_str();
  cmd_cc->add_option("--prime-cutoff", cc_cutoff, "cross-check C against the prime sum");
  cmd_cc->add_flag("--odd-only", cc_odd, "report the odd-only variant C - 1/2");

  // expsum / discrepancy ------------------------------------------------------
  std::int64_t es_a = 1;
  double es_L = 0, es_P = 0, es_eps = 0.25;
  auto* cmd_es = app.add_subcommand("expsum", "double exponential sum S(a;L,P)");
  cmd_es->add_option("--a", es_a)->required();
  cmd_es->add_option("--L", es_L)->required();
  cmd_es->add_option("--P", es_P)->required();
  cmd_es->add_option("--eps", es_eps, "epsilon in the comparison bound")->capture_default_str();

  double d_L = 0, d_P = 0, d_eps = 0.25;
  int d_H = 0;
  auto* cmd_disc = app.add_subcommand("discrepancy", "discrepancy of the fractions l*_p/p");
  cmd_disc->add_option("--L", d_L)->required();
  cmd_disc->add_option("--P", d_P)->required();
  cmd_disc->add_option("--H", d_H)->required();
  cmd_disc->add_option("--eps", d_eps)->capture_default_str();

  // verify ---------------------------------------------------------------------
  std::string suite = "all";
  std::int64_t verify_limit = 0;
  double verify_census_max = 10'000'000, verify_n2_max = 1'000'000, verify_cutoff = 100'000'000;
  int verify_bits = 128;
  auto* cmd_verify = app.add_subcommand("verify", "run the theorem-check suites");
  cmd_verify->add_option("--suite", suite, "which suite to run")
      ->check(CLI::IsMember({"all", "poly", "binary", "ternary", "semigroup", "census", "analytic"}))
      ->capture_default_str();
  cmd_verify->add_option("--limit", verify_limit, "sweep bound for the selected suite");
  cmd_verify->add_option("--census-max", verify_census_max, "largest census checkpoint")
      ->capture_default_str();
  cmd_verify->add_option("--n2-max", verify_n2_max, "largest N2 checkpoint")->capture_default_str();
  cmd_verify->add_option("--prime-cutoff", verify_cutoff, "prime-sum cutoff for C")
      ->capture_default_str();
  cmd_verify->add_option("--bits", verify_bits, "fixed-point precision for C")->capture_default_str();

  try {
    std::reverse(args.begin(), args.end());  // CLI11 consumes the vector back to front
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*cmd_phi) {
    emit(g, g.format == "json" ? poly_json(cyclotomic(phi_n, g.budget), phi_n).dump()
                               : poly_sparse(cyclotomic(phi_n, g.budget)));
    return 0;
  }
  if (*cmd_psi) {
    emit(g, g.format == "json" ? poly_json(inverse_cyclotomic(psi_n, g.budget), psi_n).dump()
                               : poly_sparse(inverse_cyclotomic(psi_n, g.budget)));
    return 0;
  }
  if (*cmd_ie) {
    const IntPolynomial f = inclusion_exclusion(ie_a, ie_b, g.budget);
    emit(g, g.format == "json" ? poly_json(f, std::nullopt).dump() : poly_sparse(f));
    return 0;
  }

  if (*cmd_gaps) {
    if (cmd_gaps->count("--phi")) {
      const GapReport rep = max_gap(cyclotomic(gaps_phi_n, g.budget));
      if (g.format == "json") {
        json obj{{"n", gaps_phi_n},
                 {"max_gap", rep.max_gap},
                 {"multiplicity", rep.multiplicity},
                 {"positions", rep.positions}};
        emit(g, obj.dump());
      } else {
        std::ostringstream os;
        os << "n,max_gap,multiplicity,positions\n" << gaps_phi_n << "," << rep.max_gap << ","
           << rep.multiplicity << ",\"";
        for (std::size_t i = 0; i < rep.positions.size(); ++i)
          os << (i ? " " : "") << rep.positions[i];
        os << "\"\n";
        emit(g, os.str());
      }
      return 0;
    }
    if (gaps_pqr.size() != 3)
      throw CLI::ValidationError("gaps: give p q r, or --phi n");
    const TernaryGapCheck t = ternary_gap_check(gaps_pqr[0], gaps_pqr[1], gaps_pqr[2], g.budget);
    if (g.format == "json") {
      json obj{{"n", t.n},       {"p", t.p},
               {"q", t.q},       {"r", t.r},
               {"psi_gap", t.psi_gap}, {"formula_value", t.formula_value},
               {"lower_bound", t.lower_bound}, {"upper_bound", t.upper_bound},
               {"equals_formula", t.equals_formula}};
      emit(g, obj.dump());
    } else {
      std::ostringstream os;
      os << "n,p,q,r,psi_gap,formula_value,equals_formula\n"
         << t.n << "," << t.p << "," << t.q << "," << t.r << "," << t.psi_gap << ","
         << t.formula_value << "," << (t.equals_formula ? "true" : "false") << "\n";
      emit(g, os.str());
    }
    return 0;
  }

  if (*cmd_sg) {
    const NumericalSemigroup S(sg_a, sg_b);
    const IntPolynomial ps = semigroup_polynomial(S);
    std::vector<std::int64_t> non_members;
    for (std::int64_t s = 1; s <= S.frobenius(); ++s)
      if (!S.contains(s)) non_members.push_back(s);
    const auto block_list = blocks(S);
    if (g.format == "json") {
      json blocks_json = json::array();
      for (const Block& blk : block_list)
        blocks_json.push_back({{"start", blk.start},
                               {"length", blk.length},
                               {"kind", blk.kind == BlockKind::gapblock ? "gapblock"
                                                                        : "elementblock"}});
      json obj{{"a", sg_a},
               {"b", sg_b},
               {"frobenius", S.frobenius()},
               {"gaps", non_members},
               {"blocks", blocks_json},
               {"polynomial", poly_json(ps, std::nullopt)},
               {"polynomial_sparse", poly_sparse(ps)}};
      emit(g, obj.dump());
    } else {
      std::ostringstream os;
      os << "frobenius," << S.frobenius() << "\ngaps,";
      for (std::size_t i = 0; i < non_members.size(); ++i) os << (i ? " " : "") << non_members[i];
      os << "\nstart,length,kind\n";
      for (const Block& blk : block_list)
        os << blk.start << "," << blk.length << ","
           << (blk.kind == BlockKind::gapblock ? "gapblock" : "elementblock") << "\n";
      os << "coeffs,";
      for (std::size_t i = 0; i < ps.coeffs().size(); ++i) os << (i ? " " : "") << ps.coeffs()[i];
      os << "\n" << poly_sparse(ps);
      emit(g, os.str());
    }
    return 0;
  }

  if (*cmd_jumps) {
    const JumpReport rep = jump_report(jumps_pqr[0], jumps_pqr[1], jumps_pqr[2], g.budget);
    const double exponent = std::log(static_cast<double>(rep.jumps_up)) /
                            std::log(static_cast<double>(rep.n));
    if (g.format == "json") {
      json obj{{"n", rep.n},       {"p", rep.p},
               {"q", rep.q},       {"r", rep.r},
               {"J", rep.jumps_up}, {"jumps_down", rep.jumps_down},
               {"max_step", rep.max_step}, {"exponent", exponent}};
      emit(g, obj.dump());
    } else {
      std::ostringstream os;
      os << "n,p,q,r,J,max_step,exponent\n" << rep.n << "," << rep.p << "," << rep.q << ","
         << rep.r << "," << rep.jumps_up << "," << rep.max_step << "," << exponent << "\n";
      emit(g, os.str());
    }
    return 0;
  }
  if (*cmd_family) {
    const auto rows = family_search(family_max);
    if (g.format == "json") {
      json arr = json::array();
      for (auto [m, n] : rows) arr.push_back({{"m", m}, {"n", n}});
      emit(g, arr.dump());
    } else {
      std::ostringstream os;
      os << "m,n\n";
      for (auto [m, n] : rows) os << m << "," << n << "\n";
      emit(g, os.str());
    }
    return 0;
  }
  if (*cmd_search) {
    const auto candidates = triple_search(search_P, search_rho, search_eps, search_budget,
                                          g.threads);
    std::ostringstream csv;
    json arr = json::array();
    csv << "p,q,r,q_inv,r_inv,window,q_mirrored,r_mirrored\n";
    for (const auto& cand : candidates) {
      arr.push_back({{"p", cand.p}, {"q", cand.q}, {"r", cand.r},
                     {"q_inv", cand.q_inv}, {"r_inv", cand.r_inv},
                     {"window", cand.window}, {"q_mirrored", cand.q_mirrored},
                     {"r_mirrored", cand.r_mirrored}});
      csv << cand.p << "," << cand.q << "," << cand.r << "," << cand.q_inv << "," << cand.r_inv
          << "," << cand.window << "," << cand.q_mirrored << "," << cand.r_mirrored << "\n";
    }
    if (!search_scan) {
      emit(g, g.format == "json" ? arr.dump() : csv.str());
      return 0;
    }
    const auto scan = jump_exponent_scan(candidates, g.budget);
    if (g.format == "json") {
      json table = json::array();
      for (const auto& row : scan)
        table.push_back({{"n", row.n}, {"J", row.jumps}, {"exponent", row.exponent},
                         {"skipped", row.skipped}});
      emit(g, json{{"candidates", arr}, {"scan", table}}.dump());
    } else {
      csv << "n,J,exponent,skipped\n";
      for (const auto& row : scan)
        csv << row.n << "," << row.jumps << "," << row.exponent << "," << row.skipped << "\n";
      emit(g, csv.str());
    }
    return 0;
  }

  if (*cmd_census) {
    const std::uint64_t x = to_u64(census_x, "--x");
    const std::uint64_t e3_below = to_u64(census_e3, "--e3-below");
    const PrimeSieve sieve(std::max<std::uint64_t>(x, 30));
    const CensusRow row = enumerate_census(sieve, x, e3_below, g.threads, census_allow_small);
    if (g.format == "json") {
      json obj{{"x", row.x},   {"Q3", row.countQ3}, {"R3", row.countR3},
               {"E4", row.countE4}};
      if (row.countE3)
        obj["E3"] = *row.countE3;
      else
        obj["E3"] = nullptr;
      obj["mainR3"] = row.main_term_R3;
      obj["mainQ3"] = row.main_term_Q3;
      obj["ratioR3"] = row.ratio_R3;
      emit(g, obj.dump());
    } else {
      std::ostringstream os;
      os << "x,Q3,R3,E4,E3,mainR3,mainQ3,ratioR3\n"
         << row.x << "," << row.countQ3 << "," << row.countR3 << "," << row.countE4 << ",";
      if (row.countE3) os << *row.countE3;
      os << "," << row.main_term_R3 << "," << row.main_term_Q3 << "," << row.ratio_R3 << "\n";
      emit(g, os.str());
    }
    return 0;
  }

  if (*cmd_cc) {
    const Fixed C = constant_C(cc_bits);
    const int digits = std::max(8, static_cast<int>(cc_bits * 0.301) - 2);
    const Fixed reported = cc_odd ? C - Fixed::from_integer(1, cc_bits).div_int(2) : C;
    json obj{{"bits", cc_bits},
             {"C", reported.to_decimal(digits)},
             {"odd_only", cc_odd},
             {"c", constant_c()}};
    if (cc_cutoff > 0) {
      const PrimeSumForm form = constant_C_prime_form(to_u64(cc_cutoff, "--prime-cutoff"), cc_odd);
      obj["prime_sum"] = {{"cutoff", form.cutoff},
                          {"value", form.value},
                          {"tail_bound", form.tail_bound},
                          {"gap", reported.to_double() - form.value}};
    }
    if (g.format == "json") {
      emit(g, obj.dump());
    } else {
      std::ostringstream os;
      os << "C," << obj["C"].get<std::string>() << "\nc," << constant_c() << "\n";
      emit(g, os.str());
    }
    return 0;
  }

  if (*cmd_es) {
    const std::complex<double> s = double_sum(es_a, es_L, es_P, g.threads);
    const std::size_t pairs = inverse_fractions(es_L, es_P).size();
    const double irv = (std::sqrt(es_L) + std::sqrt(es_P) + std::min(es_L, es_P)) *
                       std::pow(es_L * es_P, 0.5 + es_eps);
    json obj{{"a", es_a},   {"L", es_L},       {"P", es_P},       {"pairs", pairs},
             {"re", s.real()}, {"im", s.imag()}, {"abs", std::abs(s)},
             {"irv_bound", irv}, {"ratio", std::abs(s) / irv}};
    if (g.format == "json") {
      emit(g, obj.dump());
    } else {
      std::ostringstream os;
      os << "a,L,P,pairs,re,im,abs,irv_bound,ratio\n"
         << es_a << "," << es_L << "," << es_P << "," << pairs << "," << s.real() << ","
         << s.imag() << "," << std::abs(s) << "," << irv << "," << std::abs(s) / irv << "\n";
      emit(g, os.str());
    }
    return 0;
  }

  if (*cmd_disc) {
    const DiscrepancyReport rep = discrepancy(d_L, d_P, d_H, d_eps);
    json obj{{"L", d_L},
             {"P", d_P},
             {"H", d_H},
             {"N", rep.N},
             {"discrepancy", rep.discrepancy},
             {"erdos_turan_bound", rep.erdos_turan_bound},
             {"dfi_bound", rep.dfi_bound},
             {"normalized", rep.discrepancy / static_cast<double>(rep.N)}};
    if (g.format == "json") {
      emit(g, obj.dump());
    } else {
      std::ostringstream os;
      os << "L,P,H,N,discrepancy,erdos_turan_bound,dfi_bound\n"
         << d_L << "," << d_P << "," << d_H << "," << rep.N << "," << rep.discrepancy << ","
         << rep.erdos_turan_bound << "," << rep.dfi_bound << "\n";
      emit(g, os.str());
    }
    return 0;
  }

  if (*cmd_verify) {
    VerifyOptions opt;
    opt.threads = g.threads;
    opt.seed = g.seed;
    opt.constant_bits = verify_bits;
    opt.prime_cutoff = to_u64(verify_cutoff, "--prime-cutoff");
    const std::uint64_t census_max = to_u64(verify_census_max, "--census-max");
    const std::uint64_t n2_max = to_u64(verify_n2_max, "--n2-max");
    std::erase_if(opt.census_checkpoints, [&](std::uint64_t x) { return x > census_max; });
    std::erase_if(opt.n2_checkpoints, [&](std::uint64_t x) { return x > n2_max; });
    if (verify_limit > 0) {
      opt.binary_limit = verify_limit;
      opt.ternary_limit = verify_limit;
      opt.semigroup_limit = verify_limit;
      opt.poly_limit = verify_limit;
    }
    std::vector<CriterionResult> results;
    if (suite == "all")
      results = run_all_criteria(opt);
    else if (suite == "poly")
      results = run_poly_invariants(opt);
    else if (suite == "binary")
      results = run_binary_criteria(opt);
    else if (suite == "ternary")
      results = run_ternary_criteria(opt);
    else if (suite == "semigroup")
      results = run_semigroup_criteria(opt);
    else if (suite == "census")
      results = run_census_criteria(opt);
    else
      results = run_analytic_criteria(opt);
    int failures = 0;
    emit(g, render_verify(results, failures));
    return failures == 0 ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  // `jumps family ...` and `jumps search ...` route to dedicated subcommands.
  if (args.size() >= 2 && args[0] == "jumps" && (args[1] == "family" || args[1] == "search")) {
    args[0] = "jumps-" + args[1];
    args.erase(args.begin() + 1);
  }
  try {
    return run(std::move(args));
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // Only the internal consistency checks throw a bare logic_error; that is
    // a failed theorem in disguise, not a usage problem.
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
