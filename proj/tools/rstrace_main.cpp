#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rstrace/bounds.hpp"
#include "rstrace/listdec.hpp"
#include "rstrace/rng.hpp"
#include "rstrace/textio.hpp"

using namespace rstrace;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

struct KRange {
  long long lo = 1, hi = 1;
};

KRange parse_k(const std::string& s) {
  KRange r;
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoll(s);
    } else {
      r.lo = std::stoll(s.substr(0, dots));
      r.hi = std::stoll(s.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad k or k-range: " + s);
  }
  if (r.lo < 1 || r.hi < r.lo)
    throw std::invalid_argument("bad k or k-range: " + s);
  return r;
}

DecoderKind parse_decoder(const std::string& s) {
  if (s == "bw-degree") return DecoderKind::BwDegree;
  if (s == "bw-lifted") return DecoderKind::BwLifted;
  if (s == "modified-gs") return DecoderKind::ModifiedGs;
  throw std::invalid_argument("unknown decoder: " + s);
}

struct CommonOpts {
  unsigned p = 0, m = 1, t = 1;
  std::string k = "1";
  std::string format = "md";
  std::uint64_t seed = 0;
  long long trials = 1000;
  long long errors = -1;
  std::string decoder = "bw-degree";
  long long mu = 0;
  long long mu_max = 1000;
  long long budget = 300'000'000;
  bool exact = false;
};

void add_tower_opts(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--p", o.p, "field characteristic (prime)")->required();
  cmd->add_option("--m", o.m, "degree of the sub-symbol field over GF(p)");
  cmd->add_option("--t", o.t, "degree of the symbol field over the sub-symbol field");
  cmd->add_option("--format", o.format, "output format: md, csv or json");
}

TableFormat format_of(const CommonOpts& o) {
  auto f = parse_format(o.format);
  if (!f) throw std::invalid_argument("unknown format: " + o.format);
  return *f;
}

int cmd_bounds(const CommonOpts& o) {
  KRange kr = parse_k(o.k);
  TableFormat fmt = format_of(o);
  std::vector<BoundsRow> rows;
  for (long long k = kr.lo; k <= kr.hi; ++k) {
    BoundsRow row;
    row.report =
        bounds_report(o.p, o.m, o.t, k, o.exact, {o.budget, true});
    if (row.report.d1)
      row.gs = best_gs_params(row.report.n, row.report.delta,
                              *row.report.d_star, o.mu_max);
    rows.push_back(std::move(row));
  }
  std::cout << render_bounds_rows(rows, fmt);
  return 0;
}

int cmd_exact(const CommonOpts& o) {
  KRange kr = parse_k(o.k);
  TableFormat fmt = format_of(o);
  Tower tw(o.p, o.m, o.t);
  TextTable tab;
  tab.header = {"k", "kappa", "codewords", "d_exact", "e_exact"};
  nlohmann::json arr = nlohmann::json::array();
  for (long long k = kr.lo; k <= kr.hi; ++k) {
    RepairScheme sc(tw, int(k));
    TraceCode tc = build_trace_code(sc);
    long long words = 1;
    bool over = false;
    for (int i = 0; i < tc.kappa && !over; ++i) {
      over = words > (1LL << 62) / tw.subfield_size();
      if (!over) words *= tw.subfield_size();
      over = over || words - 1 > o.budget;
    }
    auto d = exact_distance(tc, {o.budget, true});
    if (!d) {
      std::cerr << "error: enumeration budget exceeded at k=" << k << " ("
                << tc.kappa << " dimensions over B)\n";
      return kExitBudget;
    }
    tab.rows.push_back({std::to_string(k), std::to_string(tc.kappa),
                        std::to_string(words - 1), std::to_string(*d),
                        std::to_string(correctable(*d))});
    nlohmann::json j;
    j["k"] = k;
    j["kappa"] = tc.kappa;
    j["codewords"] = words - 1;
    j["d_exact"] = *d;
    j["e_exact"] = correctable(*d);
    arr.push_back(std::move(j));
  }
  if (fmt == TableFormat::Json)
    std::cout << arr.dump(2) << "\n";
  else
    std::cout << render_table(tab, fmt);
  return 0;
}

int cmd_repair_sim(const CommonOpts& o) {
  KRange kr = parse_k(o.k);
  if (kr.lo != kr.hi)
    throw std::invalid_argument("repair-sim takes a single k");
  TableFormat fmt = format_of(o);
  DecoderKind kind = parse_decoder(o.decoder);
  long long errors = o.errors < 0 ? 0 : o.errors;
  long long mu = o.mu == 0 ? 1 : o.mu;

  Tower tw(o.p, o.m, o.t);
  RepairScheme sc(tw, int(kr.lo));
  TraceCode tc = build_trace_code(sc);
  if (errors > sc.n())
    throw std::invalid_argument("more errors than positions");

  // warn when the trial count of errors exceeds the guaranteed radius
  {
    BoundsReport r = bounds_report(o.p, o.m, o.t, kr.lo);
    std::optional<long long> radius;
    if (kind == DecoderKind::BwDegree && r.d1) radius = correctable(*r.d1);
    if (kind == DecoderKind::BwLifted && r.d2) radius = correctable(*r.d2);
    if (kind == DecoderKind::ModifiedGs && r.d1 && r.d_star)
      radius = gs_params(r.n, r.delta, mu, *r.d_star).e_capped;
    if (!radius || errors > *radius)
      std::cerr << "note: " << errors
                << " errors exceed the guaranteed radius of " << o.decoder
                << " (" << (radius ? std::to_string(*radius) : "-")
                << "); failures are expected\n";
  }

  SplitMix64 rng(o.seed);
  long long successes = 0;
  auto start = std::chrono::steady_clock::now();
  for (long long trial = 0; trial < o.trials; ++trial) {
    Poly f;
    f.c.resize(sc.k());
    for (auto& c : f.c) c = FElem(rng.below(tw.field_size()));
    f.trim();
    TraceWord w = traces_of(sc, f);
    std::vector<int> pos(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) pos[j] = int(j);
    for (long long j = 0; j < errors; ++j)
      std::swap(pos[j], pos[j + rng.below(w.size() - j)]);
    for (long long j = 0; j < errors; ++j) {
      BElem wrong = BElem(rng.below(tw.subfield_size() - 1));
      if (wrong >= w.sym[pos[j]]) wrong++;
      w.sym[pos[j]] = wrong;
    }
    auto got = repair_with_errors(tc, w, kind, int(mu));
    if (got && *got == poly_eval(tw, f, 0)) ++successes;
  }
  auto elapsed = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  // wall time goes to stderr so that seeded runs stay byte-identical
  std::fprintf(stderr, "mean trial time: %.3f ms\n",
               o.trials ? 1e3 * elapsed / double(o.trials) : 0.0);

  char rate[32];
  std::snprintf(rate, sizeof rate, "%.4f",
                o.trials ? double(successes) / double(o.trials) : 0.0);
  if (fmt == TableFormat::Json) {
    nlohmann::json j;
    j["tower"] = tw.name();
    j["k"] = kr.lo;
    j["errors"] = errors;
    j["decoder"] = o.decoder;
    j["mu"] = mu;
    j["seed"] = o.seed;
    j["trials"] = o.trials;
    j["successes"] = successes;
    j["success_rate"] = std::string(rate);
    std::cout << j.dump(2) << "\n";
  } else {
    TextTable tab;
    tab.header = {"tower", "k",      "errors",    "decoder",
                  "trials", "successes", "success_rate"};
    tab.rows.push_back({tw.name(), std::to_string(kr.lo),
                        std::to_string(errors), o.decoder,
                        std::to_string(o.trials), std::to_string(successes),
                        rate});
    std::cout << render_table(tab, fmt);
  }
  return 0;
}

int cmd_bandwidth(const CommonOpts& o) {
  KRange kr = parse_k(o.k);
  if (kr.lo != kr.hi)
    throw std::invalid_argument("bandwidth takes a single k");
  TableFormat fmt = format_of(o);
  long long k = kr.lo;
  BoundsReport r = bounds_report(o.p, o.m, o.t, k);
  if (!r.d_star)
    throw std::invalid_argument("no distance bound available for this k");
  long long q = r.n + 1;
  long long trace_emax = correctable(*r.d_star);
  long long classical_emax = (q - k) / 2;
  long long emax = o.errors >= 0 ? o.errors
                                 : std::max(trace_emax, classical_emax);

  TextTable tab;
  tab.header = {"e",           "classical_symbols", "classical_bits",
                "trace_symbols", "trace_bits"};
  nlohmann::json arr = nlohmann::json::array();
  for (long long e = 0; e <= emax; ++e) {
    bool cl_ok = 2 * e <= q - k, tr_ok = 2 * e <= *r.d_star - 1;
    if (!cl_ok && !tr_ok) {
      std::cerr << "note: e=" << e
                << " exceeds both repair radii, stopping\n";
      break;
    }
    std::vector<std::string> row{std::to_string(e), "-", "-", "-", "-"};
    nlohmann::json j;
    j["e"] = e;
    j["classical_symbols"] = nullptr;
    j["classical_bits"] = nullptr;
    j["trace_symbols"] = nullptr;
    j["trace_bits"] = nullptr;
    if (cl_ok) {
      auto c = bandwidth_classical(o.p, o.m, o.t, k, e);
      row[1] = std::to_string(c.symbols);
      row[2] = std::to_string(c.bits);
      j["classical_symbols"] = c.symbols;
      j["classical_bits"] = c.bits;
    }
    if (tr_ok) {
      auto tr = bandwidth_trace(r.n, *r.d_star, e, o.p, o.m);
      row[3] = std::to_string(tr.symbols);
      row[4] = std::to_string(tr.bits);
      j["trace_symbols"] = tr.symbols;
      j["trace_bits"] = tr.bits;
    }
    tab.rows.push_back(std::move(row));
    arr.push_back(std::move(j));
  }
  if (fmt == TableFormat::Json)
    std::cout << arr.dump(2) << "\n";
  else
    std::cout << render_table(tab, fmt);
  return 0;
}

int cmd_gs_params(const CommonOpts& o) {
  KRange kr = parse_k(o.k);
  TableFormat fmt = format_of(o);
  TextTable tab;
  tab.header = {"k", "n", "delta", "d_star", "mu", "wdeg", "e_raw", "e"};
  nlohmann::json arr = nlohmann::json::array();
  for (long long k = kr.lo; k <= kr.hi; ++k) {
    BoundsReport r = bounds_report(o.p, o.m, o.t, k);
    std::vector<std::string> row{std::to_string(k), std::to_string(r.n),
                                 std::to_string(r.delta), opt_cell(r.d_star),
                                 "-", "-", "-", "-"};
    nlohmann::json j;
    j["k"] = k;
    j["n"] = r.n;
    j["delta"] = r.delta;
    j["d_star"] = r.d_star ? nlohmann::json(*r.d_star) : nlohmann::json();
    j["mu"] = nullptr;
    j["wdeg"] = nullptr;
    j["e_raw"] = nullptr;
    j["e"] = nullptr;
    if (r.d1 && r.d_star) {
      GsParams g = o.mu > 0
                       ? gs_params(r.n, r.delta, o.mu, *r.d_star)
                       : best_gs_params(r.n, r.delta, *r.d_star, o.mu_max);
      row[4] = std::to_string(g.mu);
      row[5] = std::to_string(g.wdeg);
      row[6] = std::to_string(g.e_raw);
      row[7] = std::to_string(g.e_capped);
      j["mu"] = g.mu;
      j["wdeg"] = g.wdeg;
      j["e_raw"] = g.e_raw;
      j["e"] = g.e_capped;
    }
    tab.rows.push_back(std::move(row));
    arr.push_back(std::move(j));
  }
  if (fmt == TableFormat::Json)
    std::cout << arr.dump(2) << "\n";
  else
    std::cout << render_table(tab, fmt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trace-repair bounds, decoding and bandwidth toolkit for "
               "full-length Reed-Solomon codes"};
  app.require_subcommand(1);
  CommonOpts o;

  CLI::App* bounds = app.add_subcommand(
      "bounds", "distance bounds and correctable-error table over k");
  add_tower_opts(bounds, o);
  bounds->add_option("--k,--k-range", o.k, "k or range like 1..9");
  bounds->add_flag("--exact", o.exact, "enumerate the exact distance");
  bounds->add_option("--budget", o.budget, "enumeration budget in codewords");
  bounds->add_option("--mu-max", o.mu_max, "multiplicity search limit");

  CLI::App* exact = app.add_subcommand(
      "exact", "exact minimum distance by codeword enumeration");
  add_tower_opts(exact, o);
  exact->add_option("--k,--k-range", o.k, "k or range like 1..6");
  exact->add_option("--budget", o.budget, "enumeration budget in codewords");

  CLI::App* sim = app.add_subcommand(
      "repair-sim", "seeded repair trials under injected trace errors");
  add_tower_opts(sim, o);
  sim->add_option("--k", o.k, "code dimension");
  sim->add_option("--errors", o.errors, "errors injected per trial");
  sim->add_option("--trials", o.trials, "number of trials");
  sim->add_option("--seed", o.seed, "PRNG seed (SplitMix64)");
  sim->add_option("--decoder", o.decoder,
                  "bw-degree, bw-lifted or modified-gs");
  sim->add_option("--mu", o.mu, "interpolation multiplicity for modified-gs");

  CLI::App* bw = app.add_subcommand(
      "bandwidth", "repair bandwidth of classical vs trace repair");
  add_tower_opts(bw, o);
  bw->add_option("--k", o.k, "code dimension");
  bw->add_option("--errors", o.errors, "largest error count to report");

  CLI::App* gsp = app.add_subcommand(
      "gs-params", "list-decoder parameter search");
  add_tower_opts(gsp, o);
  gsp->add_option("--k,--k-range", o.k, "k or range like 1..17");
  gsp->add_option("--mu", o.mu, "fixed multiplicity (otherwise search)");
  gsp->add_option("--mu-max", o.mu_max, "multiplicity search limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(bounds)) return cmd_bounds(o);
    if (app.got_subcommand(exact)) return cmd_exact(o);
    if (app.got_subcommand(sim)) return cmd_repair_sim(o);
    if (app.got_subcommand(bw)) return cmd_bandwidth(o);
    if (app.got_subcommand(gsp)) return cmd_gs_params(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
