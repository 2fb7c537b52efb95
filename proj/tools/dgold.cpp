#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dgold/cache.hpp"
#include "dgold/circle.hpp"
#include "dgold/digitset.hpp"
#include "dgold/expsum.hpp"
#include "dgold/moments.hpp"
#include "dgold/primes.hpp"
#include "dgold/report.hpp"

namespace {

using dgold::Report;
using dgold::round12;
using dgold::RunConfig;
using json = nlohmann::ordered_json;

constexpr int kExitValidation = 2;
constexpr int kExitCap = 3;
constexpr int kExitInvariant = 4;

std::uint64_t resolve_cutoff(const RunConfig& cfg, std::uint64_t x) {
  if (cfg.cutoff != 0) return cfg.cutoff;
  return static_cast<std::uint64_t>(std::floor(std::pow(static_cast<double>(x), 6.0 * cfg.delta0)));
}

std::string resolve_cache_path(const RunConfig& cfg, std::uint64_t x, std::uint64_t p) {
  if (!cfg.cache_path.empty()) return cfg.cache_path;
  if (const char* dir = std::getenv("DGOLD_CACHE_DIR"); dir && *dir)
    return std::string(dir) + "/primes_" + std::to_string(x) + "_" + std::to_string(p) + ".sieve";
  return {};
}

dgold::PrimeTable make_table(const RunConfig& cfg, std::uint64_t x) {
  std::uint64_t p = resolve_cutoff(cfg, x);
  return dgold::cached_table(x, p, resolve_cache_path(cfg, x, p));
}

int run_enumerate(const RunConfig& cfg) {
  dgold::RestrictedSet set = cfg.make_set();
  auto members = set.enumerate(cfg.enum_cap);
  Report rep;
  rep.command = cfg.command;
  rep.config = cfg.echo();
  rep.columns = {"n"};
  for (auto n : members) rep.rows.emplace_back(n);
  rep.summary["cardinality"] = set.cardinality();
  rep.summary["x"] = set.x();
  dgold::write_report(rep, cfg);
  return 0;
}

int run_scan(const RunConfig& cfg) {
  dgold::RestrictedSet set = cfg.make_set();
  dgold::PrimeTable table = make_table(cfg, set.x());
  dgold::ScanResult scan = dgold::exception_scan(set, table, cfg.threads);
  Report rep;
  rep.command = cfg.command;
  rep.config = cfg.echo();
  rep.columns = {"n"};
  for (const auto& rec : scan.exceptions) rep.rows.emplace_back(rec.n);
  rep.summary["x"] = set.x();
  rep.summary["cutoff"] = table.cutoff();
  rep.summary["cardinality"] = set.cardinality();
  rep.summary["even_scanned"] = scan.even_scanned;
  rep.summary["skipped_small"] = scan.skipped_small;
  rep.summary["exceptions"] = scan.exceptions.size();
  rep.summary["reference_curve"] = round12(
      std::pow(static_cast<double>(set.cardinality()), 1.0 - cfg.ref_delta));
  dgold::write_report(rep, cfg);
  return 0;
}

int run_arcs(const RunConfig& cfg) {
  dgold::RestrictedSet set = cfg.make_set();
  const std::uint64_t x = set.x();
  double y_cap = std::pow(static_cast<double>(set.cardinality()), cfg.delta0);
  if (cfg.y < 1.0 || cfg.y > y_cap)
    throw dgold::validation_error("Y must lie in [1, |A_k|^delta0] = [1, " +
                                  dgold::format12(y_cap) + "]");
  dgold::PrimeTable table = make_table(cfg, x);
  dgold::ArcPartition partition = dgold::ArcPartition::build(x, cfg.delta0);
  std::uint64_t n_grid = cfg.grid_n ? cfg.grid_n : dgold::GridTransform::default_grid_size(x);
  dgold::GridTransform grid = dgold::GridTransform::build(table, n_grid);
  dgold::DominanceReport dom = dgold::dominance_report(set, grid, partition, table, cfg.y);

  Report rep;
  rep.command = cfg.command;
  rep.config = cfg.echo();
  rep.columns = {"n",              "r_major",        "r_minor",         "r_full",
                 "r_exact",        "rel_full_exact", "major_positive",  "major_dominates",
                 "below_threshold"};
  for (const auto& row : dom.rows) {
    json r;
    r["n"] = row.n;
    r["r_major"] = round12(row.r_major);
    r["r_minor"] = round12(row.r_minor);
    r["r_full"] = round12(row.r_full);
    r["r_exact"] = round12(row.r_exact);
    r["rel_full_exact"] =
        round12(std::abs(row.r_full - row.r_exact) / std::max(1.0, std::abs(row.r_exact)));
    r["major_positive"] = row.major_positive;
    r["major_dominates"] = row.major_dominates;
    r["below_threshold"] = row.below_threshold;
    rep.rows.push_back(std::move(r));
  }
  rep.summary["x"] = x;
  rep.summary["cutoff"] = table.cutoff();
  rep.summary["grid_n"] = grid.n();
  rep.summary["q_cap"] = partition.q_cap();
  rep.summary["width"] = round12(partition.width());
  rep.summary["major_measure"] = round12(partition.major_measure());
  rep.summary["threshold"] = round12(dom.threshold);
  rep.summary["rows"] = dom.rows.size();
  rep.summary["major_positive"] = dom.n_major_positive;
  rep.summary["major_dominates"] = dom.n_dominant;
  rep.summary["below_threshold"] = dom.n_below_threshold;
  rep.summary["max_rel_full_exact"] = round12(dom.max_rel_full_vs_exact);
  rep.summary["sup_minor_abs_s"] = round12(dom.sup_minor_abs_s);
  // reference scale for the minor-arc supremum, reported informationally
  double lx = std::log(static_cast<double>(x));
  rep.summary["minor_sup_reference"] = round12(
      std::pow(static_cast<double>(x), 1.0 - 3.0 * cfg.delta0) * std::pow(lx, 4.0));
  dgold::write_report(rep, cfg);
  return 0;
}

int run_moments(const RunConfig& cfg) {
  dgold::RestrictedSet set = cfg.make_set();
  int s_max = cfg.s_max;
  if (s_max <= 0) {
    double per_s = static_cast<double>(set.k()) * std::log2(static_cast<double>(cfg.base));
    s_max = std::max(cfg.s_min, static_cast<int>(40.0 / per_s));
  }
  Report rep;
  rep.command = cfg.command;
  rep.config = cfg.echo();
  rep.config["s_max"] = s_max;
  rep.columns = {"s", "moment", "bound", "holds"};
  bool all_hold = true;
  for (int s = cfg.s_min; s <= s_max; ++s) {
    dgold::MomentBound mb = dgold::moment_bound(set, s);
    json r;
    r["s"] = s;
    r["moment"] = dgold::to_string_u128(mb.moment);  // exact integer, as text
    r["bound"] = round12(mb.bound);
    r["holds"] = mb.holds;
    all_hold = all_hold && mb.holds;
    rep.rows.push_back(std::move(r));
  }
  rep.summary["all_hold"] = all_hold;
  dgold::write_report(rep, cfg);
  return all_hold ? 0 : kExitInvariant;
}

int run_sievebound(const RunConfig& cfg) {
  dgold::RestrictedSet set = cfg.make_set();
  if (cfg.m_min < 1) throw dgold::validation_error("m_min must be at least 1");
  // the closed-form bound is only claimed for m < b^k
  std::uint64_t m_hi = std::min(cfg.m_max, set.x() - 1);
  Report rep;
  rep.command = cfg.command;
  rep.config = cfg.echo();
  rep.columns = {"m", "count", "bound", "holds"};
  bool all_hold = true;
  for (std::uint64_t m = cfg.m_min; m <= m_hi; ++m) {
    dgold::SieveBoundCheck chk = dgold::sieve_bound_check(set, m);
    json r;
    r["m"] = m;
    r["count"] = chk.count;
    r["bound"] = round12(chk.bound);
    r["holds"] = chk.holds;
    all_hold = all_hold && chk.holds;
    rep.rows.push_back(std::move(r));
  }
  rep.summary["m_max_effective"] = m_hi;
  rep.summary["all_hold"] = all_hold;
  dgold::write_report(rep, cfg);
  return all_hold ? 0 : kExitInvariant;
}

int run_ucolumn(const RunConfig& cfg) {
  dgold::DigitSystem system(cfg.base, cfg.digits);
  auto oracle = dgold::u_oracle_all(system, cfg.s);
  Report rep;
  rep.command = cfg.command;
  rep.config = cfg.echo();
  rep.columns = {"n", "u", "oracle", "abs_diff"};
  bool all_match = true;
  double sum_u = 0.0;
  for (int n = 0; n < cfg.base; ++n) {
    double u = dgold::u_column(system, cfg.s, n);
    double diff = std::abs(u - static_cast<double>(oracle[static_cast<std::size_t>(n)]));
    all_match = all_match && diff < 1e-8;
    sum_u += u;
    json r;
    r["n"] = n;
    r["u"] = round12(u);
    r["oracle"] = oracle[static_cast<std::size_t>(n)];
    r["abs_diff"] = round12(diff);
    rep.rows.push_back(std::move(r));
  }
  rep.summary["sum_u"] = round12(sum_u);
  rep.summary["tuple_count"] = round12(
      std::pow(static_cast<double>(system.digit_count()), 2.0 * cfg.s));
  rep.summary["max_ratio"] = round12(dgold::u_max_ratio(system, cfg.s));
  rep.summary["all_match"] = all_match;
  dgold::write_report(rep, cfg);
  return all_match ? 0 : kExitInvariant;
}

void add_set_options(CLI::App* cmd, RunConfig& cfg, bool with_k = true) {
  cmd->add_option("--base,-b", cfg.base, "number base")->capture_default_str();
  cmd->add_option("--digits,-d", cfg.digits, "allowed digits, comma separated")
      ->required()
      ->delimiter(',');
  if (with_k) cmd->add_option("--k,-k", cfg.k, "digit count")->required();
}

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format,-f", cfg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output,-o", cfg.output, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digitally restricted sets, prime sums and circle-method reports"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* enumerate = app.add_subcommand("enumerate", "list the members of the set");
  add_set_options(enumerate, cfg);
  add_output_options(enumerate, cfg);
  enumerate->add_option("--cap", cfg.enum_cap, "enumeration size cap")->capture_default_str();

  CLI::App* scan = app.add_subcommand("scan", "find even members with no two-prime sum");
  add_set_options(scan, cfg);
  add_output_options(scan, cfg);
  scan->add_option("--delta0", cfg.delta0, "prime cutoff exponent: P = X^(6 delta0)")
      ->capture_default_str();
  scan->add_option("--cutoff", cfg.cutoff, "explicit prime cutoff P (overrides delta0)");
  scan->add_option("--ref-delta", cfg.ref_delta, "exponent for the reference curve")
      ->capture_default_str();
  scan->add_option("--threads,-t", cfg.threads, "worker threads")->capture_default_str();
  scan->add_option("--cache", cfg.cache_path, "sieve cache file");

  CLI::App* arcs = app.add_subcommand("arcs", "major/minor arc decomposition report");
  add_set_options(arcs, cfg);
  add_output_options(arcs, cfg);
  arcs->add_option("--delta0", cfg.delta0, "arc parameter")->capture_default_str();
  arcs->add_option("--y", cfg.y, "divisor-discard parameter Y")->capture_default_str();
  arcs->add_option("--grid", cfg.grid_n, "grid size override (power of two > 2X)");
  arcs->add_option("--cutoff", cfg.cutoff, "explicit prime cutoff P (overrides delta0)");
  arcs->add_option("--cache", cfg.cache_path, "sieve cache file");

  CLI::App* moments = app.add_subcommand("moments", "even moments of f against the digit bound");
  add_set_options(moments, cfg);
  add_output_options(moments, cfg);
  moments->add_option("--s-min", cfg.s_min, "first moment order")->capture_default_str();
  moments->add_option("--s-max", cfg.s_max, "last moment order (0: up to the cap)")
      ->capture_default_str();

  CLI::App* sievebound = app.add_subcommand("sievebound", "multiples of m against the sieve bound");
  add_set_options(sievebound, cfg);
  add_output_options(sievebound, cfg);
  sievebound->add_option("--m-min", cfg.m_min, "first modulus")->capture_default_str();
  sievebound->add_option("--m-max", cfg.m_max, "last modulus")->capture_default_str();

  CLI::App* ucolumn = app.add_subcommand("ucolumn", "digit-column counts against the oracle");
  add_set_options(ucolumn, cfg, /*with_k=*/false);
  add_output_options(ucolumn, cfg);
  ucolumn->add_option("--s,-s", cfg.s, "tuple half-length s")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (enumerate->parsed()) { cfg.command = "enumerate"; return run_enumerate(cfg); }
    if (scan->parsed())      { cfg.command = "scan";      return run_scan(cfg); }
    if (arcs->parsed())      { cfg.command = "arcs";      return run_arcs(cfg); }
    if (moments->parsed())   { cfg.command = "moments";   return run_moments(cfg); }
    if (sievebound->parsed()){ cfg.command = "sievebound";return run_sievebound(cfg); }
    if (ucolumn->parsed())   { cfg.command = "ucolumn";   return run_ucolumn(cfg); }
  } catch (const dgold::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const dgold::cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const dgold::invariant_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  }
  return 0;
}
