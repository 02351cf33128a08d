#pragma once

// Command-line front end. `run` never calls exit(); it returns
// 0 on success, 1 on numeric failure and 2 on usage errors.

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "momzeta/acceptance.hpp"
#include "momzeta/binom_sums.hpp"
#include "momzeta/dist_core.hpp"
#include "momzeta/euler_maclaurin.hpp"
#include "momzeta/game_sim.hpp"
#include "momzeta/moment_zeta.hpp"
#include "momzeta/naive_oracle.hpp"
#include "momzeta/report.hpp"

namespace momzeta::cli {

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t default_seed = 42;

/// "1,5,10:100:10" -> 1 5 10 20 ... 100. Ranges are inclusive.
inline std::vector<std::uint64_t> parse_index_list(const std::string& text) {
  auto num = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size() || s.empty())
      throw usage_error("bad integer '" + std::string(s) + "' in list '" + text + "'");
    return v;
  };
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::vector<std::string_view> parts;
    std::string_view rest(item);
    for (;;) {
      const auto pos = rest.find(':');
      parts.push_back(rest.substr(0, pos));
      if (pos == std::string_view::npos) break;
      rest.remove_prefix(pos + 1);
    }
    if (parts.size() == 1) {
      out.push_back(num(parts[0]));
    } else if (parts.size() <= 3) {
      const auto a = num(parts[0]), b = num(parts[1]);
      const auto step = parts.size() == 3 ? num(parts[2]) : 1;
      if (step == 0 || b < a) throw usage_error("bad range '" + item + "'");
      for (std::uint64_t v = a; v <= b; v += step) out.push_back(v);
    } else {
      throw usage_error("bad range '" + item + "'");
    }
  }
  if (out.empty()) throw usage_error("empty list");
  return out;
}

inline std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    const auto r = std::from_chars(item.data(), item.data() + item.size(), v);
    if (r.ec != std::errc() || r.ptr != item.data() + item.size() || item.empty())
      throw usage_error("bad number '" + item + "' in list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

inline std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MOMZETA_SEED"); env && *env) {
    std::uint64_t v = 0;
    const std::string_view s(env);
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size()) throw usage_error("MOMZETA_SEED is not an integer");
    return v;
  }
  return default_seed;
}

struct DistSpec {
  std::string name = "uniform";
  std::optional<double> c;
  double beta = 0.0;
  double delta = 1.0;
  double s = 2.0;
  std::string file;
  bool normalize = false;

  bool is_abstract() const { return name == "riemann" || name == "riemann-scaled"; }

  EdgeDistribution distribution() const {
    if (name == "uniform") return EdgeDistribution::uniform();
    if (name == "beta-edge") return EdgeDistribution::beta_edge(beta, c, delta);
    if (name == "tabulated") {
      if (file.empty()) throw usage_error("--dist tabulated needs --file");
      std::optional<EdgeParams> edge;
      if (c) edge = EdgeParams{*c, beta, delta};
      return EdgeDistribution::tabulated(load_tabulated_csv(file, edge, normalize));
    }
    if (is_abstract()) throw usage_error("--dist " + name + " is a moment sequence, not a distribution");
    throw usage_error("unknown distribution '" + name + "'");
  }

  MomentSequence sequence() const {
    if (name == "riemann") return moment_sequence_power(1.0);
    if (name == "riemann-scaled") return moment_sequence_power(s);
    return moment_sequence(distribution());
  }

  std::string label() const {
    if (name == "riemann") return "riemann";
    if (name == "riemann-scaled") return "riemann-scaled(s=" + fmt17(s) + ")";
    if (name == "tabulated") return "tabulated(" + file + ")";
    return distribution().label();
  }

  void add_options(CLI::App* app) {
    app->add_option("--dist", name, "uniform | beta-edge | tabulated | riemann | riemann-scaled")
        ->check(CLI::IsMember({"uniform", "beta-edge", "tabulated", "riemann", "riemann-scaled"}));
    app->add_option("--c", c, "edge coefficient");
    app->add_option("--beta", beta, "edge exponent");
    app->add_option("--delta", delta, "tail correction exponent");
    app->add_option("--s", s, "exponent for riemann-scaled, m_j = j^-s");
    app->add_option("--file", file, "CSV density with header x,f");
    app->add_flag("--normalize", normalize, "rescale a tabulated density to unit mass");
  }
};

struct Common {
  std::string format;
  std::string output;
  unsigned workers = 1;

  void add_options(CLI::App* app, const std::string& default_format) {
    format = default_format;
    app->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("-o,--output", output, "write the report to this file");
    app->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  }
  bool json() const { return format == "json"; }
};

inline json header(const std::string& command) {
  json j;
  j["schema"] = report_schema;
  j["command"] = command;
  return j;
}

inline void emit(const Common& common, const std::string& text, std::ostream& out) {
  if (common.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(common.output, std::ios::binary);
  if (!f) throw usage_error("cannot write " + common.output);
  f << text;
}

inline std::string to_text(const json& j) { return dump_json(j) + "\n"; }

inline json sum_result_json(const SumResult& r) {
  json j;
  j["value"] = json_number(r.value);
  j["tail_bound"] = json_number(r.tail_bound);
  j["terms_used"] = r.terms_used;
  j["method"] = r.method;
  return j;
}

// Predictor parameters implied by the summed sequence.
inline PredictionParams prediction_params(const DistSpec& d) {
  PredictionParams p;
  p.s = d.s;
  if (d.name == "beta-edge") {
    p.beta = d.beta;
    p.c = d.c.value_or(d.beta + 1.0);
  } else if (d.name == "tabulated") {
    p.beta = d.beta;
    p.c = d.c.value_or(1.0);
  } else if (d.name == "riemann-scaled") {
    p.beta = d.s - 1.0;
  }
  return p;
}

inline ZetaSource naive_source(const DistSpec& d) {
  if (d.name == "riemann") return power_zeta_source(1.0);
  if (d.name == "riemann-scaled") return power_zeta_source(d.s);
  if (d.name == "uniform") return power_zeta_source(1.0, 1.0);
  throw usage_error("--method naive supports uniform, riemann and riemann-scaled only");
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moment zeta functions, alternating binomial sums and the covering game", "momzeta"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "show help for every subcommand");

  // zeta
  auto* zeta = app.add_subcommand("zeta", "moment zeta function or Riemann zeta at an integer");
  Common zc;
  DistSpec zd;
  bool z_riemann = false;
  double z_k = 0.0;
  double z_tol = 1e-12;
  std::uint64_t z_terms = 0;
  zc.add_options(zeta, "json");
  zd.add_options(zeta);
  zeta->add_flag("--riemann", z_riemann, "Riemann zeta at integer k");
  zeta->add_option("--k", z_k, "evaluation point")->required();
  zeta->add_option("--tol", z_tol, "truncation tolerance")->check(CLI::PositiveNumber);
  zeta->add_option("--terms", z_terms, "force the truncation index");

  // moments
  auto* moments = app.add_subcommand("moments", "moment sweep with tail-law check");
  Common mc;
  DistSpec md;
  std::string m_k = "1:10";
  mc.add_options(moments, "csv");
  md.add_options(moments);
  moments->add_option("--k", m_k, "indices, e.g. 1:10 or 1,100,10000");

  // sum
  auto* sum = app.add_subcommand("sum", "alternating binomial-zeta sum over an n-sweep");
  Common sc;
  DistSpec sd;
  std::string s_n;
  int s_kmin = 2;
  double s_tol = 1e-10;
  std::string s_predict;
  std::string s_method = "stable";
  unsigned s_bits = 0;
  sc.add_options(sum, "csv");
  sd.add_options(sum);
  sum->add_option("--n", s_n, "n values, e.g. 10,100 or 2:40")->required();
  sum->add_option("--kmin", s_kmin, "1 or 2")->check(CLI::IsMember({1, 2}));
  sum->add_option("--tol", s_tol, "truncation tolerance")->check(CLI::PositiveNumber);
  sum->add_option("--predict", s_predict, "mainisdef | alpha1 | riemann | riemann_scaled")
      ->check(CLI::IsMember({"mainisdef", "alpha1", "riemann", "riemann_scaled", "riemann-scaled"}));
  sum->add_option("--method", s_method, "stable | naive")->check(CLI::IsMember({"stable", "naive"}));
  sum->add_option("--precision", s_bits, "naive oracle working precision in bits");

  // predict
  auto* pred = app.add_subcommand("predict", "asymptotic predictors");
  Common pc;
  std::string p_kind;
  std::string p_n;
  PredictionParams p_params;
  pc.add_options(pred, "json");
  pred->add_option("--kind", p_kind, "mainisdef | alpha1 | riemann | riemann_scaled")
      ->required()
      ->check(CLI::IsMember({"mainisdef", "alpha1", "riemann", "riemann_scaled", "riemann-scaled"}));
  pred->add_option("--n", p_n, "n values")->required();
  pred->add_option("--c", p_params.c, "edge coefficient");
  pred->add_option("--beta", p_params.beta, "edge exponent");
  pred->add_option("--s", p_params.s, "Riemann scaling exponent");

  // game
  auto* game = app.add_subcommand("game", "the covering game");
  game->require_subcommand(1);
  auto* gsim = game->add_subcommand("simulate", "Monte Carlo runs");
  Common gc;
  DistSpec gd;
  std::string g_p;
  std::uint64_t g_n = 0;
  std::uint64_t g_trials = 100000;
  std::optional<std::uint64_t> g_seed;
  bool g_zeta = false;
  gc.add_options(gsim, "json");
  gd.add_options(gsim);
  gsim->add_option("--p", g_p, "fixed probabilities, e.g. 0.5,0.5");
  gsim->add_option("--n", g_n, "sets per game in random-p mode");
  gsim->add_option("--trials", g_trials, "number of games")->check(CLI::PositiveNumber);
  gsim->add_option("--seed", g_seed, "base seed (falls back to MOMZETA_SEED)");
  gsim->add_flag("--zeta", g_zeta, "estimate E[1/(1 - x1...xn)] instead of the game duration");
  auto* gex = game->add_subcommand("exact", "series and inclusion-exclusion oracles");
  Common ec;
  std::string e_p;
  double e_tol = 1e-14;
  ec.add_options(gex, "json");
  gex->add_option("--p", e_p, "probabilities, e.g. 0.5,0.5")->required();
  gex->add_option("--tol", e_tol, "series tolerance")->check(CLI::PositiveNumber);

  // dn
  auto* dn = app.add_subcommand("dn", "sum-integral defect D_n");
  Common dc;
  std::string d_n;
  std::string d_method = "dnform";
  std::uint64_t d_N = 1000000;
  unsigned d_bits = 320;
  dc.add_options(dn, "csv");
  dn->add_option("--n", d_n, "n values")->required();
  dn->add_option("--method", d_method, "dnform | direct")->check(CLI::IsMember({"dnform", "direct"}));
  dn->add_option("--N", d_N, "truncation for the direct method")->check(CLI::Range(std::uint64_t{2}, ~std::uint64_t{0}));
  dn->add_option("--precision", d_bits, "dnform working precision in bits (0: double)");

  // identity
  auto* ident = app.add_subcommand("identity", "Gamma-integral identities, quadrature vs closed form");
  Common ic;
  std::string i_L = "0.5,1,2";
  std::string i_alpha = "1,1.5,2,3";
  ic.add_options(ident, "csv");
  ident->add_option("--L", i_L, "L values");
  ident->add_option("--alpha", i_alpha, "alpha values (1 selects the compensated variant)");

  // verify
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  Common vc;
  std::optional<std::uint64_t> v_seed;
  std::string v_only;
  vc.add_options(verify, "json");
  verify->add_option("--seed", v_seed, "seed for the Monte Carlo checks (falls back to MOMZETA_SEED)");
  verify->add_option("--only", v_only, "comma-separated check ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (zeta->parsed()) {
      json j = header("zeta");
      SumResult r;
      if (z_riemann) {
        if (z_k != std::floor(z_k) || std::abs(z_k) > 1e6) throw usage_error("--riemann needs an integer --k");
        r = riemann_zeta_int(static_cast<int>(z_k));
        j["config"] = {{"source", "riemann"}, {"k", z_k}};
      } else {
        const auto ms = zd.sequence();
        ZetaOptions o;
        o.terms = z_terms;
        r = moment_zeta(ms, z_k, z_tol, o);
        j["config"] = {{"source", zd.label()}, {"k", z_k}, {"tol", z_tol}};
        j["abscissa"] = convergence_abscissa(ms);
      }
      j["result"] = sum_result_json(r);
      if (zc.json()) {
        emit(zc, to_text(j), out);
      } else {
        std::ostringstream os;
        csv_writer w(os, "k,value,tail_bound,terms_used,method");
        w.row(z_k, r.value, r.tail_bound, r.terms_used, r.method);
        emit(zc, os.str(), out);
      }
      return 0;
    }

    if (moments->parsed()) {
      const auto ks = parse_index_list(m_k);
      const auto ms = md.sequence();
      const auto& t = *ms.tail();
      json rows = json::array();
      std::ostringstream os;
      std::optional<csv_writer> w;
      if (!mc.json()) w.emplace(os, "k,moment,scaled,L,rel_dev");
      for (auto k : ks) {
        if (k < 1) throw usage_error("moment index must be >= 1");
        const double m = ms(k);
        const double scaled = std::pow(static_cast<double>(k), t.alpha) * m;
        const double rel = std::abs(scaled - t.L) / t.L;
        if (w) w->row(k, m, scaled, t.L, rel);
        rows.push_back({{"k", k}, {"moment", m}, {"scaled", scaled}, {"rel_dev", rel}});
      }
      if (mc.json()) {
        json j = header("moments");
        j["config"] = {{"dist", md.label()}};
        j["tail"] = {{"L", t.L}, {"alpha", t.alpha}, {"delta", json_number(t.delta)}};
        j["rows"] = rows;
        emit(mc, to_text(j), out);
      } else {
        emit(mc, os.str(), out);
      }
      return 0;
    }

    if (sum->parsed()) {
      const auto ns = parse_index_list(s_n);
      std::optional<PredictionKind> kind;
      if (!s_predict.empty()) kind = prediction_kind_from(s_predict);
      const auto params = prediction_params(sd);
      std::vector<SweepRow> rows;
      std::string method;
      if (s_method == "naive") {
        const auto src = naive_source(sd);
        for (auto n : ns) {
          NaiveOptions o;
          o.precision_bits = s_bits;
          SweepRow row;
          row.n = n;
          row.value = alt_sum_naive(static_cast<unsigned>(n), s_kmin, src, o);
          row.terms_used = n;
          rows.push_back(row);
        }
        method = "naive";
      } else {
        const auto ms = sd.sequence();
        for (auto n : ns) {
          const auto r = alt_sum_stable(ms, n, s_kmin, s_tol, {sc.workers});
          rows.push_back({n, r.value, std::nan(""), std::nan(""), r.tail_bound, r.terms_used});
          method = r.method;
        }
      }
      for (auto& row : rows) {
        if (!kind) continue;
        row.prediction = predict(*kind, params, static_cast<double>(row.n)).value;
        // Predictors are magnitudes; compare against |sum| when the sum is negative.
        row.residual = std::abs(row.value) - row.prediction;
      }
      if (sc.json()) {
        json j = header("sum");
        j["config"] = {{"dist", sd.label()},
                       {"kmin", s_kmin},
                       {"tol", s_tol},
                       {"method", s_method},
                       {"predict", kind ? json(to_string(*kind)) : json(nullptr)}};
        j["method"] = method;
        json arr = json::array();
        for (const auto& r : rows)
          arr.push_back({{"n", r.n},
                         {"value", json_number(r.value)},
                         {"prediction", json_number(r.prediction)},
                         {"residual", json_number(r.residual)},
                         {"tail_bound", json_number(r.tail_bound)},
                         {"terms_used", r.terms_used}});
        j["rows"] = arr;
        emit(sc, to_text(j), out);
      } else {
        std::ostringstream os;
        csv_writer w(os, sweep_csv_header);
        for (const auto& r : rows) w.row(r.n, r.value, r.prediction, r.residual, r.tail_bound, r.terms_used);
        emit(sc, os.str(), out);
      }
      return 0;
    }

    if (pred->parsed()) {
      const auto kind = prediction_kind_from(p_kind);
      const auto ns = parse_index_list(p_n);
      json rows = json::array();
      std::ostringstream os;
      std::optional<csv_writer> w;
      if (!pc.json()) w.emplace(os, "n,prediction");
      for (auto n : ns) {
        const auto p = predict(kind, p_params, static_cast<double>(n));
        if (w) w->row(n, p.value);
        rows.push_back({{"n", n}, {"prediction", p.value}});
      }
      if (pc.json()) {
        json j = header("predict");
        j["config"] = {{"kind", to_string(kind)}, {"c", p_params.c}, {"beta", p_params.beta}, {"s", p_params.s}};
        j["rows"] = rows;
        emit(pc, to_text(j), out);
      } else {
        emit(pc, os.str(), out);
      }
      return 0;
    }

    if (gsim->parsed()) {
      const std::uint64_t seed = resolve_seed(g_seed);
      SimulationReport r;
      if (g_zeta) {
        if (g_n < 1) throw usage_error("--zeta needs --n");
        r = zeta_expectation_mc(gd.distribution(), g_n, g_trials, seed, gc.workers);
      } else if (!g_p.empty()) {
        r = run_trials(GameParams(parse_real_list(g_p)), g_trials, seed, gc.workers);
      } else {
        if (g_n < 1) throw usage_error("give --p for fixed probabilities or --dist with --n for random ones");
        r = run_trials(gd.distribution(), g_n, g_trials, seed, gc.workers);
      }
      if (gc.json()) {
        json j = header("game simulate");
        j["mode"] = r.mode;
        if (!r.dist.empty()) j["dist"] = r.dist;
        j["n"] = r.n;
        j["trials"] = r.trials;
        j["seed"] = r.seed;
        j["mean"] = r.mean;
        j["variance"] = r.variance;
        j["stderr"] = r.stderr_;
        j["max"] = r.max_value;
        j["target"] = r.target ? json_number(*r.target) : json(nullptr);
        j["target_kind"] = r.target_kind;
        if (!r.warning.empty()) j["warning"] = r.warning;
        emit(gc, to_text(j), out);
      } else {
        std::ostringstream os;
        csv_writer w(os, "mode,n,trials,seed,mean,variance,stderr,target,target_kind");
        w.row(r.mode, r.n, r.trials, r.seed, r.mean, r.variance, r.stderr_, r.target.value_or(std::nan("")),
              r.target_kind);
        emit(gc, os.str(), out);
      }
      if (!r.warning.empty()) err << "warning: " << r.warning << '\n';
      return 0;
    }

    if (gex->parsed()) {
      const GameParams g(parse_real_list(e_p));
      const auto series = paper_T_series(g, e_tol);
      std::optional<double> ie;
      if (g.size() <= 20) ie = paper_T_inclusion_exclusion(g);
      if (ec.json()) {
        json j = header("game exact");
        j["n"] = g.size();
        j["paper_T"] = series.value;
        j["paper_T_bound"] = series.tail_bound;
        j["inclusion_exclusion"] = ie ? json(*ie) : json(nullptr);
        j["expected_rounds"] = series.value + 1.0;
        emit(ec, to_text(j), out);
      } else {
        std::ostringstream os;
        csv_writer w(os, "n,paper_T,paper_T_bound,inclusion_exclusion,expected_rounds");
        w.row(static_cast<std::uint64_t>(g.size()), series.value, series.tail_bound, ie.value_or(std::nan("")),
              series.value + 1.0);
        emit(ec, os.str(), out);
      }
      return 0;
    }

    if (dn->parsed()) {
      const auto ns = parse_index_list(d_n);
      struct row {
        std::uint64_t n;
        double d, dev, ndev, bound;
      };
      std::vector<row> rows;
      for (auto n : ns) {
        if (d_method == "direct") {
          const double d = defect_direct(static_cast<unsigned>(n), d_N);
          rows.push_back({n, d, std::abs(d - 0.5), static_cast<double>(n) * std::abs(d - 0.5), std::nan("")});
        } else if (n == 0) {
          throw usage_error("dnform needs n >= 1");
        } else if (d_bits == 0) {
          const auto r = defect_dnform<double>(static_cast<unsigned>(n), 1e-15);
          const double dev = std::abs(r.d_value - 0.5);
          rows.push_back({n, r.d_value, dev, static_cast<double>(n) * dev, r.tail_bound});
        } else {
          if (d_bits < 64) throw usage_error("--precision must be 0 or >= 64");
          scoped_precision guard(d_bits);
          const hp_float tol = boost::multiprecision::pow(hp_float(2), -static_cast<int>(d_bits - 48));
          const auto r = defect_dnform<hp_float>(static_cast<unsigned>(n), tol);
          const hp_float dev = abs(r.d_value - hp_float(0.5));
          rows.push_back({n, static_cast<double>(r.d_value), static_cast<double>(dev),
                          static_cast<double>(hp_float(dev * n)), static_cast<double>(r.tail_bound)});
        }
      }
      if (dc.json()) {
        json j = header("dn");
        j["config"] = {{"method", d_method},
                       {"N", d_method == "direct" ? json(d_N) : json(nullptr)},
                       {"precision", d_method == "direct" ? json(53) : json(d_bits == 0 ? 53u : d_bits)}};
        json arr = json::array();
        for (const auto& r : rows)
          arr.push_back({{"n", r.n},
                         {"D_n", r.d},
                         {"abs_dev", r.dev},
                         {"n_abs_dev", r.ndev},
                         {"tail_bound", json_number(r.bound)}});
        j["rows"] = arr;
        emit(dc, to_text(j), out);
      } else {
        std::ostringstream os;
        csv_writer w(os, "n,D_n,abs_dev,n_abs_dev");
        for (const auto& r : rows) w.row(r.n, r.d, r.dev, r.ndev);
        emit(dc, os.str(), out);
      }
      return 0;
    }

    if (ident->parsed()) {
      const auto Ls = parse_real_list(i_L);
      const auto as = parse_real_list(i_alpha);
      json rows = json::array();
      std::ostringstream os;
      std::optional<csv_writer> w;
      if (!ic.json()) w.emplace(os, "L,alpha,variant,quadrature,closed_form,abs_diff");
      for (double L : Ls) {
        for (double a : as) {
          const auto r = gamma_integral_identity_check(L, a);
          const double diff = std::abs(r.quadrature - r.closed_form);
          if (w) w->row(L, a, r.variant, r.quadrature, r.closed_form, diff);
          rows.push_back({{"L", L},
                          {"alpha", a},
                          {"variant", r.variant},
                          {"quadrature", r.quadrature},
                          {"closed_form", r.closed_form},
                          {"abs_diff", diff}});
        }
      }
      if (ic.json()) {
        json j = header("identity");
        j["rows"] = rows;
        emit(ic, to_text(j), out);
      } else {
        emit(ic, os.str(), out);
      }
      return 0;
    }

    if (verify->parsed()) {
      acceptance::Options o;
      o.seed = resolve_seed(v_seed);
      o.workers = vc.workers;
      std::vector<std::string> only;
      if (!v_only.empty()) {
        std::stringstream ss(v_only);
        std::string id;
        while (std::getline(ss, id, ',')) only.push_back(id);
        for (const auto& id : only) {
          bool known = false;
          for (const auto& entry : acceptance::registry()) known = known || entry.first == id;
          if (!known) throw usage_error("unknown check id '" + id + "'");
        }
      }
      const auto results = acceptance::run(o, only);
      std::size_t passed = 0;
      for (const auto& c : results) passed += c.pass ? 1 : 0;
      if (vc.json()) {
        json j = header("verify");
        j["seed"] = o.seed;
        json arr = json::array();
        for (const auto& c : results) arr.push_back(acceptance::to_json(c));
        j["criteria"] = arr;
        j["passed"] = passed;
        j["failed"] = results.size() - passed;
        j["all_pass"] = passed == results.size();
        emit(vc, to_text(j), out);
      } else {
        std::ostringstream os;
        csv_writer w(os, "id,pass,detail");
        for (const auto& c : results) w.row(c.id, std::string(c.pass ? "true" : "false"), "\"" + c.detail + "\"");
        emit(vc, os.str(), out);
      }
      return passed == results.size() ? 0 : 1;
    }
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const domain_error& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const invalid_distribution& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const missing_edge_data& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const too_many_sets& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const error& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace momzeta::cli
