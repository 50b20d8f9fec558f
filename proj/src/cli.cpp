#include "crowdest/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "crowdest/errors.hpp"
#include "crowdest/estimator.hpp"
#include "crowdest/exact_core.hpp"
#include "crowdest/general_case.hpp"
#include "crowdest/poly_lab.hpp"
#include "crowdest/q_analysis.hpp"
#include "crowdest/simulator.hpp"

namespace crowdest {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<long> s1, s2, s3, n, d, k;
  unsigned digits = 10;
  std::string format = "json";
  std::string out_path;
  std::string which = "p";
  std::uint64_t seed = 12345;
  std::uint64_t trials = 10000;
  std::optional<long> s2_min, s2_max, d_min, d_max;
};

long need(const std::optional<long>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

char sep_of(const Options& o) { return o.format == "tsv" ? '\t' : ','; }

std::string rat_str(const Rat& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Scenario scenario_of(const Options& o) {
  long s1 = need(o.s1, "--s1");
  long s2 = need(o.s2, "--s2");
  long s3 = o.s3.value_or(s1);
  return Scenario(s1, s2, s3);
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

void cmd_eval(const Options& o, std::ostream& out) {
  Scenario sc = scenario_of(o);
  long n = need(o.n, "--n");
  BigInt f = f_value(sc, n);
  if (o.format == "json") {
    emit(out, json{{"s1", sc.s1}, {"s2", sc.s2}, {"s3", sc.s3}, {"n", n}, {"f", f.get_str()}});
  } else {
    char s = sep_of(o);
    out << "n" << s << "f\n" << n << s << f.get_str() << "\n";
  }
}

void cmd_dist(const Options& o, std::ostream& out) {
  DistributionTable t = distribution(scenario_of(o));
  if (o.format == "json")
    out << t.to_json() << "\n";
  else
    t.write_csv(out, sep_of(o));
}

void cmd_argmax(const Options& o, std::ostream& out) {
  Scenario sc = scenario_of(o);
  ArgmaxReport r = argmax_scan(sc);
  if (o.format == "json") {
    emit(out, json{{"n_star", r.n_star},
                   {"tied", r.tied},
                   {"unimodal", r.unimodal},
                   {"union_mode", r.union_mode}});
  } else {
    char s = sep_of(o);
    out << "n_star" << s << "tied" << s << "unimodal" << s << "union_mode\n"
        << r.n_star << s << r.tied << s << r.unimodal << s << r.union_mode << "\n";
  }
}

void cmd_g(const Options& o, std::ostream& out) {
  long s1 = need(o.s1, "--s1");
  long s2 = need(o.s2, "--s2");
  if (s1 == 0 || s2 == 0) {
    // The closed form is not claimed at these corners; report the scan.
    ArgmaxReport r = argmax_scan(Scenario(s1, s2, s1));
    emit(out, json{{"g", r.n_star}, {"source", "scan"}});
    return;
  }
  GEstimate e = g_exact(s1, s2);
  if (o.format == "json") {
    json j{{"g", e.g},         {"delta", e.delta},           {"bracket", e.bracket},
           {"d0", e.d0},       {"d1_integer", e.d1_integer}, {"s1", e.s1},
           {"s2", e.s2}};
    if (e.certificate) {
      j["certificate"] = json{{"middle", rat_str(e.certificate->middle)},
                              {"neg_ratio", rat_str(e.certificate->neg_ratio)},
                              {"holds", e.certificate->holds}};
    }
    emit(out, j);
  } else {
    char s = sep_of(o);
    out << "s1" << s << "s2" << s << "g" << s << "delta" << s << "bracket\n"
        << e.s1 << s << e.s2 << s << e.g << s << e.delta << s << e.bracket << "\n";
  }
}

void cmd_g_table(const Options& o, std::ostream& out) {
  long s1 = need(o.s1, "--s1");
  long lo = o.s2_min.value_or(1), hi = o.s2_max.value_or(600);
  auto rows = g_table(s1, lo, hi);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({{"s2_lo", r.s2_lo}, {"s2_hi", r.s2_hi}, {"g", r.g}});
    emit(out, arr);
  } else {
    char s = sep_of(o);
    out << "s2_lo" << s << "s2_hi" << s << "g\n";
    for (const auto& r : rows) out << r.s2_lo << s << r.s2_hi << s << r.g << "\n";
  }
}

void cmd_delta_cases(const Options& o, std::ostream& out) {
  long s1 = need(o.s1, "--s1");
  long hi = o.s2_max.value_or(600);
  auto cases = delta_cases(s1, hi);
  if (o.format == "json") {
    emit(out, json(cases));
  } else {
    char s = sep_of(o);
    out << "s2" << s << "expression\n";
    for (long s2 : cases) out << s2 << s << bracket_expression_decimal(s1, s2, 2) << "\n";
  }
}

void cmd_poly(const Options& o, std::ostream& out) {
  unsigned d = static_cast<unsigned>(need(o.d, "--d"));
  Polynomial p;
  if (o.which == "p") {
    p = p_poly(d);
  } else if (o.which == "quotient") {
    p = q_and_r(d).quotient;
  } else if (o.which == "remainder") {
    p = q_and_r(d).remainder;
  } else if (o.which == "p-tilde") {
    p = reduced_pair(d).first;
  } else if (o.which == "r-tilde") {
    p = reduced_pair(d).second;
  } else {
    throw UsageError("--which must be p|quotient|remainder|p-tilde|r-tilde");
  }
  if (o.format == "json")
    emit(out, json{{"d", d}, {"which", o.which}, {"coefficients", p.coeff_strings()}});
  else
    p.write_csv(out, sep_of(o));
}

void cmd_ratio(const Options& o, std::ostream& out) {
  unsigned d = static_cast<unsigned>(need(o.d, "--d"));
  long x = need(o.s1, "--s1");
  Rat v = ratio_at(d, Rat(x));
  if (o.format == "json") {
    emit(out, json{{"d", d},
                   {"x", x},
                   {"ratio", rat_str(v)},
                   {"decimal", dec_fixed_trunc(v, o.digits)}});
  } else {
    char s = sep_of(o);
    out << "d" << s << "x" << s << "ratio" << s << "decimal\n"
        << d << s << x << s << rat_str(v) << s << dec_fixed_trunc(v, o.digits) << "\n";
  }
}

void cmd_q_eval(const Options& o, std::ostream& out) {
  unsigned d = static_cast<unsigned>(need(o.d, "--d"));
  QFunction qf = q_function(d);
  if (o.s2_min && o.s2_max) {
    // Sample dump for plotting: half-integer grid over [s2-min, s2-max].
    char s = sep_of(o);
    json arr = json::array();
    if (o.format != "json") out << "x" << s << "q\n";
    for (long twice = 2 * *o.s2_min; twice <= 2 * *o.s2_max; ++twice) {
      Rat x = make_rat(twice, 2);
      Rat q;
      try {
        q = q_eval(qf, x);
      } catch (const PoleError&) {
        continue;
      }
      if (o.format == "json")
        arr.push_back({{"x", rat_str(x)}, {"q", dec_fixed_trunc(q, o.digits)}});
      else
        out << dec_fixed_trunc(x, 1) << s << dec_fixed_trunc(q, o.digits) << "\n";
    }
    if (o.format == "json") emit(out, arr);
    return;
  }
  long x = need(o.s1, "--s1");
  Rat q = q_eval(qf, Rat(x));
  if (o.format == "json") {
    emit(out, json{{"d", d},
                   {"x", x},
                   {"q", rat_str(q)},
                   {"decimal", dec_fixed_trunc(q, o.digits)}});
  } else {
    char s = sep_of(o);
    out << "d" << s << "x" << s << "q" << s << "decimal\n"
        << d << s << x << s << rat_str(q) << s << dec_fixed_trunc(q, o.digits) << "\n";
  }
}

void write_extrema_header(std::ostream& out, char s) {
  out << "d" << s << "x_max" << s << "Q(x_max)" << s << "x_min" << s << "Q(x_min)" << s
      << "Q_lim\n";
}

void write_extrema_row(std::ostream& out, char s, const CriticalPointReport& r) {
  out << r.d << s << r.x_max << s << r.q_at_x_max << s << r.x_min << s << r.q_at_x_min << s
      << dec_fixed_trunc(r.q_lim, r.digits + 1) << "\n";
}

json extrema_json(const CriticalPointReport& r) {
  json pts = json::array();
  for (const auto& p : r.points) pts.push_back({{"x", p.x_str}, {"q", p.q_str}});
  return json{{"d", r.d},
              {"certified_count", r.certified_count},
              {"x_max", r.x_max},
              {"q_at_x_max", r.q_at_x_max},
              {"x_min", r.x_min},
              {"q_at_x_min", r.q_at_x_min},
              {"q_lim", rat_str(r.q_lim)},
              {"q_lim_decimal", dec_fixed_trunc(r.q_lim, r.digits + 1)},
              {"points", pts}};
}

void cmd_q_extrema(const Options& o, std::ostream& out) {
  unsigned d = static_cast<unsigned>(need(o.d, "--d"));
  CriticalPointReport r = critical_points(d, o.digits);
  if (o.format == "json") {
    emit(out, extrema_json(r));
  } else {
    char s = sep_of(o);
    write_extrema_header(out, s);
    write_extrema_row(out, s, r);
  }
}

void cmd_q_table(const Options& o, std::ostream& out, std::ostream& err) {
  long lo = o.d_min.value_or(5), hi = o.d_max.value_or(61);
  if (lo % 2 == 0) ++lo;
  json arr = json::array();
  char s = sep_of(o);
  if (o.format != "json") write_extrema_header(out, s);
  for (long d = lo; d <= hi; d += 2) {
    err << "q-table: d=" << d << "\n";
    CriticalPointReport r = critical_points(static_cast<unsigned>(d), o.digits);
    if (o.format == "json")
      arr.push_back(extrema_json(r));
    else
      write_extrema_row(out, s, r);
  }
  if (o.format == "json") emit(out, arr);
}

void cmd_conj2(const Options& o, std::ostream& out) {
  long lo = o.d ? *o.d : o.d_min.value_or(5);
  long hi = o.d ? *o.d : o.d_max.value_or(31);
  json arr = json::array();
  char s = sep_of(o);
  if (o.format != "json") out << "d" << s << "Q_at_threshold\n";
  for (long d = lo; d <= hi; ++d) {
    Conj2Evidence ev = conj2_evidence(static_cast<unsigned>(d), o.digits);
    if (o.format == "json")
      arr.push_back({{"d", d}, {"value", ev.value}, {"below_threshold", ev.below_threshold}});
    else
      out << d << s << ev.value << "\n";
  }
  if (o.format == "json") emit(out, o.d ? arr.at(0) : arr);
}

void cmd_fit_c(const Options& o, std::ostream& out, std::ostream& err) {
  long k = o.k.value_or(10);
  long dmin = o.d_min.value_or(51);
  unsigned digits = o.digits == 10 ? 80 : o.digits;  // paper depth by default
  std::vector<long> ds;
  for (long i = 0; i <= k; ++i) ds.push_back(dmin + 10 * i);
  err << "fit-c: samples";
  for (long d : ds) err << " " << d;
  err << " at " << digits << " digits\n";
  CoefficientFit fit = fit_coefficients(ds, static_cast<unsigned>(k), digits);
  if (o.format == "json") {
    emit(out, json{{"k", fit.k},
                   {"d_samples", fit.d_samples},
                   {"c", fit.c},
                   {"residuals", fit.residuals}});
  } else {
    char s = sep_of(o);
    out << "i" << s << "c_i\n";
    for (size_t i = 0; i < fit.c.size(); ++i) out << i << s << fit.c[i] << "\n";
  }
}

void cmd_general(const Options& o, std::ostream& out) {
  long s1 = need(o.s1, "--s1");
  long s2 = need(o.s2, "--s2");
  long s3 = need(o.s3, "--s3");
  ArgmaxReport rep = argmax_scan(Scenario(s1, s2, s3));
  FormulaN fn = formula_n(s1, s2, s3, o.digits == 10 ? 8 : o.digits);
  if (o.format == "json") {
    emit(out, json{{"s1", s1},
                   {"s2", s2},
                   {"s3", s3},
                   {"actual_n", rep.n_star},
                   {"formula_n", fn.n},
                   {"union_estimate", fn.union_size}});
  } else {
    char s = sep_of(o);
    out << "s1" << s << "s2" << s << "s3" << s << "actual_N" << s << "formula_N\n"
        << s1 << s << s2 << s << s3 << s << rep.n_star << s << fn.n << "\n";
  }
}

void cmd_d8(const Options& o, std::ostream& out) {
  long s1 = need(o.s1, "--s1");
  long s3 = need(o.s3, "--s3");
  long lo = o.s2_min.value_or(4), hi = o.s2_max.value_or(20);
  auto rows = d8_table(s1, s3, lo, hi);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"s1", r.s1},
                     {"s3", r.s3},
                     {"s2", r.s2},
                     {"actual_n", r.actual_n},
                     {"formula_n", r.formula_n}});
    emit(out, arr);
  } else {
    char s = sep_of(o);
    out << "s1" << s << "s3" << s << "s2" << s << "actual_N" << s << "formula_N\n";
    for (const auto& r : rows)
      out << r.s1 << s << r.s3 << s << r.s2 << s << r.actual_n << s << r.formula_n << "\n";
  }
}

void cmd_simulate(const Options& o, std::ostream& out) {
  SampleConfig cfg;
  cfg.scenario = scenario_of(o);
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  EmpiricalDistribution emp = sample_distribution(cfg);
  if (o.format == "json") {
    out << emp.to_json() << "\n";
  } else {
    char s = sep_of(o);
    out << "N" << s << "count\n";
    for (const auto& [n, c] : emp.counts) out << n << s << c << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact most-likely-union-size toolkit"};
  app.name("crowdest");
  app.fallthrough(true);

  app.add_option("--s1", o.s1, "size of A");
  app.add_option("--s2", o.s2, "size of B");
  app.add_option("--s3", o.s3, "size of C (defaults to s1 where applicable)");
  app.add_option("--n", o.n, "overlap count N");
  app.add_option("--d", o.d, "polynomial family index d");
  app.add_option("--k", o.k, "series depth k");
  app.add_option("--digits", o.digits, "output precision (default 10)");
  app.add_option("--format", o.format, "json|csv|tsv")
      ->check(CLI::IsMember({"json", "csv", "tsv"}));
  app.add_option("--out", o.out_path, "write the data stream to a file");
  app.add_option("--which", o.which, "poly selector: p|quotient|remainder|p-tilde|r-tilde");
  app.add_option("--seed", o.seed, "simulation seed");
  app.add_option("--trials", o.trials, "simulation trials");
  app.add_option("--s2-min", o.s2_min, "range start for s2 (or x in q-eval dumps)");
  app.add_option("--s2-max", o.s2_max, "range end for s2 (or x in q-eval dumps)");
  app.add_option("--d-min", o.d_min, "range start for d");
  app.add_option("--d-max", o.d_max, "range end for d");

  std::vector<std::string> names = {"eval",  "dist",  "argmax",    "g",      "g-table",
                                    "delta-cases", "poly",  "ratio", "q-eval", "q-extrema",
                                    "q-table",     "conj2", "fit-c", "general", "d8",
                                    "simulate"};
  for (const auto& nm : names) app.add_subcommand(nm);
  app.require_subcommand(0, 1);

  std::vector<const char*> argv;
  argv.push_back("crowdest");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto picked = app.get_subcommands();
  if (picked.empty()) {
    err << app.help() << "\n";
    return 2;
  }
  std::string cmd = picked.front()->get_name();

  std::ofstream file;
  std::ostream* data = &out;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "cannot open output file: " << o.out_path << "\n";
      return 2;
    }
    data = &file;
  }

  try {
    if (cmd == "eval") cmd_eval(o, *data);
    else if (cmd == "dist") cmd_dist(o, *data);
    else if (cmd == "argmax") cmd_argmax(o, *data);
    else if (cmd == "g") cmd_g(o, *data);
    else if (cmd == "g-table") cmd_g_table(o, *data);
    else if (cmd == "delta-cases") cmd_delta_cases(o, *data);
    else if (cmd == "poly") cmd_poly(o, *data);
    else if (cmd == "ratio") cmd_ratio(o, *data);
    else if (cmd == "q-eval") cmd_q_eval(o, *data);
    else if (cmd == "q-extrema") cmd_q_extrema(o, *data);
    else if (cmd == "q-table") cmd_q_table(o, *data, err);
    else if (cmd == "conj2") cmd_conj2(o, *data);
    else if (cmd == "fit-c") cmd_fit_c(o, *data, err);
    else if (cmd == "general") cmd_general(o, *data);
    else if (cmd == "d8") cmd_d8(o, *data);
    else if (cmd == "simulate") cmd_simulate(o, *data);
    else {
      err << "unknown subcommand: " << cmd << "\n";
      return 2;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    err << "internal invariant failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}

}  // namespace crowdest
