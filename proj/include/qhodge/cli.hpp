#pragma once

// Command-line front end. Kept in a header so tests can drive `run` directly.
//
//   qhodge series --target <name> [--a 0|1] [--order N | --cap-num K] [--format json|text]
//   qhodge check  --name <identity> [--a 0|1] [--order N | --cap-num K]
//   qhodge probe  [--a 0|1] [--order N | --cap-num K]
//   qhodge oracle --target count-u|walls|walls-blowup|dense-mul [...]
//
// Exit status: 0 computed / identity holds, 1 identity mismatch, 2 usage error.

#include "qhodge/checks.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qhodge::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

inline const std::vector<std::string>& series_targets() {
  static const std::vector<std::string> t{
      "theta",      "eta-sq",        "hilb-f1", "hilb-blowup", "hilb",
      "base-genfun", "blowup-genfun", "z2-num",  "z2-den",      "z1-bracket",
      "z1-bracket-from-B", "z1-conjectured-bracket", "z1-den"};
  return t;
}

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> n{"lemma-2.8",        "lemma-2.10", "eq-2.17",
                                          "thm-2.15",         "thm-3.9",    "lemma-3.1-strata",
                                          "lemma-3.1-ffield", "spec-xy1"};
  return n;
}

/// Descriptive alias -> check name.
inline const std::map<std::string, std::string>& check_aliases() {
  static const std::map<std::string, std::string> m{
      {"base-modes", "lemma-2.8"},      {"blowup-modes", "lemma-2.10"},
      {"hilb-ratio", "eq-2.17"},        {"blowup-formula", "thm-2.15"},
      {"bracket-from-b", "thm-3.9"},    {"u-strata", "lemma-3.1-strata"},
      {"u-point-counts", "lemma-3.1-ffield"}, {"specializations", "spec-xy1"}};
  return m;
}

inline std::vector<std::string> accepted_check_names() {
  std::vector<std::string> all = check_names();
  for (const auto& [alias, name] : check_aliases()) all.push_back(alias);
  return all;
}

/// One line per exponent: "<reduced exponent>  <coefficient>".
inline std::string series_text(const QSeries& s) {
  std::size_t width = 1;
  for (const auto& [e, c] : s.terms()) width = std::max(width, e.to_string().size());
  std::ostringstream os;
  os << "# cap q^" << s.cap().to_string() << "\n";
  for (const auto& [e, c] : s.terms())
    os << std::setw(static_cast<int>(width)) << e.to_string() << "  " << c.to_string() << "\n";
  return os.str();
}

/// A random sparse series for the dense-product oracle; exponents in
/// [lo, cap], t-graded and mixed monomials, small coefficients.
inline QSeries random_series(std::mt19937_64& rng, QExp cap, std::int64_t lo = 0,
                             int max_terms = 8) {
  QSeries s(cap);
  std::uniform_int_distribution<std::int64_t> exp_d(lo, cap.num);
  std::uniform_int_distribution<int> count_d(0, max_terms), mono_d(-2, 3), coeff_d(-5, 5),
      nmono_d(1, 3);
  const int count = count_d(rng);
  for (int i = 0; i < count; ++i) {
    HodgePoly c;
    const int nm = nmono_d(rng);
    for (int k = 0; k < nm; ++k) c.add_term({mono_d(rng), mono_d(rng)}, coeff_d(rng));
    s.add_term(QExp(exp_d(rng)), c);
  }
  return s;
}

struct Options {
  std::string target;
  std::string name;
  int a = 0;
  bool a_given = false;
  int order = 0;
  std::optional<std::int64_t> cap_num;
  std::string format = "json";
  std::string output;
  std::string mode = "closed";
  std::string surface = "f1";
  std::vector<int> c1{1, 0};
  std::vector<int> H{1, 2};
  int p = 2, m1 = 1, m2 = 1, n = 1, box = 20;
  std::uint64_t seed = 1;
  int trials = 50;

  QExp cap() const { return cap_num ? QExp(*cap_num) : QExp::integer(order); }
};

namespace detail {

inline ModuliProblem problem_from(const Options& o) {
  ModuliProblem P;
  P.c1 = DivisorClass(o.c1);
  P.H = DivisorClass(o.H);
  P.validate();
  return P;
}

inline GenfunMode mode_from(const std::string& m) {
  if (m == "per-n") return GenfunMode::per_n;
  if (m == "closed") return GenfunMode::closed;
  throw std::invalid_argument("unknown --mode '" + m + "' (expected per-n or closed)");
}

inline QSeries compute_series(const Options& o) {
  const QExp cap = o.cap();
  const std::string& t = o.target;
  if (t == "theta") return qs_theta(o.a, cap);
  if (t == "eta-sq") return qs_eta_sq(cap);
  if (t == "hilb-f1") return hilb_series(surfaces::f1(), cap);
  if (t == "hilb-blowup") return hilb_series(surfaces::f1_blowup(), cap);
  if (t == "hilb") return hilb_series(surfaces::by_name(o.surface), cap);
  if (t == "base-genfun") return base_genfun(problem_from(o), cap, mode_from(o.mode));
  if (t == "blowup-genfun") return blowup_genfun(problem_from(o), o.a, cap, mode_from(o.mode));
  if (t == "z2-num") return z2_closed(o.a, cap).numerator;
  if (t == "z2-den") return z2_closed(o.a, cap).denominator;
  if (t == "z1-bracket") return z1_bracket_closed(o.a, cap);
  if (t == "z1-bracket-from-B") return z1_bracket_from_B(o.a, cap);
  if (t == "z1-conjectured-bracket") return z1_bracket_conjectured(o.a, cap);
  if (t == "z1-den") return z1_closed(o.a, cap).denominator;
  throw std::invalid_argument("unknown series target '" + t + "'");
}

inline std::vector<int> a_values(const Options& o) {
  return o.a_given ? std::vector<int>{o.a} : std::vector<int>{0, 1};
}

inline std::vector<CheckResult> run_check(const Options& o, std::ostream& out) {
  const QExp cap = o.cap();
  const auto alias = check_aliases().find(o.name);
  const std::string& nm = alias == check_aliases().end() ? o.name : alias->second;
  std::vector<CheckResult> results;
  if (nm == "lemma-2.8") {
    results.push_back(check_base_genfun_modes(cap));
  } else if (nm == "lemma-2.10") {
    for (int a : a_values(o)) results.push_back(check_blowup_genfun_modes(a, cap));
  } else if (nm == "eq-2.17") {
    results.push_back(check_hilb_ratio(cap));
  } else if (nm == "thm-2.15") {
    for (int a : a_values(o)) results.push_back(check_blowup_formula(a, cap));
  } else if (nm == "thm-3.9") {
    for (int a : a_values(o)) results.push_back(check_z1_closed_form(a, cap));
  } else if (nm == "lemma-3.1-strata") {
    // The fixed range 0..8, extended when a larger order is asked for.
    results.push_back(check_u_strata(std::max(8, o.order)));
  } else if (nm == "lemma-3.1-ffield") {
    for (const auto& row : u_point_count_table({2, 3}, 5))
      out << "p=" << row.p << " (" << row.m1 << "," << row.m2 << ") count " << row.count
          << " vs e(U) at t=p " << row.expected << "\n";
    results.push_back(check_u_point_counts());
  } else if (nm == "spec-xy1") {
    for (int a : a_values(o))
      for (auto& r : check_specializations(a, cap)) results.push_back(std::move(r));
    results.push_back(check_hilb_euler(cap));
  } else {
    throw std::invalid_argument("unknown check '" + nm + "'");
  }
  return results;
}

inline ordered_json check_json(const CheckResult& r) {
  ordered_json j;
  j["name"] = r.name;
  j["pass"] = r.pass;
  j["detail"] = r.detail;
  j["first_diff"] = r.first_diff ? to_json(*r.first_diff) : ordered_json(nullptr);
  return j;
}

inline int run_oracle(const Options& o, std::ostream& out) {
  const std::string& t = o.target;
  if (t == "count-u") {
    const std::int64_t count = count_U_points(o.p, o.m1, o.m2);
    const BigInt expected = u_poly(o.m1, o.m2).at_t(o.p);
    out << "#U(" << o.m1 << "," << o.m2 << ")(F_" << o.p << ") = " << count
        << ", e(U) at t=" << o.p << " = " << expected << "\n";
    return BigInt(count) == expected ? kOk : kMismatch;
  }
  if (t == "walls" || t == "walls-blowup") {
    const DivisorClass c1(o.c1), H(o.H), f = surfaces::fiber();
    std::vector<WallClass> fast, brute;
    if (t == "walls") {
      fast = walls_base(surfaces::f1(), c1, H, f, o.n);
      brute = oracle::walls_by_exhaustion(c1, H, f, o.n, o.box);
    } else {
      for (const auto& w : walls_blowup_decompose(c1, o.a, o.n, H, f)) fast.push_back(w.lifted);
      std::sort(fast.begin(), fast.end(),
                [](const WallClass& x, const WallClass& y) { return x.zeta < y.zeta; });
      brute = oracle::blowup_walls_by_exhaustion(c1, o.a, H, f, o.n, o.box);
    }
    for (const auto& w : brute)
      out << "zeta=" << w.zeta.to_string() << " zeta^2=" << w.zeta_sq
          << " zeta.K=" << w.zeta_dot_K << " ell=" << w.ell << "\n";
    const bool same = fast == brute;
    out << brute.size() << " walls by exhaustion (box " << o.box << "), enumeration "
        << (same ? "agrees" : "DISAGREES") << "\n";
    return same ? kOk : kMismatch;
  }
  if (t == "dense-mul") {
    std::mt19937_64 rng(o.seed);
    const QExp cap = o.cap();
    int bad = 0;
    for (int i = 0; i < o.trials; ++i) {
      const QSeries x = random_series(rng, cap), y = random_series(rng, cap);
      if (x * y != oracle::dense_mul_reference(x, y)) ++bad;
    }
    out << o.trials << " random products at cap " << cap.to_string() << ", " << bad
        << " mismatches\n";
    return bad == 0 ? kOk : kMismatch;
  }
  throw std::invalid_argument("unknown oracle target '" + t + "'");
}

}  // namespace detail

/// Parses `args` (without the program name) and executes the subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series engine for wall-crossing and blowup generating functions"};
  app.require_subcommand(1);
  Options o;

  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--order", o.order, "integer q-exponent cap N")->check(CLI::NonNegativeNumber);
    sub->add_option_function<std::int64_t>(
        "--cap-num", [&](const std::int64_t& v) { o.cap_num = v; },
        "cap in 1/24 units (overrides --order)");
  };
  auto add_a = [&](CLI::App* sub) {
    sub->add_option_function<int>(
           "--a", [&](const int& v) { o.a = v; o.a_given = true; }, "blowup twist a")
        ->check(CLI::IsMember({0, 1}));
  };

  auto* series = app.add_subcommand("series", "print a truncated series");
  series->add_option("--target", o.target, "series name")
      ->required()
      ->check(CLI::IsMember(series_targets()));
  add_a(series);
  add_cap(series);
  series->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  series->add_option("--output", o.output, "write to file instead of stdout");
  series->add_option("--mode", o.mode, "per-n or closed (generating functions)")
      ->check(CLI::IsMember({"per-n", "closed"}));
  series->add_option("--surface", o.surface, "f1 or f1-blowup (target hilb)")
      ->check(CLI::IsMember({"f1", "f1-blowup"}));
  series->add_option("--c1", o.c1, "c1 in basis (sigma, f)")->delimiter(',')->expected(2);
  series->add_option("--H", o.H, "polarization in basis (sigma, f)")->delimiter(',')->expected(2);

  auto* check = app.add_subcommand("check", "verify an exact identity");
  check->add_option("--name", o.name, "identity name")
      ->required()
      ->check(CLI::IsMember(accepted_check_names()));
  add_a(check);
  add_cap(check);
  check->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  o.format = "text";

  auto* probe = app.add_subcommand("probe", "compare the closed and conjectured Z~ brackets");
  add_a(probe);
  add_cap(probe);
  probe->add_option("--output", o.output, "write to file instead of stdout");

  auto* orc = app.add_subcommand("oracle", "run a brute-force oracle");
  orc->add_option("--target", o.target)
      ->required()
      ->check(CLI::IsMember({"count-u", "walls", "walls-blowup", "dense-mul"}));
  orc->add_option("--p", o.p)->check(CLI::IsMember({2, 3, 5}));
  orc->add_option("--m1", o.m1)->check(CLI::NonNegativeNumber);
  orc->add_option("--m2", o.m2)->check(CLI::NonNegativeNumber);
  orc->add_option("--n", o.n);
  orc->add_option("--box", o.box)->check(CLI::PositiveNumber);
  orc->add_option("--seed", o.seed);
  orc->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  orc->add_option("--c1", o.c1)->delimiter(',')->expected(2);
  orc->add_option("--H", o.H)->delimiter(',')->expected(2);
  add_a(orc);
  add_cap(orc);

  // CLI11 parses in reverse order from a vector.
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  if (o.cap_num && *o.cap_num < 0) {
    err << "error: --cap-num must be non-negative\n";
    return kUsage;
  }

  try {
    if (series->parsed()) {
      if (series->count("--format") == 0) o.format = "json";
      const QSeries s = detail::compute_series(o);
      const std::string text =
          o.format == "json" ? to_json(s).dump() + "\n" : series_text(s);
      if (o.output.empty()) {
        out << text;
      } else {
        std::ofstream f(o.output);
        if (!f) throw std::invalid_argument("cannot open " + o.output);
        f << text;
      }
      return kOk;
    }
    if (check->parsed()) {
      const auto results = detail::run_check(o, out);
      bool all = true;
      ordered_json arr = ordered_json::array();
      for (const auto& r : results) {
        all = all && r.pass;
        if (o.format == "json") {
          arr.push_back(detail::check_json(r));
        } else {
          out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " (" << r.detail << ")\n";
        }
      }
      if (o.format == "json") out << arr.dump() << "\n";
      return all ? kOk : kMismatch;
    }
    if (probe->parsed()) {
      const ProbeReport rep = probe_conjectured_product(o.a, o.cap());
      const std::string text = to_json(rep).dump() + "\n";
      if (o.output.empty()) {
        out << text;
      } else {
        std::ofstream f(o.output);
        if (!f) throw std::invalid_argument("cannot open " + o.output);
        f << text;
      }
      return kOk;
    }
    return detail::run_oracle(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace qhodge::cli
