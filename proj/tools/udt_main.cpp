// Command-line front end: builds truncations, answers certified density
// queries, runs the verification suites, executes witness searches, and
// exports figure/profile CSV data.
//
// Exit codes: 0 success/verified, 1 verification failure, 2 usage error,
// 3 resource/cap error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "udt/construction.hpp"
#include "udt/density.hpp"
#include "udt/errors.hpp"
#include "udt/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// temp file + rename, so partially written outputs never appear
void write_file_atomic(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write file: " + path);
    out << content;
    if (!out) throw UsageError("write failed: " + path);
  }
  std::filesystem::rename(tmp, target);
}

udt::Rational parse_rat_arg(const std::string& s, const char* what) {
  try {
    return udt::parse_rational(s);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("bad rational for ") + what + ": '" + s + "'");
  }
}

std::string rat_line(const char* name, const udt::Rational& v) {
  return std::string(name) + " = " + udt::to_string(v) + " (~" + udt::decimal_string(v) + ")";
}

// collects named rationals and renders them as text lines or one JSON object
struct Report {
  bool json;
  nlohmann::json obj = nlohmann::json::object();
  std::string text;
  void add(const char* name, const udt::Rational& v) {
    if (json)
      obj[name] = udt::to_string(v);
    else
      text += rat_line(name, v) + "\n";
  }
  void print() const { std::cout << (json ? obj.dump(2) + "\n" : text); }
};

bool parse_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return format == std::string("json");
  throw UsageError("unsupported --format '" + format + "'");
}

udt::DensityMode parse_mode(const std::string& mode) {
  if (mode == "left") return udt::DensityMode::Left;
  if (mode == "right") return udt::DensityMode::Right;
  if (mode == "max") return udt::DensityMode::Max;
  throw UsageError("mode must be left, right or max");
}

// ------------------------------------------------------------------ build

int cmd_build(const std::string& eps_str, const std::string& out_path,
              const std::string& format) {
  Report rep{parse_format(format, {"text", "json"})};
  udt::Rational eps = parse_rat_arg(eps_str, "--epsilon");
  if (eps <= 0) throw UsageError("--epsilon must be > 0");
  udt::TruncatedSet t = udt::truncate(eps);
  write_file_atomic(out_path, udt::to_json_string(t) + "\n");
  rep.add("measure_upper", t.upper().measure());
  rep.add("omitted_mass", t.omitted_mass());
  rep.print();
  return kExitOk;
}

// ----------------------------------------------------------------- measure

int cmd_measure(const std::string& set_path, const std::string& from_str,
                const std::string& to_str, const std::string& format) {
  Report rep{parse_format(format, {"text", "json"})};
  udt::TruncatedSet t = udt::truncated_set_from_json_string(read_file(set_path));
  rep.add("measure_upper", t.upper().measure());
  rep.add("omitted_mass", t.omitted_mass());
  if (!from_str.empty() || !to_str.empty()) {
    if (from_str.empty() || to_str.empty()) throw UsageError("--from and --to go together");
    udt::Rational a = parse_rat_arg(from_str, "--from");
    udt::Rational b = parse_rat_arg(to_str, "--to");
    if (b < a) throw UsageError("--to must be >= --from");
    udt::MassBound mb = udt::measure_in(t, udt::Interval::closed(a, b));
    rep.add("window_lo", mb.lo);
    rep.add("window_hi", mb.hi);
  }
  rep.print();
  return kExitOk;
}

// ----------------------------------------------------------------- density

int cmd_density(const std::string& set_path, const std::string& x_str, const std::string& r_str,
                const std::string& mode, const std::string& format) {
  Report rep{parse_format(format, {"text", "json"})};
  udt::TruncatedSet t = udt::truncated_set_from_json_string(read_file(set_path));
  udt::Rational x = parse_rat_arg(x_str, "--x");
  udt::Rational r = parse_rat_arg(r_str, "--r");
  if (r <= 0) throw UsageError("--r must be > 0");
  udt::DensityMode m = parse_mode(mode);
  udt::DensityBound b = m == udt::DensityMode::Max
                            ? udt::max_one_sided_density(t, x, r)
                            : udt::one_sided_density(t, x, r,
                                                     m == udt::DensityMode::Left
                                                         ? udt::Side::Left
                                                         : udt::Side::Right);
  rep.add("lo", b.lo);
  rep.add("hi", b.hi);
  rep.print();
  return kExitOk;
}

// ----------------------------------------------------------------- profile

int cmd_profile(const std::string& set_path, const std::string& x_str, const std::string& rlo_str,
                const std::string& rhi_str, int steps, const std::string& mode,
                const std::string& out_path) {
  udt::TruncatedSet t = udt::truncated_set_from_json_string(read_file(set_path));
  udt::Rational x = parse_rat_arg(x_str, "--x");
  udt::Rational r_lo = parse_rat_arg(rlo_str, "--r-lo");
  udt::Rational r_hi = parse_rat_arg(rhi_str, "--r-hi");
  if (r_lo <= 0 || r_hi < r_lo) throw UsageError("need 0 < --r-lo <= --r-hi");
  if (steps < 1) throw UsageError("--steps must be >= 1");
  udt::DensityMode m = parse_mode(mode);
  std::ostringstream csv;
  csv << "x,r,side,lo,hi,lo_dec,hi_dec\n";
  for (int i = 0; i < steps; ++i) {
    udt::Rational r =
        steps == 1 ? r_lo : r_lo + (r_hi - r_lo) * udt::Rational(i) / udt::Rational(steps - 1);
    udt::DensityBound b = m == udt::DensityMode::Max
                              ? udt::max_one_sided_density(t, x, r)
                              : udt::one_sided_density(t, x, r,
                                                       m == udt::DensityMode::Left
                                                           ? udt::Side::Left
                                                           : udt::Side::Right);
    csv << udt::to_string(x) << ',' << udt::to_string(r) << ',' << mode << ','
        << udt::to_string(b.lo) << ',' << udt::to_string(b.hi) << ','
        << udt::decimal_string(b.lo) << ',' << udt::decimal_string(b.hi) << "\n";
  }
  write_file_atomic(out_path, csv.str());
  return kExitOk;
}

// ------------------------------------------------------------------ verify

struct SuiteRunner {
  bool all_ok = true;
  void check(bool ok, const std::string& what) {
    if (!ok) all_ok = false;
    std::cout << (ok ? "ok " : "FAIL ") << what << "\n";
  }
};

int suite_calc() {
  SuiteRunner s;
  using udt::Address;
  s.check(udt::a_value(Address({1})) == udt::Rational(1, 2), "a_1 = 1/2");
  s.check(udt::a_value(Address({2})) == udt::Rational(1, 4), "a_2 = 1/4");
  s.check(udt::a_value(Address({1, 1})) == udt::Rational(17, 64), "a_11 = 17/64");
  s.check(udt::a_value(Address({1, 2})) == udt::Rational(33, 128), "a_12 = 33/128");
  s.check(udt::r_value(Address({1, 1})) == udt::Rational(1, 128), "r_11 = 1/128");
  return s.all_ok ? kExitOk : kExitVerifyFailed;
}

void for_each_address(int max_depth, std::int64_t index_cap,
                      const std::function<void(const udt::Address&)>& fn) {
  std::vector<std::int64_t> pre;
  auto walk = [&](auto&& self) -> void {
    if (!pre.empty()) fn(udt::Address(pre));
    if (static_cast<int>(pre.size()) == max_depth) return;
    for (std::int64_t n = 1; n <= index_cap; ++n) {
      pre.push_back(n);
      self(self);
      pre.pop_back();
    }
  };
  walk(walk);
}

int suite_lemma(int depth, std::int64_t index_cap, const udt::Rational& eps) {
  if (depth > 4 || index_cap > 10 || eps < udt::pow2(-60))
    throw udt::CapExceeded("lemma suite caps: depth <= 4, index <= 10, eps >= 2^-60");
  udt::TruncatedSet t = udt::truncate(eps);
  SuiteRunner s;
  for_each_address(depth, index_cap, [&](const udt::Address& u) {
    int k = u.depth();
    udt::Interval kk = udt::k_interval(u);
    udt::MassBound mb = udt::measure_in(t, kk);
    udt::Rational need = (udt::Rational(1) - 2 * udt::alpha(k)) * kk.length();
    s.check(mb.lo >= need, "K(" + u.str() + "): |E∩K|.lo = " + udt::to_string(mb.lo) +
                               " >= (1-2a_k)|K| = " + udt::to_string(need));
  });
  return s.all_ok ? kExitOk : kExitVerifyFailed;
}

int suite_kicsi(int depth, std::int64_t index_cap, const udt::Rational& eps) {
  if (depth > 3 || index_cap > 10 || eps < udt::pow2(-60))
    throw udt::CapExceeded("kicsi suite caps: depth <= 3, index <= 10, eps >= 2^-60");
  udt::TruncatedSet t = udt::truncate(eps);
  SuiteRunner s;
  for_each_address(depth, index_cap, [&](const udt::Address& u) {
    int k = u.depth();
    udt::Rational r = udt::r_value(u);
    udt::Rational ceiling = udt::Rational(1) - udt::alpha(k) / 4;
    for (const udt::Rational& x :
         {udt::a_value(udt::parent_successor(u)), udt::a_value(udt::child(u, 1)),
          udt::a_value(udt::child(u, 5)), udt::a_value(u)}) {
      udt::DensityBound b = udt::max_one_sided_density(t, x, 2 * r);
      s.check(b.hi <= ceiling, "K(" + u.str() + ") x=" + udt::to_string(x) +
                                   ": density_hi = " + udt::to_string(b.hi) +
                                   " <= 1 - a_k/4 = " + udt::to_string(ceiling));
    }
  });
  return s.all_ok ? kExitOk : kExitVerifyFailed;
}

int suite_base2() {
  SuiteRunner s;
  std::vector<std::int64_t> ones(10, 1);
  udt::Rational r10 = udt::r_value(udt::Address(ones));
  s.check(udt::pow2(-100) < r10 && r10 == udt::pow2(-47),
          "delta'_1 = 2^-100 < 2^-47 = r(1,...,1)");
  s.check(udt::Rational(1, 2) < udt::Rational(1) - 384 * udt::alpha(10),
          "gamma'_1 = 1/2 < 1 - 384*10^-10");
  udt::SequenceSpec attacked = udt::SequenceSpec::geometric(
      udt::Rational(1), udt::Rational(1, 2), udt::Rational(1), udt::Rational(1, 2));
  udt::SudtCertificate cert = udt::find_non_sudt_witness(attacked, 1);
  s.check(cert.steps.size() == 1 && cert.steps[0].m == 42,
          "m_1 = 42 for attacked gamma_n = 1-2^-n");
  udt::Rational sel = udt::pow10(-12) / 4;
  s.check(udt::pow2(-42) < sel && sel <= udt::pow2(-41), "2^-42 < 10^-12/4 <= 2^-41");
  return s.all_ok ? kExitOk : kExitVerifyFailed;
}

int suite_disjoint(const udt::Rational& eps) {
  if (eps < udt::pow2(-44)) throw udt::CapExceeded("disjoint suite cap: eps >= 2^-44");
  auto removals = udt::enumerate_removals(eps);
  std::vector<udt::Interval> all;
  for (const auto& rp : removals) {
    all.push_back(rp.left);
    all.push_back(rp.right);
  }
  std::sort(all.begin(), all.end(),
            [](const udt::Interval& a, const udt::Interval& b) { return a.lo < b.lo; });
  SuiteRunner s;
  bool disjoint = true;
  for (std::size_t i = 1; i < all.size(); ++i)
    if (!(all[i - 1].hi < all[i].lo)) disjoint = false;
  s.check(disjoint, "closures of all " + std::to_string(all.size()) +
                        " removal intervals at eps = " + udt::to_string(eps) +
                        " are pairwise disjoint");
  return s.all_ok ? kExitOk : kExitVerifyFailed;
}

// ----------------------------------------------------------------- witness

int cmd_witness(const std::string& kind, const std::string& gamma_spec,
                const std::string& delta_spec, int levels, int j_max, const std::string& eps_str,
                const std::string& set_path, const std::string& intervals_json,
                std::int64_t index_cap, const std::string& out_path) {
  if (kind == "non-udt") {
    if (gamma_spec.empty() || delta_spec.empty())
      throw UsageError("non-udt witness needs --gamma and --delta");
    udt::SequenceSpec seq = udt::SequenceSpec::parse(gamma_spec, delta_spec);
    udt::Rational eps = parse_rat_arg(eps_str, "--epsilon");
    if (eps <= 0) throw UsageError("--epsilon must be > 0");
    udt::WitnessOptions opt;
    if (index_cap > 0) opt.index_cap = index_cap;
    udt::WitnessCertificate cert = udt::find_non_udt_witness(seq, levels, eps, opt);
    write_file_atomic(out_path, udt::to_json_string(cert) + "\n");
    udt::VerifyReport rep = udt::verify_non_udt_witness(cert);
    for (const auto& line : rep.lines) std::cout << line << "\n";
    std::cout << (rep.ok ? "verified" : "NOT verified") << "\n";
    return rep.ok ? kExitOk : kExitVerifyFailed;
  }
  if (kind == "non-sudt") {
    if (gamma_spec.empty() || delta_spec.empty())
      throw UsageError("non-sudt witness needs --gamma and --delta (the attacked pair)");
    udt::SequenceSpec attacked = udt::SequenceSpec::parse(gamma_spec, delta_spec);
    udt::SudtOptions opt;
    udt::SudtCertificate cert = udt::find_non_sudt_witness(attacked, j_max, opt);
    write_file_atomic(out_path, udt::to_json_string(cert) + "\n");
    udt::VerifyReport rep = udt::verify_non_sudt_witness(cert);
    for (const auto& line : rep.lines) std::cout << line << "\n";
    std::cout << (rep.ok ? "verified" : "NOT verified") << "\n";
    return rep.ok ? kExitOk : kExitVerifyFailed;
  }
  if (kind == "sudt-finite") {
    udt::IntervalSet s;
    if (!intervals_json.empty())
      s = udt::interval_set_from_json_string(intervals_json);
    else if (!set_path.empty())
      s = udt::interval_set_from_json_string(read_file(set_path));
    else
      throw UsageError("sudt-finite needs --intervals or --set");
    udt::SequenceSpec gammas =
        gamma_spec.empty()
            ? udt::SequenceSpec::geometric(udt::Rational(1), udt::Rational(1, 10),
                                           udt::Rational(1), udt::Rational(1, 2))
            : udt::SequenceSpec::parse(gamma_spec,
                                       delta_spec.empty() ? std::string("geo:1:1/2") : delta_spec);
    int n_max = levels > 0 ? levels : 6;
    udt::SudtFiniteCertificate cert = udt::sudt_deltas_finite_union(s, gammas, n_max);
    write_file_atomic(out_path, udt::to_json_string(cert) + "\n");
    bool ok = true;
    for (const auto& ec : cert.endpoint_checks) {
      bool yes = ec.result == udt::Tri::Yes;
      ok = ok && yes;
      std::cout << (yes ? "ok " : "FAIL ") << "endpoint x = " << udt::to_string(ec.x) << " ("
                << (ec.side == udt::Side::Right ? "right" : "left") << " side)\n";
    }
    std::cout << rat_line("delta", cert.min_component_length) << "\n";
    std::cout << (ok ? "verified" : "NOT verified") << "\n";
    return ok ? kExitOk : kExitVerifyFailed;
  }
  throw UsageError("unknown witness kind '" + kind + "'");
}

int cmd_recheck(const std::string& cert_path) {
  std::string text = read_file(cert_path);
  auto j = nlohmann::json::parse(text);
  std::string type = j.at("type").get<std::string>();
  udt::VerifyReport rep;
  if (type == "non-udt")
    rep = udt::verify_non_udt_witness(udt::witness_certificate_from_json_string(text));
  else if (type == "non-sudt")
    rep = udt::verify_non_sudt_witness(udt::sudt_certificate_from_json_string(text));
  else
    throw UsageError("cannot recheck certificate type '" + type + "'");
  for (const auto& line : rep.lines) std::cout << line << "\n";
  std::cout << (rep.ok ? "verified" : "NOT verified") << "\n";
  return rep.ok ? kExitOk : kExitVerifyFailed;
}

// ------------------------------------------------------------------ figure

int cmd_figure(int depth, std::int64_t index_cap, const std::string& out_path) {
  if (depth < 0 || index_cap < 0) throw UsageError("--depth and --index-cap must be >= 0");
  std::ostringstream csv;
  csv << "addr,kind,lo,hi,lo_dec,hi_dec\n";
  for (const auto& row : udt::figure_rows(depth, index_cap))
    csv << row.addr.str() << ',' << row.kind << ',' << udt::to_string(row.lo) << ','
        << udt::to_string(row.hi) << ',' << udt::decimal_string(row.lo) << ','
        << udt::decimal_string(row.hi) << "\n";
  write_file_atomic(out_path, csv.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified density-type verification toolkit"};
  app.require_subcommand(1);

  std::string eps_str = "1/1048576";
  std::string out_path = "-";
  std::string set_path, from_str, to_str, x_str, r_str;
  std::string mode = "max";
  std::string rlo_str, rhi_str;
  int steps = 16;
  std::string suite;
  int depth = 3;
  std::int64_t index_cap = 6;
  std::string kind, gamma_spec, delta_spec, intervals_json, recheck_path;
  std::string format = "text";
  int levels = 3;
  int j_max = 1;

  auto* build = app.add_subcommand("build", "materialize a truncation as JSON");
  build->add_option("--epsilon", eps_str, "removal length threshold (rational)")->required();
  build->add_option("--out", out_path, "output path, '-' for stdout");
  build->add_option("--format", format, "text | json");

  auto* measure = app.add_subcommand("measure", "exact measure of a set file");
  measure->add_option("--set", set_path, "TruncatedSet JSON file")->required();
  measure->add_option("--from", from_str, "window start (rational)");
  measure->add_option("--to", to_str, "window end (rational)");
  measure->add_option("--format", format, "text | json");

  auto* density = app.add_subcommand("density", "certified one-sided density bounds");
  density->add_option("--set", set_path, "TruncatedSet JSON file")->required();
  density->add_option("--x", x_str, "query point (rational)")->required();
  density->add_option("--r", r_str, "radius (rational)")->required();
  density->add_option("--mode", mode, "left | right | max");
  density->add_option("--format", format, "text | json");

  auto* profile = app.add_subcommand("profile", "density profile CSV over a radius range");
  profile->add_option("--set", set_path, "TruncatedSet JSON file")->required();
  profile->add_option("--x", x_str, "query point (rational)")->required();
  profile->add_option("--r-lo", rlo_str, "smallest radius")->required();
  profile->add_option("--r-hi", rhi_str, "largest radius")->required();
  profile->add_option("--steps", steps, "number of rows");
  profile->add_option("--mode", mode, "left | right | max");
  profile->add_option("--out", out_path, "output path, '-' for stdout");
  profile->add_option("--format", format, "csv");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "calc | lemma | kicsi | base2 | disjoint")->required();
  verify->add_option("--depth", depth, "address depth cap");
  verify->add_option("--index-cap", index_cap, "index cap per level");
  verify->add_option("--epsilon", eps_str, "truncation threshold (rational)");

  auto* witness = app.add_subcommand("witness", "run a witness search and verify it");
  witness->add_option("--kind", kind, "non-udt | non-sudt | sudt-finite");
  witness->add_option("--gamma", gamma_spec, "gamma sequence, geo:<c>:<q> or table:...");
  witness->add_option("--delta", delta_spec, "delta sequence, geo:<c>:<q> or table:...");
  witness->add_option("--levels", levels, "levels (non-udt) / n_max (sudt-finite)");
  witness->add_option("--j-max", j_max, "induction steps (non-sudt)");
  witness->add_option("--epsilon", eps_str, "truncation threshold (non-udt)");
  witness->add_option("--set", set_path, "IntervalSet JSON file (sudt-finite)");
  witness->add_option("--intervals", intervals_json, "inline IntervalSet JSON (sudt-finite)");
  witness->add_option("--index-cap", index_cap, "search cap");
  witness->add_option("--out", out_path, "certificate path, '-' for stdout");
  witness->add_option("--recheck", recheck_path, "re-verify an existing certificate file");

  auto* figure = app.add_subcommand("figure", "CSV of the construction geometry");
  figure->add_option("--depth", depth, "address depth")->required();
  figure->add_option("--index-cap", index_cap, "largest index per level")->required();
  figure->add_option("--out", out_path, "output path, '-' for stdout");
  figure->add_option("--format", format, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(eps_str, out_path, format);
    if (measure->parsed()) return cmd_measure(set_path, from_str, to_str, format);
    if (density->parsed()) return cmd_density(set_path, x_str, r_str, mode, format);
    if (profile->parsed()) {
      if (profile->count("--format") && format != "csv")
        throw UsageError("profile only emits csv");
      return cmd_profile(set_path, x_str, rlo_str, rhi_str, steps, mode, out_path);
    }
    if (verify->parsed()) {
      udt::Rational eps = verify->count("--epsilon") ? parse_rat_arg(eps_str, "--epsilon")
                                                     : udt::pow2(-40);
      if (suite == "calc") return suite_calc();
      if (suite == "lemma") return suite_lemma(depth, index_cap, eps);
      if (suite == "kicsi") return suite_kicsi(depth, index_cap, eps);
      if (suite == "base2") return suite_base2();
      if (suite == "disjoint")
        return suite_disjoint(verify->count("--epsilon") ? eps : udt::pow2(-30));
      throw UsageError("unknown suite '" + suite + "'");
    }
    if (witness->parsed()) {
      if (!recheck_path.empty()) return cmd_recheck(recheck_path);
      if (kind.empty()) throw UsageError("witness needs --kind or --recheck");
      std::int64_t cap = witness->count("--index-cap") ? index_cap : 0;
      return cmd_witness(kind, gamma_spec, delta_spec, levels, j_max, eps_str, set_path,
                         intervals_json, cap, out_path);
    }
    if (figure->parsed()) {
      if (figure->count("--format") && format != "csv")
        throw UsageError("figure only emits csv");
      return cmd_figure(depth, index_cap, out_path);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const udt::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const udt::RangeExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const udt::NeedsFinerEps& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const udt::NotCertifiable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
