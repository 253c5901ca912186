// Copyright 2026 The qpack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file cli.hpp
 * @brief The `qpack` command line: construct, verify, bound, scan, exponent.
 *
 * Machine-readable output (line-delimited JSON or CSV) goes to `out`, human
 * summaries and errors to `err`. Exit codes: 0 success, 1 a verification
 * check failed, 2 usage, input or format error.
 */
#pragma once

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpack/bounds.hpp"
#include "qpack/construction.hpp"
#include "qpack/io.hpp"
#include "qpack/verifier.hpp"

namespace qpack::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// --jobs, overridden by QPACK_JOBS when set to a positive integer.
inline unsigned effective_jobs(unsigned requested) {
  if (const char* env = std::getenv("QPACK_JOBS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 4096) return static_cast<unsigned>(v);
  }
  return parallel::resolve_jobs(requested);
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::uint64_t q = 0;
  std::optional<std::uint32_t> count;
  std::string out_path;  ///< empty: geometry JSON on `out`
  unsigned jobs = 0;
};

inline int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  if (a.q < 3) {
    err << "error: q must be a prime power >= 3\n";
    return kUsage;
  }
  if (!gf::is_prime_power(a.q)) {
    err << "error: q = " << a.q << " is not a prime power\n";
    return kUsage;
  }
  if (a.q > 32) {
    err << "error: q = " << a.q << " is too large to construct (limit 32)\n";
    return kUsage;
  }
  try {
    const gf::Field f = gf::make_field(a.q);
    io::GeometryFile file{construction::build_family(f, a.count, effective_jobs(a.jobs)), io::json::object()};
    file.metadata = {{"construction", {{"q", a.q}, {"count", file.family.classes.size()}}},
                     {"tool", io::kToolVersion}};
    const std::string text = io::serialize_geometry(file);
    const std::uint64_t points = geometry::num_points(f);
    const std::size_t per_class = file.family.classes.front().lines.size();
    if (a.out_path.empty() || a.out_path == "-") {
      out << text;
    } else {
      std::ofstream os(a.out_path, std::ios::binary);
      if (!os || !(os << text)) {
        err << "error: cannot write " << a.out_path << "\n";
        return kUsage;
      }
      out << io::json{{"points", points},
                      {"classes", file.family.classes.size()},
                      {"lines_per_class", per_class},
                      {"out", a.out_path}}
                 .dump()
          << "\n";
    }
    err << "GF(" << a.q << "): " << points << " points, " << file.family.classes.size() << " classes, "
        << per_class << " lines per class\n";
    return kOk;
  } catch (const CountOutOfRange& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names = {"pls", "order", "triangle", "disjoint", "union", "gq", "counting"};
  return names;
}

inline const std::vector<std::string>& default_checks() {
  static const std::vector<std::string> names = {"pls", "order", "triangle", "disjoint", "union"};
  return names;
}

struct VerifyArgs {
  std::string in_path;
  std::vector<std::string> checks;  ///< empty: default set
  bool exhaustive = false;
  unsigned jobs = 0;
};

namespace detail {

struct Target {
  std::string name;
  verifier::GenericIncidence g;
};

class Reporter {
 public:
  explicit Reporter(std::ostream& out) : out_(out) {}

  /// Emits one record; returns false when the check failed.
  bool emit(const std::string& check, const std::string& target, const std::string& verdict, double elapsed,
            io::json extra = io::json::object()) {
    io::json j = {{"check", check}, {"target", target}, {"verdict", verdict}};
    for (auto& [k, v] : extra.items()) j[k] = v;
    j["elapsed"] = elapsed;
    out_ << j.dump() << "\n";
    const bool ok = verdict == "pass" || verdict == "skipped";
    failed_ |= !ok;
    return ok;
  }

  bool failed() const { return failed_; }

 private:
  std::ostream& out_;
  bool failed_ = false;
};

template <class F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline io::json verdict_extra(const verifier::Verdict& v, bool exhaustive) {
  io::json j = io::json::object();
  if (v.witness) j["witness"] = io::witness_to_json(*v.witness);
  if (exhaustive) j["violations"] = v.violations;
  return j;
}

inline void run_structure_checks(const std::set<std::string>& want, const Target& t,
                                 const verifier::CheckOptions& opt, Reporter& rep) {
  std::optional<bool> pls_ok;
  auto pls = [&] {
    if (!pls_ok) pls_ok = verifier::check_pls(t.g).ok();
    return *pls_ok;
  };
  if (want.count("pls")) {
    verifier::Verdict v;
    const double dt = timed([&] { v = verifier::check_pls(t.g, opt); });
    pls_ok = v.ok();
    rep.emit("pls", t.name, v.ok() ? "pass" : "fail", dt, verdict_extra(v, opt.exhaustive));
  }
  if (want.count("order")) {
    io::json extra = io::json::object();
    std::string verdict;
    const double dt = timed([&] {
      try {
        const auto o = verifier::check_order(t.g);
        if (o.ok()) {
          verdict = "pass";
          extra["order"] = {{"s", o.order->s_order}, {"t", o.order->t_order}};
        } else {
          verdict = "fail";
          extra["witness"] = io::witness_to_json(*o.witness);
        }
      } catch (const MalformedStructure& e) {
        verdict = "fail";
        extra["error"] = e.what();
      }
    });
    rep.emit("order", t.name, verdict, dt, extra);
  }
  auto needs_pls = [&](const std::string& check, auto&& run) {
    if (!want.count(check)) return;
    if (!pls()) {
      rep.emit(check, t.name, "fail", 0.0, {{"error", "precondition failed: not a partial linear space"}});
      return;
    }
    verifier::Verdict v;
    const double dt = timed([&] { v = run(); });
    rep.emit(check, t.name, v.ok() ? "pass" : "fail", dt, verdict_extra(v, opt.exhaustive));
  };
  needs_pls("triangle", [&] { return verifier::check_triangle_free(t.g, opt); });
  needs_pls("gq", [&] { return verifier::check_gq(t.g, opt); });
  if (want.count("counting")) {
    io::json extra = io::json::object();
    std::string verdict;
    const double dt = timed([&] {
      try {
        const auto r = verifier::counting_bound(t.g, opt);
        verdict = r.holds ? "pass" : "fail";
        extra["report"] = {{"num_points", r.num_points}, {"s", r.s_order},   {"t", r.t_order},
                           {"bound", r.bound},           {"holds", r.holds}, {"equality", r.equality}};
      } catch (const Error& e) {
        verdict = "fail";
        extra["error"] = std::string("precondition failed: ") + e.what();
      }
    });
    rep.emit("counting", t.name, verdict, dt, extra);
  }
}

inline std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace detail

inline int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::set<std::string> want;
  for (const auto& c : a.checks.empty() ? default_checks() : a.checks) {
    if (std::find(all_checks().begin(), all_checks().end(), c) == all_checks().end()) {
      err << "error: unknown check '" << c << "'\n";
      return kUsage;
    }
    want.insert(c);
  }
  const auto text = detail::read_file(a.in_path);
  if (!text) {
    err << "error: cannot read " << a.in_path << "\n";
    return kUsage;
  }
  const verifier::CheckOptions opt{a.exhaustive, effective_jobs(a.jobs)};
  detail::Reporter rep(out);
  try {
    const auto first = text->find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (*text)[first] == '{') {
      const io::GeometryFile file = io::parse_geometry(*text);
      const auto& fam = file.family;
      for (std::size_t c = 0; c < fam.classes.size(); ++c) {
        const detail::Target t{"class " + io::lambda_key(fam.field, fam.classes[c].lambda),
                               verifier::to_incidence(fam, c)};
        detail::run_structure_checks(want, t, opt, rep);
      }
      if (want.count("disjoint")) {
        verifier::Verdict v;
        const double dt = detail::timed([&] { v = verifier::check_disjoint_classes(fam, opt); });
        io::json extra = detail::verdict_extra(v, opt.exhaustive);
        if (v.witness) {
          extra["witness"]["lambdas"] = {io::lambda_key(fam.field, fam.classes[v.witness->classes[0]].lambda),
                                         io::lambda_key(fam.field, fam.classes[v.witness->classes[1]].lambda)};
          extra["witness"]["line"] =
              io::line_to_json(fam.field, fam.classes[v.witness->classes[1]].lines[v.witness->lines[1]]);
        }
        rep.emit("disjoint", "family", v.ok() ? "pass" : "fail", dt, extra);
      }
      if (want.count("union")) {
        verifier::Verdict v;
        const double dt = detail::timed([&] { v = verifier::check_union_pls(fam, opt); });
        rep.emit("union", "family", v.ok() ? "pass" : "fail", dt, detail::verdict_extra(v, opt.exhaustive));
      }
    } else {
      const detail::Target t{"structure", io::parse_plain(*text)};
      detail::run_structure_checks(want, t, opt, rep);
      for (const char* c : {"disjoint", "union"})
        if (want.count(c)) rep.emit(c, "structure", "skipped", 0.0, {{"reason", "plain input has no classes"}});
    }
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << (rep.failed() ? "verification FAILED\n" : "all checks passed\n");
  return rep.failed() ? kCheckFailed : kOk;
}

// ---------------------------------------------------------------------------
// bound, scan, exponent
// ---------------------------------------------------------------------------

inline int cmd_bound(std::uint64_t k, std::uint64_t r, const bounds::Constants& c, std::ostream& out,
                     std::ostream& err) {
  try {
    const auto rep = bounds::compare(k, r, c);
    out << io::bound_report_to_json(rep).dump() << "\n";
    err << "s_" << r << "(K_" << k + 1 << ") <= " << rep.bound_main << " = " << rep.q << "^3\n";
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

struct Range {
  std::uint64_t lo = 0, hi = 0;
};

/// "a..b" or "a".
inline std::optional<Range> parse_range(const std::string& s) {
  auto num = [](const std::string& t) -> std::optional<std::uint64_t> {
    if (t.empty() || t.size() > 9 || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
      return std::nullopt;
    return std::stoull(t);
  };
  const auto dots = s.find("..");
  const auto lo = num(s.substr(0, dots));
  const auto hi = dots == std::string::npos ? lo : num(s.substr(dots + 2));
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return Range{*lo, *hi};
}

inline int cmd_scan(const std::string& k_range, const std::string& r_range, const std::string& out_csv,
                    std::ostream& out, std::ostream& err) {
  const auto kr = parse_range(k_range), rr = parse_range(r_range);
  if (!kr || !rr) {
    err << "error: ranges must look like 2..10\n";
    return kUsage;
  }
  if (kr->lo < 2 || rr->lo < 3) {
    err << "error: scan requires k >= 2 and r >= 3\n";
    return kUsage;
  }
  if ((kr->hi - kr->lo + 1) * (rr->hi - rr->lo + 1) > 1'000'000) {
    err << "error: scan grid too large\n";
    return kUsage;
  }
  std::ostringstream csv;
  csv << io::kScanCsvHeader << "\n";
  std::size_t rows = 0;
  try {
    for (auto k = kr->lo; k <= kr->hi; ++k) {
      for (auto r = rr->lo; r <= rr->hi; ++r) {
        const auto rep = bounds::compare(k, r);
        if (!(double(rep.bound_main) <= rep.cap_main)) throw std::logic_error("bound_main exceeds its cap");
        csv << io::scan_csv_row(rep) << "\n";
        ++rows;
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (out_csv.empty() || out_csv == "-") {
    out << csv.str();
  } else {
    std::ofstream os(out_csv, std::ios::binary);
    if (!os || !(os << csv.str())) {
      err << "error: cannot write " << out_csv << "\n";
      return kUsage;
    }
  }
  err << rows << " rows\n";
  return kOk;
}

/// Alpha grid for `exponent --scan`: 1, 1.01, ..., 3.
inline std::vector<double> default_alpha_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 200; ++i) g.push_back(1.0 + 0.01 * i);
  return g;
}

inline int cmd_exponent(double alpha, std::optional<bounds::Orientation> orientation, bool scan, std::ostream& out,
                        std::ostream& err) {
  try {
    std::vector<bounds::Orientation> which;
    if (orientation) which.push_back(*orientation);
    else which = {bounds::Orientation::high_t, bounds::Orientation::high_s};
    for (auto o : which) out << io::exponent_report_to_json(bounds::exponent_analysis(alpha, o)).dump() << "\n";
    if (scan) {
      auto grid = default_alpha_grid();
      grid.push_back(alpha);
      const auto [a, d] = bounds::min_total_degree(grid);
      out << io::json{{"grid_size", grid.size()}, {"min_alpha", a}, {"min_total_degree", d}}.dump() << "\n";
    }
    return kOk;
  } catch (const AlphaOutOfRange& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

// ---------------------------------------------------------------------------
// Argument parsing
// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qpack: moment-curve packings of triangle-free partial linear spaces"};
  app.require_subcommand(1);

  ConstructArgs ca;
  std::uint32_t count = 0;
  auto* construct = app.add_subcommand("construct", "Build the line classes over GF(q) and write geometry JSON");
  construct->add_option("--q", ca.q, "Field order (prime power >= 3)")->required();
  auto* count_opt = construct->add_option("--count", count, "Number of classes (default q-1)");
  construct->add_option("--out", ca.out_path, "Output file (default stdout)");
  construct->add_option("--jobs", ca.jobs, "Worker threads (0 = all cores)");

  VerifyArgs va;
  std::string checks;
  auto* verify = app.add_subcommand("verify", "Run structural checks on a geometry JSON or plain incidence file");
  verify->add_option("input", va.in_path, "Input file")->required();
  verify->add_option("--checks", checks, "Comma-separated subset of pls,order,triangle,disjoint,union,gq,counting");
  verify->add_flag("--exhaustive", va.exhaustive, "Count every violation instead of stopping at the first");
  verify->add_option("--jobs", va.jobs, "Worker threads (0 = all cores)");

  std::uint64_t k = 0, r = 0;
  bounds::Constants consts;
  auto* bound = app.add_subcommand("bound", "Report all upper bounds on s_r(K_{k+1})");
  bound->add_option("--k", k, "Clique parameter (bounds target K_{k+1})")->required();
  bound->add_option("--r", r, "Number of colours")->required();
  bound->add_option("--hrs-constant", consts.hrs, "Constant C of the (r ln r)^3 (k ln k)^2 bound");
  bound->add_option("--bbl-constant", consts.bbl, "Constant C of the k^5 r^(5/2) bound");
  bound->add_option("--ck", consts.c_k, "Constant c_k of the lower reference range");
  bound->add_option("--Ck", consts.C_k, "Constant C_k of the upper reference range");

  std::string k_range, r_range, csv_out;
  auto* scan = app.add_subcommand("scan", "Bound table over a (k, r) grid as CSV");
  scan->add_option("--k", k_range, "k range, e.g. 2..10")->required();
  scan->add_option("--r", r_range, "r range, e.g. 3..10")->required();
  scan->add_option("--out", csv_out, "Output CSV (default stdout)");

  double alpha = 1;
  std::string orient;
  bool alpha_scan = false;
  auto* exponent = app.add_subcommand("exponent", "Exponents forced by order (q, q^alpha) or (q^alpha, q)");
  exponent->add_option("--alpha", alpha, "alpha >= 1")->required();
  exponent->add_option("--orientation", orient, "high-t: (q, q^alpha); high-s: (q^alpha, q)")
      ->check(CLI::IsMember({"high-t", "high-s"}));
  exponent->add_flag("--scan", alpha_scan, "Also report the minimum total degree over an alpha grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (*construct) {
    if (*count_opt) ca.count = count;
    return cmd_construct(ca, out, err);
  }
  if (*verify) {
    std::stringstream ss(checks);
    for (std::string c; std::getline(ss, c, ',');)
      if (!c.empty()) va.checks.push_back(c);
    return cmd_verify(va, out, err);
  }
  if (*bound) return cmd_bound(k, r, consts, out, err);
  if (*scan) return cmd_scan(k_range, r_range, csv_out, out, err);
  std::optional<bounds::Orientation> o;
  if (orient == "high-t") o = bounds::Orientation::high_t;
  if (orient == "high-s") o = bounds::Orientation::high_s;
  return cmd_exponent(alpha, o, alpha_scan, out, err);
}

}  // namespace qpack::cli
