#pragma once

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pellcf/pellcf.hpp"

namespace pellcf::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kPerfectSquare = 2,
  kOutOfDomain = 3,
  kUnsolvable = 4,
  kCheckFailed = 5,
};

inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::perfect_square: return kPerfectSquare;
    case Errc::not_solvable: return kUnsolvable;
    case Errc::out_of_domain:
    case Errc::bad_unit:
    case Errc::invalid_params: return kOutOfDomain;
  }
  return kUsage;
}

enum class Format { text, json };

/// Integers up to 2^53 survive any JSON reader; larger ones go out as strings.
inline Json small_or_string(const BigInt& n) {
  static const BigInt kSafe = BigInt(1) << 53;
  if (abs(n) < kSafe) return n.convert_to<std::int64_t>();
  return to_decimal(n);
}

inline Json to_json(const PellSolution& s) { return Json{{"x", to_decimal(s.x)}, {"y", to_decimal(s.y)}}; }

inline std::string equation(const BigInt& d, Rhs rhs) {
  return "x^2 - " + to_decimal(d) + "y^2 = " + std::to_string(value(rhs));
}

/// Names the published result an answer rests on.
inline std::string basis_label(Basis basis) {
  switch (basis) {
    case Basis::general: return "general solver";
    case Basis::family_unit: return "Theorem 6/7";
    case Basis::family_neg_one: return "Theorem 8";
    case Basis::family_four: return "Theorem 9/10";
    case Basis::family_neg_four: return "Theorem 11";
    case Basis::family_neg_four_excluded: return "outside Theorem 11";
  }
  return "unknown";
}

inline std::string format_cf(const CFExpansion& cf) {
  std::string out = "[" + to_decimal(cf.a0) + "; (";
  for (std::size_t i = 0; i < cf.period.size(); ++i) {
    if (i != 0) out += ",";
    out += to_decimal(cf.period[i]);
  }
  return out + ")] period=" + std::to_string(cf.m());
}

inline Json cf_payload(const CFExpansion& cf) {
  Json period = Json::array();
  for (const auto& t : cf.period) period.push_back(small_or_string(t));
  return Json{{"a0", small_or_string(cf.a0)}, {"period", std::move(period)}, {"m", cf.m()}};
}

inline Json solve_payload(const SolveResult& r) {
  Json solutions = Json::array();
  for (const auto& s : r.solutions) solutions.push_back(to_json(s));
  Json out;
  out["equation"] = equation(r.d, r.rhs);
  out["status"] = r.verdict.is_solvable() ? "solvable" : "unsolvable";
  out["reason"] = r.verdict.reason ? Json(std::string(to_string(*r.verdict.reason))) : Json(nullptr);
  out["basis"] = basis_label(r.basis);
  out["family_a"] = r.family_a ? Json(to_decimal(*r.family_a)) : Json(nullptr);
  out["fundamental"] = r.verdict.fundamental ? to_json(*r.verdict.fundamental) : Json(nullptr);
  out["solutions"] = std::move(solutions);
  return out;
}

inline std::string solve_text(const SolveResult& r) {
  std::ostringstream os;
  os << equation(r.d, r.rhs) << ": ";
  if (r.verdict.is_solvable()) {
    os << "solvable [" << basis_label(r.basis) << "]\n";
    os << "fundamental: " << r.verdict.fundamental->str() << "\n";
    os << "solutions: ";
    for (std::size_t i = 0; i < r.solutions.size(); ++i) os << (i ? "," : "") << r.solutions[i].str();
    os << "\n";
  } else {
    os << "unsolvable, reason: ";
    if (r.basis != Basis::general) os << basis_label(r.basis) << " (" << to_string(*r.verdict.reason) << ")";
    else os << to_string(*r.verdict.reason);
    os << "\n";
  }
  return os.str();
}

inline Json sweep_payload(const SweepReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    checks.push_back(Json{{"id", c.id},
                          {"label", c.label},
                          {"passed", c.passed},
                          {"failed", c.failed},
                          {"failures", c.failures}});
  }
  return Json{{"checks", std::move(checks)}, {"notes", rep.notes}, {"passed", rep.all_passed()}};
}

inline std::string sweep_text(const SweepReport& rep) {
  std::ostringstream os;
  for (const auto& c : rep.checks) {
    os << (c.ok() ? "PASS " : "FAIL ") << c.label << " [" << c.id << "]: " << c.passed << " passed, " << c.failed
       << " failed\n";
    for (const auto& f : c.failures) os << "  failed at " << f << "\n";
  }
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  os << (rep.all_passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
  return os.str();
}

inline std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoull(text);
      return {v, v};
    }
    return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(Errc::out_of_domain, "expected a range like 1..50, got '" + text + "'");
  }
}

/// Runs one CLI invocation. Results go to `out`, diagnostics to `err`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pell equations x^2 - d y^2 = N via continued fractions and Lucas sequences", "pellcf"};
  app.require_subcommand(1);

  Format format = Format::text;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats));
  };

  std::string d_text, n_text, a_text;
  std::size_t count = 1;
  bool general = false;

  auto* cf_cmd = app.add_subcommand("cf", "Continued fraction of sqrt(d)");
  cf_cmd->add_option("d", d_text, "Nonsquare integer >= 2")->required();
  add_format(cf_cmd);

  auto* solve_cmd = app.add_subcommand("solve", "Solve x^2 - d y^2 = N for N in {1,-1,4,-4}");
  solve_cmd->add_option("d", d_text, "Nonsquare integer >= 2")->required();
  solve_cmd->add_option("N", n_text, "Right-hand side")->required();
  solve_cmd->add_option("--count", count, "Number of solutions to list")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--general", general, "Bypass the a^2+2a closed forms");
  add_format(solve_cmd);

  auto* family_cmd = app.add_subcommand("family", "Closed forms for d = a^2 + 2a");
  family_cmd->add_option("a", a_text, "Positive integer")->required();
  family_cmd->add_option("N", n_text, "Right-hand side")->required();
  family_cmd->add_option("--count", count, "Number of solutions to list")->check(CLI::PositiveNumber);
  add_format(family_cmd);

  std::string a_range = "1..50";
  SweepOptions sweep;
  auto* verify_cmd = app.add_subcommand("verify-theorems", "Check every closed form over a range of a");
  verify_cmd->add_option("--a", a_range, "Range of a, e.g. 1..50");
  verify_cmd->add_option("--n", sweep.n_max, "Largest solution index")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--y-max", sweep.y_max, "Brute-force search bound on y")->check(CLI::PositiveNumber);
  add_format(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::string command = app.get_subcommands().front()->get_name();
  auto emit = [&](Json inputs, Json result) {
    out << Json{{"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)}}.dump() << "\n";
  };

  Json inputs;
  try {
    if (command == "cf") {
      const BigInt d = parse_bigint(d_text);
      inputs = Json{{"d", to_decimal(d)}};
      const CFExpansion cf = cf_expand_sqrt(d);
      if (format == Format::json) emit(inputs, cf_payload(cf));
      else out << format_cf(cf) << "\n";
      return kOk;
    }
    if (command == "solve" || command == "family") {
      const BigInt rhs_value = parse_bigint(n_text);
      BigInt d;
      if (command == "solve") {
        d = parse_bigint(d_text);
        inputs = Json{{"d", to_decimal(d)}, {"N", small_or_string(rhs_value)}, {"count", count},
                      {"route", general ? "general" : "auto"}};
      } else {
        const BigInt a = parse_bigint(a_text);
        inputs = Json{{"a", to_decimal(a)}, {"N", small_or_string(rhs_value)}, {"count", count}};
        d = FamilyParam(a).d();
      }
      const Rhs rhs = to_rhs(rhs_value);
      const SolveResult r = solve(d, rhs, count, general ? Route::general : Route::automatic);
      if (format == Format::json) emit(inputs, solve_payload(r));
      else out << solve_text(r);
      return r.verdict.is_solvable() ? kOk : kUnsolvable;
    }
    // verify-theorems
    std::tie(sweep.a_first, sweep.a_last) = parse_range(a_range);
    inputs = Json{{"a", a_range}, {"n", sweep.n_max}, {"y_max", sweep.y_max}};
    const SweepReport rep = run_theorem_sweep(sweep);
    if (format == Format::json) emit(inputs, sweep_payload(rep));
    else out << sweep_text(rep);
    return rep.all_passed() ? kOk : kCheckFailed;
  } catch (const Error& e) {
    if (format == Format::json) {
      out << Json{{"command", command},
                  {"inputs", inputs},
                  {"error", Json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}}
                 .dump()
          << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return exit_code_for(e.code());
  }
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace pellcf::cli
