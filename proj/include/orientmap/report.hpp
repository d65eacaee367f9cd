#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include "orientmap/verification.hpp"

namespace orientmap {

// Machine format, one record per line, space-separated key=value fields.
// Values never contain spaces except `detail`, which is always last and runs
// to the end of the line.
//
//   claim suite=<s> n=<n> claim=<id> status=pass|fail checks=<k> violations=<v> exceptions=<e> witness=<w>|-
//   violation suite=<s> n=<n> claim=<id> witness=<w> detail=<text>
//   exception suite=<s> n=<n> claim=<id> witness=<w> detail=<text>
//   suite suite=<s> n=<n> status=pass|fail checks=<k> violations=<v> exceptions=<e>
//
// Timing is deliberately absent so output is byte-stable across runs and
// thread counts.

namespace detail {

inline std::string first_witness(const SuiteReport& r, const std::string& claim) {
  for (const auto& f : r.violations)
    if (f.claim == claim) return f.subject;
  for (const auto& f : r.sanctioned_exceptions)
    if (f.claim == claim) return f.subject;
  return "-";
}

inline std::string header(const SuiteReport& r) { return "suite=" + r.suite + " n=" + std::to_string(r.n); }

}  // namespace detail

inline std::string format_machine(const SuiteReport& r) {
  std::ostringstream out;
  const std::string head = detail::header(r);
  for (const auto& [claim, t] : r.claims) {
    out << "claim " << head << " claim=" << claim << " status=" << (t.violations ? "fail" : "pass")
        << " checks=" << t.checks << " violations=" << t.violations << " exceptions=" << t.exceptions
        << " witness=" << detail::first_witness(r, claim) << '\n';
  }
  for (const auto& f : r.violations)
    out << "violation " << head << " claim=" << f.claim << " witness=" << f.subject << " detail=" << f.detail << '\n';
  for (const auto& f : r.sanctioned_exceptions)
    out << "exception " << head << " claim=" << f.claim << " witness=" << f.subject << " detail=" << f.detail << '\n';
  out << "suite " << head << " status=" << (r.passed() ? "pass" : "fail") << " checks=" << r.checks_run
      << " violations=" << r.violations.size() << " exceptions=" << r.sanctioned_exceptions.size() << '\n';
  return out.str();
}

/// Human-readable report. Lists at most `max_listed` findings of each kind.
inline std::string format_text(const SuiteReport& r, std::size_t max_listed = 10) {
  std::ostringstream out;
  const double ms = static_cast<double>(r.elapsed.count()) / 1e6;
  out << r.suite << " suite, n = " << r.n << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks_run
      << " checks, " << r.violations.size() << " violations, " << r.sanctioned_exceptions.size()
      << " sanctioned exceptions, " << std::fixed << std::setprecision(1) << ms << " ms)\n";
  for (const auto& [claim, t] : r.claims) {
    out << "  " << std::left << std::setw(26) << claim << std::right << std::setw(12) << t.checks << " checks";
    if (t.violations) out << "  " << t.violations << " VIOLATIONS";
    if (t.exceptions) out << "  " << t.exceptions << " sanctioned";
    out << '\n';
  }
  auto list = [&](const char* title, const std::vector<Finding>& fs) {
    if (fs.empty()) return;
    out << "  " << title << ":\n";
    for (std::size_t i = 0; i < fs.size() && i < max_listed; ++i)
      out << "    [" << fs[i].claim << "] " << fs[i].subject << "  " << fs[i].detail << '\n';
    if (fs.size() > max_listed) out << "    ... " << fs.size() - max_listed << " more\n";
  };
  list("violations", r.violations);
  list("sanctioned exceptions", r.sanctioned_exceptions);
  return out.str();
}

inline std::string format_counts(const ClassCounts& c) {
  std::ostringstream out;
  out << "n=" << c.n << " total=" << c.total << " op=" << c.op << " or=" << c.or_ << " p=" << c.p
      << " op_and_or=" << c.op_and_or << " low_rank_in_p=" << c.low_rank_in_p
      << " consistent=" << (c.consistent() ? "true" : "false");
  return out.str();
}

}  // namespace orientmap
