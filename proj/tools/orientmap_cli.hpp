#pragma once

// Command-line adapter over the orientmap library. Parsing and formatting
// only; every verdict comes from a library call.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orientmap/orientmap.hpp"

namespace orientmap::cli {

enum ExitCode : int { Ok = 0, Failed = 1, BadInput = 2 };

namespace detail {

inline std::string b(bool v) { return v ? "true" : "false"; }

inline std::string pair_text(const Chord& x, const Chord& y) { return x.to_string() + ":" + y.to_string(); }

inline void print_classify(const Mapping& alpha, std::ostream& out) {
  const ConsistencyReport r = cross_check(alpha);
  const MembershipReport& d = r.definitional;
  out << "map=" << alpha.to_string() << " n=" << alpha.n() << '\n'
      << "image_orientation=" << to_string(d.image_orientation) << '\n'
      << "image_size=" << d.image_size << '\n'
      << "in_op=" << b(d.in_op) << '\n'
      << "in_or=" << b(d.in_or) << '\n'
      << "in_p=" << b(d.in_p) << '\n'
      << "triple_op=" << b(r.triple_op) << '\n'
      << "triple_or=" << b(r.triple_or) << '\n'
      << "quad_p=" << b(r.quad_p) << '\n'
      << "chord_p=" << b(r.chord_p) << '\n';
  if (r.discrepancies.empty()) {
    out << "discrepancies=none\n";
  }
  for (const auto& x : r.discrepancies) {
    out << "discrepancy rule=" << x.rule << " sanctioned=" << b(x.sanctioned) << " detail=" << x.detail << '\n';
  }
  out << "consistent=" << b(r.consistent()) << '\n';
}

template <std::size_t N>
std::string points_text(const std::array<int, N>& p) {
  return text::join(p);
}

}  // namespace detail

struct VerifyFlags {
  int n_max = 5;
  std::string suites = "equivalence,identity,lemma";
  unsigned threads = 1;
  std::string format = "text";
  int max_len = 6;
  std::uint64_t sample_budget = 8192;
};

inline int run_verify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  bool equivalence = false, identity = false, lemma = false;
  for (const auto& name : text::split(f.suites, ',')) {
    if (name == "equivalence") equivalence = true;
    else if (name == "identity") identity = true;
    else if (name == "lemma") lemma = true;
    else {
      err << "unknown suite '" << name << "' (expected equivalence, identity, lemma)\n";
      return BadInput;
    }
  }
  if (f.format != "text" && f.format != "machine") {
    err << "unknown format '" << f.format << "' (expected text or machine)\n";
    return BadInput;
  }
  if (f.n_max < 1) {
    err << "--n-max must be at least 1\n";
    return BadInput;
  }
  const bool machine = f.format == "machine";
  bool all_pass = true;
  auto emit = [&](const SuiteReport& r) {
    all_pass = all_pass && r.passed();
    out << (machine ? format_machine(r) : format_text(r));
  };
  auto skip = [&](const char* suite, int n, const char* why) {
    if (machine) out << "skip suite=" << suite << " n=" << n << " reason=" << why << '\n';
    else out << suite << " suite, n = " << n << ": skipped (" << why << ")\n";
  };

  for (int n = 1; n <= f.n_max; ++n) {
    if (equivalence) emit(equivalence_suite(n, {f.threads}));
    if (identity) {
      if (n <= 5) emit(identity_suite(n));
      else skip("identity", n, "n>5");
    }
    if (lemma) {
      if (n <= 6) emit(lemma_suite(n, {f.max_len, f.sample_budget, f.threads}));
      else skip("lemma", n, "n>6");
    }
  }
  if (machine) out << "result status=" << (all_pass ? "pass" : "fail") << '\n';
  else out << (all_pass ? "all suites passed\n" : "VIOLATIONS FOUND\n");
  return all_pass ? Ok : Failed;
}

/// Entry point; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orientation-preserving and orientation-reversing maps of a finite cycle", "orientmap"};
  app.require_subcommand(1);

  std::string map_text;
  std::string mode_text = "preserve";

  auto* classify_cmd = app.add_subcommand("classify", "definitional membership plus all four tests");
  classify_cmd->add_option("--map", map_text, "image list, e.g. 0,1,3,2")->required();

  auto* witness_cmd = app.add_subcommand("witness", "cyclic triple certifying alpha is not in OP/OR");
  witness_cmd->add_option("--map", map_text, "image list")->required();
  witness_cmd->add_option("--mode", mode_text, "preserve (OP) or reverse (OR)")
      ->check(CLI::IsMember({"preserve", "reverse"}));

  auto* quad_cmd = app.add_subcommand("quadwitness", "cyclic quadruple certifying alpha is not in P");
  quad_cmd->add_option("--map", map_text, "image list")->required();

  int chord_n = 0;
  std::string pair_text;
  std::string method_text = "combinatorial";
  auto* chords_cmd = app.add_subcommand("chords", "chord intersection queries");
  chords_cmd->add_option("--n", chord_n, "cycle size (inferred from --map when given)");
  chords_cmd->add_option("--pair", pair_text, "chord pair a-c:b-d")->required();
  auto* chord_map_opt = chords_cmd->add_option("--map", map_text, "also test the image chords");
  chords_cmd->add_option("--method", method_text, "combinatorial, geometric or both")
      ->check(CLI::IsMember({"combinatorial", "geometric", "both"}));

  VerifyFlags vf;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive verification suites for n = 1..K");
  verify_cmd->add_option("--n-max", vf.n_max, "largest cycle size")->required();
  verify_cmd->add_option("--suites", vf.suites, "comma list of equivalence, identity, lemma");
  verify_cmd->add_option("--threads", vf.threads, "worker threads");
  verify_cmd->add_option("--format", vf.format, "text or machine");
  verify_cmd->add_option("--max-len", vf.max_len, "longest sequence in the lemma suite");
  verify_cmd->add_option("--sample-budget", vf.sample_budget, "lemma suite per-map sequence budget");

  int count_n = 0;
  auto* count_cmd = app.add_subcommand("count", "cardinalities of OP_n, OR_n, P_n");
  count_cmd->add_option("--n", count_n, "cycle size (at most 8)")->required();

  std::vector<const char*> argv{"orientmap"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : BadInput;
  }

  try {
    if (*classify_cmd) {
      detail::print_classify(Mapping::parse(map_text), out);
      return Ok;
    }

    if (*witness_cmd) {
      const Mapping alpha = Mapping::parse(map_text);
      const Mode mode = mode_text == "reverse" ? Mode::Reverse : Mode::Preserve;
      const TripleWitness w = witness_triple(alpha, mode);
      const auto image = orientmap::detail::image_of(alpha.images(), w.points);
      out << "mode=" << to_string(mode) << '\n'
          << "points=" << detail::points_text(w.points) << '\n'
          << "case=" << w.case_label() << '\n'
          << "source_orientation=" << to_string(kernel::orientation(w.points)) << '\n'
          << "image=" << detail::points_text(image) << '\n'
          << "image_orientation=" << to_string(kernel::orientation(image)) << '\n'
          << "valid=" << detail::b(validate(w, alpha)) << '\n';
      return Ok;
    }

    if (*quad_cmd) {
      const Mapping alpha = Mapping::parse(map_text);
      const QuadWitness w = witness_quad(alpha);
      const auto image = orientmap::detail::image_of(alpha.images(), w.points);
      out << "points=" << detail::points_text(w.points) << '\n'
          << "case=" << w.case_label() << '\n'
          << "source_orientation=" << to_string(kernel::orientation(w.points)) << '\n'
          << "image=" << detail::points_text(image) << '\n'
          << "image_orientation=" << to_string(kernel::orientation(image)) << '\n'
          << "valid=" << detail::b(validate(w, alpha)) << '\n';
      return Ok;
    }

    if (*chords_cmd) {
      std::optional<Mapping> alpha;
      if (chord_map_opt->count() > 0) alpha = Mapping::parse(map_text);
      int n = chord_n;
      if (alpha) {
        if (chord_n != 0 && chord_n != alpha->n()) {
          err << "--n " << chord_n << " does not match the mapping size " << alpha->n() << '\n';
          return BadInput;
        }
        n = alpha->n();
      }
      if (n <= 0) {
        err << "--n is required when --map is not given\n";
        return BadInput;
      }
      const auto [first, second] = parse_chord_pair(pair_text, n);
      bool agree = true;
      auto verdicts = [&](const char* label, const Chord& x, const Chord& y) {
        out << label << " pair=" << detail::pair_text(x, y);
        if (method_text == "combinatorial" || method_text == "both")
          out << " combinatorial=" << detail::b(chords_intersect(n, x, y, IntersectionMethod::Combinatorial));
        if (method_text == "geometric" || method_text == "both")
          out << " geometric=" << detail::b(chords_intersect(n, x, y, IntersectionMethod::Geometric));
        if (method_text == "both") {
          const bool same = chords_intersect(n, x, y, IntersectionMethod::Combinatorial) ==
                            chords_intersect(n, x, y, IntersectionMethod::Geometric);
          agree = agree && same;
          out << " agreement=" << (same ? "match" : "MISMATCH");
        }
        out << '\n';
      };
      verdicts("source", first, second);
      if (alpha) verdicts("image", first.image(*alpha), second.image(*alpha));
      return agree ? Ok : Failed;
    }

    if (*verify_cmd) return run_verify(vf, out, err);

    if (*count_cmd) {
      if (count_n < 1 || count_n > 8) {
        err << "count supports 1 <= n <= 8\n";
        return BadInput;
      }
      const ClassCounts c = count_classes(count_n, {std::max(1U, std::thread::hardware_concurrency())});
      out << format_counts(c) << '\n';
      return c.consistent() ? Ok : Failed;
    }
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return BadInput;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return BadInput;
  } catch (const WitnessInvariantError& e) {
    err << "witness invariant failed: " << e.what() << '\n';
    return Failed;
  }
  return BadInput;
}

}  // namespace orientmap::cli
