#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "trihull/errors.hpp"
#include "trihull/problem_io.hpp"
#include "trihull/report.hpp"

namespace trihull::cli {
namespace {

struct Flags {
  std::string input;
  std::string output;
  double epsilon = 1e-3;
  std::size_t max_iters = 0;
  std::uint64_t seed = 0;
  PivotMode pivot_mode = PivotMode::cached;
  StartMode start = StartMode::rank_one_e;
  bool strict = false;
  std::size_t verify = 0;
};

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::feasible: return feasible;
    case Verdict::witness: return witness;
    default: return inconclusive;
  }
}

int exit_for(PairVerdict v) {
  switch (v) {
    case PairVerdict::intersecting: return feasible;
    case PairVerdict::separated: return witness;
    default: return inconclusive;
  }
}

ShmOptions shm_options(const Flags& f) {
  ShmOptions o;
  o.epsilon = f.epsilon;
  o.max_iters = f.max_iters;
  o.mode = f.pivot_mode;
  o.start = f.start;
  o.strict = f.strict;
  o.seed = f.seed;
  return o;
}

std::string verify_lines(const VerifyReport& v) {
  ReportWriter w;
  w.field("verify", std::string_view(v.passed ? "passed" : "failed"))
      .field("verify_samples", v.samples_checked)
      .field("verify_violations", v.violation_count);
  for (const auto& msg : v.violations) w.field("verify_violation", std::string_view(msg));
  return w.str();
}

struct Outcome {
  std::string report;
  int code = inconclusive;
};

Outcome run_shm(const ShmInstance& inst, const Flags& f) {
  const Certificate cert = solve_shm(inst, shm_options(f));
  Outcome o{format_certificate(cert), exit_for(cert.kind)};
  if (f.verify) {
    const auto v = verify_certificate(inst, cert, f.verify, f.seed);
    o.report += verify_lines(v);
    if (!v.passed) o.code = verify_failed;
  }
  return o;
}

Outcome run_sdp(const SdpFeasibilityInstance& sdp, const Flags& f) {
  const ShmInstance inst = reduce_sdp_to_shm(sdp);
  const Certificate cert = solve_shm(inst, shm_options(f));
  PrimalRecovery rec;
  if (cert.kind == Verdict::feasible) {
    rec = recover_sdp_solution(sdp, cert.point);
  } else {
    rec.diagnostic = "no primal: solver did not report feasible";
  }
  Outcome o{format_sdp_result(cert, rec), exit_for(cert.kind)};
  if (f.verify) {
    const auto v = verify_certificate(inst, cert, f.verify, f.seed);
    o.report += verify_lines(v);
    if (!v.passed) o.code = verify_failed;
  }
  return o;
}

Outcome run_chm(const ChmProblem& p, const Flags& f) {
  ChmOptions opts;
  opts.epsilon = f.epsilon;
  opts.max_iters = f.max_iters;
  opts.strict = f.strict;
  const ChmResult res = solve_chm(p.set, p.p0, opts);
  Outcome o{format_chm_result(res, f.epsilon), exit_for(res.verdict)};
  if (f.verify && res.verdict == Verdict::witness && res.hyperplane) {
    // The set is finite, so the hyperplane can be checked against every point.
    VerifyReport v;
    if (res.hyperplane->evaluate(p.p0) >= 0) {
      v.passed = false;
      ++v.violation_count;
      v.violations.push_back("target not on the negative side");
    }
    for (std::size_t i = 0; i < p.set.points.size(); ++i) {
      ++v.samples_checked;
      if (res.hyperplane->evaluate(p.set.points[i]) <= 0) {
        v.passed = false;
        if (++v.violation_count <= 20) v.violations.push_back("point " + std::to_string(i + 1) + " not separated");
      }
    }
    o.report += verify_lines(v);
    if (!v.passed) o.code = verify_failed;
  }
  return o;
}

Outcome run_maxcut(const MaxCutInstance& mc, const Flags& f) {
  const MaxCutResult res = solve_maxcut_relaxation(mc, f.epsilon, f.max_iters, f.seed);
  return {format_maxcut_result(res, f.epsilon), res.complete ? feasible : inconclusive};
}

Outcome run_svm(const SvmProblem& p, const Flags& f) {
  SeparationOptions opts;
  opts.epsilon = f.epsilon;
  opts.max_iters = f.max_iters;
  opts.seed = f.seed;
  const PairCertificate cert = solve_separation(p.left, p.right, opts);
  Outcome o{format_pair_certificate(cert), exit_for(cert.kind)};
  if (f.verify && cert.kind == PairVerdict::separated && cert.hyperplane) {
    // Random rank-one images from each side must fall on their own side.
    VerifyReport v;
    std::mt19937_64 rng(f.seed);
    std::normal_distribution<double> g;
    auto sample = [&](const ShmInstance& inst) {
      Vector u(inst.n());
      do {
        for (auto& x : u) x = g(rng);
      } while (norm(u) == 0.0);
      return rank_one_image(inst, normalized(u));
    };
    for (std::size_t k = 0; k < f.verify; ++k) {
      const double l = cert.hyperplane->evaluate(sample(p.left));
      const double r = cert.hyperplane->evaluate(sample(p.right));
      v.samples_checked += 2;
      for (bool bad : {!(l < 0), !(r > 0)}) {
        if (!bad) continue;
        v.passed = false;
        if (++v.violation_count <= 20) v.violations.push_back("sample " + std::to_string(k) + " on the wrong side");
      }
    }
    o.report += verify_lines(v);
    if (!v.passed) o.code = verify_failed;
  }
  return o;
}

Outcome dispatch(const ProblemFile& file, const Flags& f) {
  switch (file.kind) {
    case ProblemKind::shm: return run_shm(std::get<ShmInstance>(file.payload), f);
    case ProblemKind::sdp: return run_sdp(std::get<SdpFeasibilityInstance>(file.payload), f);
    case ProblemKind::chm: return run_chm(std::get<ChmProblem>(file.payload), f);
    case ProblemKind::maxcut: return run_maxcut(std::get<MaxCutInstance>(file.payload), f);
    case ProblemKind::svm: return run_svm(std::get<SvmProblem>(file.payload), f);
  }
  return {};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triangle Algorithm for spectrahull membership", "trihull"};
  app.require_subcommand(1);
  Flags f;

  const std::map<std::string, PivotMode> pivot_modes{
      {"cached", PivotMode::cached}, {"power", PivotMode::power}, {"exact", PivotMode::exact}};
  const std::map<std::string, StartMode> starts{{"rankone-e", StartMode::rank_one_e}, {"identity", StartMode::identity}};

  // subcommand name -> kind it accepts; "solve" takes any kind
  const std::vector<std::pair<std::string, std::string>> commands{
      {"solve", "solve whatever kind the input file declares"},
      {"chm", "convex hull membership of a point in a finite set"},
      {"sdp", "bounded SDP feasibility via the homogeneous reduction"},
      {"maxcut", "MAX CUT SDP relaxation value by bisection"},
      {"separate", "intersection or separation of two spectrahulls"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--input", f.input, "problem file")->required()->check(CLI::ExistingFile);
    sub->add_option("--output", f.output, "report path (default stdout)");
    sub->add_option("--epsilon", f.epsilon, "relative gap tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-iters", f.max_iters, "iteration cap (default 64/eps^2)");
    sub->add_option("--seed", f.seed, "random seed");
    sub->add_option("--pivot-mode", f.pivot_mode, "cached | power | exact")
        ->transform(CLI::CheckedTransformer(pivot_modes));
    sub->add_option("--start", f.start, "rankone-e | identity")->transform(CLI::CheckedTransformer(starts));
    sub->add_flag("--strict", f.strict, "use the strict pivot threshold");
    sub->add_option("--verify", f.verify, "check the certificate with this many random samples");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return feasible;
  } catch (const CLI::ParseError& e) {
    err << "trihull: " << e.what() << "\n";
    return usage;
  }

  if (!(f.epsilon < 1.0)) {
    err << "trihull: --epsilon must lie in (0, 1)\n";
    return usage;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  std::ifstream in(f.input);
  std::stringstream text;
  text << in.rdbuf();

  std::optional<ProblemFile> parsed;
  try {
    parsed = parse_problem(text.str());
  } catch (const ParseError& e) {
    err << f.input << ": " << e.what() << "\n";
    return parse_error;
  } catch (const std::exception& e) {
    err << f.input << ": " << e.what() << "\n";
    return parse_error;
  }

  const ProblemFile& file = *parsed;
  static const std::map<std::string, ProblemKind> expected{{"chm", ProblemKind::chm},
                                                           {"sdp", ProblemKind::sdp},
                                                           {"maxcut", ProblemKind::maxcut},
                                                           {"separate", ProblemKind::svm}};
  if (auto it = expected.find(command); it != expected.end() && it->second != file.kind) {
    err << "trihull: '" << command << "' needs a " << to_string(it->second) << " file, got "
        << to_string(file.kind) << "\n";
    return usage;
  }

  Outcome o;
  try {
    o = dispatch(file, f);
  } catch (const std::exception& e) {
    err << "trihull: " << e.what() << "\n";
    return inconclusive;
  }

  if (f.output.empty()) {
    out << o.report;
  } else {
    std::ofstream file_out(f.output);
    if (!file_out) {
      err << "trihull: cannot write " << f.output << "\n";
      return usage;
    }
    file_out << o.report;
  }
  return o.code;
}

}  // namespace trihull::cli
