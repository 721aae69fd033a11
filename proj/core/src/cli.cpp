#include "strew/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "strew/decide.hpp"
#include "strew/format.hpp"
#include "strew/oracle.hpp"
#include "strew/report.hpp"
#include "strew/rewrite.hpp"
#include "strew/version.hpp"

namespace strew {

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitOracleMismatch = 4;

struct LoadedSystem {
  RewriteSystem system;
  std::string path;
  std::string digest;
  bool assumed_by_flag = false;
  bool assumed_by_file = false;
};

LoadedSystem load_system(const std::string& path, bool assume_terminating) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  SystemFile file = parse_system_file(text);
  LoadedSystem loaded{file.system, path, fnv1a_digest(text)};
  loaded.assumed_by_file = file.system.assumes(kAssumeTerminating);
  if (assume_terminating && !loaded.assumed_by_file) {
    loaded.system = loaded.system.with_assumption(kAssumeTerminating);
    loaded.assumed_by_flag = true;
  }
  return loaded;
}

ReportEnvelope::AssumptionNote termination_note(const LoadedSystem& loaded,
                                                Provenance provenance) {
  ReportEnvelope::AssumptionNote note{kAssumeTerminating, "absent", "none"};
  if (provenance == Provenance::Verified) {
    note.state = "certified";
    note.source = "shortlex-check";
  } else if (provenance == Provenance::Assumed) {
    note.state = "assumed";
    note.source = loaded.assumed_by_flag ? "flag" : "file";
  }
  return note;
}

// Everything the decision procedures need: a right-reduced system plus
// convergence and forward-closure evidence. The decidable parts are
// verified here; only termination can rest on an assumption.
struct DecisionContext {
  RewriteSystem reduced;
  Evidence evidence;
  std::vector<ReportEnvelope::AssumptionNote> notes;
};

DecisionContext make_decision_context(const LoadedSystem& loaded) {
  Evidence evidence = Evidence::from_system(loaded.system);
  if (!evidence.has_termination())
    throw PreconditionError("termination is neither certified nor assumed");

  DecisionContext context{right_reduce(loaded.system, evidence), evidence, {}};
  context.notes.push_back(termination_note(loaded, evidence.termination));

  ConfluenceReport confluence = check_confluence(context.reduced, evidence);
  if (!confluence.confluent) {
    const auto& failure = confluence.non_joinable.front();
    throw PreconditionError("system is not confluent: critical pair normalizes to '" +
                            failure.nf_left + "' and '" + failure.nf_right + "'");
  }
  context.evidence.confluence = Provenance::Verified;
  context.notes.push_back({kAssumeConfluent, "verified", "critical-pairs"});

  ForwardClosureReport fc = check_forward_closed(context.reduced, context.evidence);
  if (!fc.holds) {
    throw PreconditionError(
        "system is not forward-closed: innermost redex with s-part '" +
        fc.counterexample->first + "' and rule " +
        std::to_string(fc.counterexample->second) + " has no one-step normal form");
  }
  context.evidence.forward_closure = Provenance::Verified;
  context.notes.push_back({kAssumeForwardClosed, "verified", "state-quantification"});
  return context;
}

std::string render_witness(const CollapseVerdict& verdict) {
  if (!verdict.witness)
    return "";
  const auto& w = *verdict.witness;
  return "witness: rhs '" + w.rhs + "' of rule " + std::to_string(w.rule_index) +
         " extended by '" + w.y + "'";
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

struct CommandOptions {
  std::string file;
  bool json = false;
  bool assume_terminating = false;
  bool trace = false;
  bool term = false;
  std::size_t oracle = 0;  // 0 = off
  std::string u, v, w;
  Word word;
};

const char* lm_summary(const LmReport& report) {
  if (report.inconclusive)
    return "inconclusive (termination neither certified nor assumed)";
  if (!report.is_lm)
    return "no";
  return report.conditional ? "yes (conditional on assumed termination)" : "yes";
}

void print_lm_stages(std::ostream& out, const LmReport& report) {
  out << "  termination: "
      << (report.termination.certified() ? "certified (short-lex)"
                                         : "not certified by short-lex")
      << "\n";
  if (report.confluence)
    out << "  confluent: " << (report.confluence->confluent ? "yes" : "no") << "\n";
  if (report.forward_closure) {
    out << "  forward-closed: " << (report.forward_closure->holds ? "yes" : "no");
    if (report.forward_closure->counterexample)
      out << " (s-part '" << report.forward_closure->counterexample->first << "', rule "
          << report.forward_closure->counterexample->second << ")";
    out << "\n";
  }
  if (report.collapse) {
    out << "  subterm-collapsing: " << (report.collapse->collapsing ? "yes" : "no");
    if (report.collapse->witness)
      out << " (" << render_witness(*report.collapse) << ")";
    out << "\n";
  }
  out << "  quasi-deterministic: " << (report.quasi_det.holds ? "yes" : "no") << "\n";
  out << "  rhs pairs quasi-deterministic: " << (report.rhs_quasi_det.holds ? "yes" : "no")
      << " (" << report.rhs_quasi_det.pairs.size() << " pair(s))\n";
  out << "  lhs-lhs overlaps: " << report.overlaps.lhs_lhs.size()
      << ", lhs-rhs overlaps: " << report.overlaps.lhs_rhs.size() << "\n";
  if (!report.duplicate_lhs_pairs.empty())
    out << "  duplicate left-hand sides: " << report.duplicate_lhs_pairs.size()
        << " pair(s)\n";
}

int cmd_normalize(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  auto start = std::chrono::steady_clock::now();
  LoadedSystem loaded = load_system(options.file, options.assume_terminating);
  Evidence evidence = Evidence::from_system(loaded.system);
  if (!evidence.has_termination()) {
    err << "inconclusive: termination is neither certified nor assumed "
        << "(pass --assume-terminating or add 'assume: terminating')\n";
    return kExitInconclusive;
  }
  loaded.system.alphabet().require_word(options.word, "normalize");
  if (options.trace) {
    Word current = options.word;
    out << current << "\n";
    while (auto next = ll_step(loaded.system, current)) {
      current = *next;
      out << current << "\n";
    }
  }
  Word nf = normalize(loaded.system, options.word, evidence);
  std::string term = options.term ? to_monadic_term(nf) : "";
  if (options.json) {
    ReportEnvelope envelope{"normalize", loaded.path, loaded.digest,
                            {termination_note(loaded, evidence.termination)},
                            elapsed_ms(start)};
    out << render_report(envelope, payload_normalize(options.word, nf,
                                                     nf == options.word, term))
        << "\n";
  } else {
    out << nf << "\n";
    if (options.term)
      out << term << "\n";
  }
  return kExitHolds;
}

int cmd_check_or_lm(const CommandOptions& options, std::ostream& out, std::ostream& err,
                    bool full_lm) {
  auto start = std::chrono::steady_clock::now();
  LoadedSystem loaded = load_system(options.file, options.assume_terminating);
  LmReport report = verify_lm_system(loaded.system);
  ReportEnvelope envelope{full_lm ? "lm" : "check", loaded.path, loaded.digest,
                          {termination_note(loaded, report.termination_provenance)},
                          0.0};
  envelope.timing_ms = elapsed_ms(start);
  if (options.json) {
    out << render_report(envelope, full_lm ? payload_lm(loaded.system, report)
                                           : payload_check(loaded.system, report))
        << "\n";
  } else {
    if (full_lm)
      out << "LM-system: " << lm_summary(report) << "\n";
    print_lm_stages(out, report);
  }
  (void)err;
  if (report.inconclusive)
    return kExitInconclusive;
  if (full_lm)
    return report.is_lm ? kExitHolds : kExitFails;
  bool convergent_fc = report.confluence && report.confluence->confluent &&
                       report.forward_closure && report.forward_closure->holds;
  return convergent_fc ? kExitHolds : kExitFails;
}

int cmd_collapse(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  auto start = std::chrono::steady_clock::now();
  LoadedSystem loaded = load_system(options.file, options.assume_terminating);
  Evidence base = Evidence::from_system(loaded.system);
  if (!base.has_termination()) {
    err << "inconclusive: termination is neither certified nor assumed\n";
    return kExitInconclusive;
  }
  DecisionContext context = make_decision_context(loaded);
  CollapseVerdict verdict = is_subterm_collapsing(context.reduced, context.evidence);

  if (options.oracle > 0) {
    SearchBudget budget{options.oracle, 1000000};
    auto oracle = brute_force_collapse(context.reduced, budget);
    bool mismatch = false;
    if (oracle.found() && !verdict.collapsing)
      mismatch = true;
    if (verdict.collapsing && oracle.status == SearchStatus::NoneWithinBound &&
        verdict.witness->rhs.size() <= options.oracle &&
        verdict.witness->y.size() <= options.oracle)
      mismatch = true;
    if (mismatch) {
      err << "oracle mismatch: decision says " << (verdict.collapsing ? "collapsing" : "non-collapsing");
      if (verdict.witness)
        err << " (" << render_witness(verdict) << ")";
      err << "; oracle at bound " << options.oracle << " says ";
      if (oracle.found())
        err << "collapsing (x='" << oracle.value->first << "', y='" << oracle.value->second
            << "')";
      else
        err << "non-collapsing";
      err << "\nsystem under test:\n" << serialize_system(context.reduced);
      return kExitOracleMismatch;
    }
  }

  if (options.json) {
    ReportEnvelope envelope{"collapse", loaded.path, loaded.digest, context.notes,
                            elapsed_ms(start)};
    out << render_report(envelope, payload_collapse(verdict)) << "\n";
  } else {
    out << "subterm-collapsing: " << (verdict.collapsing ? "yes" : "no") << "\n";
    if (verdict.witness)
      out << render_witness(verdict) << "\n";
  }
  return verdict.collapsing ? kExitFails : kExitHolds;
}

int cmd_cap(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  auto start = std::chrono::steady_clock::now();
  LoadedSystem loaded = load_system(options.file, options.assume_terminating);
  Evidence base = Evidence::from_system(loaded.system);
  if (!base.has_termination()) {
    err << "inconclusive: termination is neither certified nor assumed\n";
    return kExitInconclusive;
  }
  DecisionContext context = make_decision_context(loaded);
  CapResult result = solve_cap(context.reduced, options.u, options.v, context.evidence);

  if (options.oracle > 0) {
    SearchBudget budget{options.oracle, 1000000};
    auto oracle = brute_force_cap(context.reduced, options.u, options.v, budget);
    bool mismatch = false;
    if (oracle.found() &&
        (!result.derivable || result.cap_term->size() != oracle.value->size()))
      mismatch = true;
    if (oracle.status == SearchStatus::NoneWithinBound && result.derivable &&
        result.cap_term->size() <= options.oracle)
      mismatch = true;
    if (mismatch) {
      err << "oracle mismatch: decision says "
          << (result.derivable ? "derivable via '" + *result.cap_term + "'" : "not derivable")
          << "; oracle at bound " << options.oracle << " says "
          << (oracle.found() ? "derivable via '" + *oracle.value + "'" : "not derivable")
          << "\nsystem under test:\n"
          << serialize_system(context.reduced);
      return kExitOracleMismatch;
    }
  }

  if (options.trace && result.derivable) {
    CollapsePda pda = build_collapse_pda(context.reduced, options.u, options.v,
                                         context.evidence);
    RunTrace trace = run_pda(pda, *result.cap_term + CollapsePda::kEndMarker);
    for (const auto& step : trace.steps)
      out << "read '" << step.input << "'  stack " << step.stack << "\n";
  }

  if (options.json) {
    ReportEnvelope envelope{"cap", loaded.path, loaded.digest, context.notes,
                            elapsed_ms(start)};
    out << render_report(envelope, payload_cap(options.u, options.v, result)) << "\n";
  } else {
    if (result.derivable)
      out << "cap term: " << *result.cap_term << "\n";
    else
      out << "not derivable\n";
  }
  return result.derivable ? kExitHolds : kExitFails;
}

int cmd_explain(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  auto start = std::chrono::steady_clock::now();
  LoadedSystem loaded = load_system(options.file, options.assume_terminating);
  Evidence base = Evidence::from_system(loaded.system);
  if (!base.has_termination()) {
    err << "inconclusive: termination is neither certified nor assumed\n";
    return kExitInconclusive;
  }
  DecisionContext context = make_decision_context(loaded);
  CollapsePda pda = build_collapse_pda(context.reduced, options.u, options.v,
                                       context.evidence);
  RunTrace trace = run_pda(pda, options.w + CollapsePda::kEndMarker);
  if (options.json) {
    ReportEnvelope envelope{"explain", loaded.path, loaded.digest, context.notes,
                            elapsed_ms(start)};
    out << render_report(envelope, payload_explain(options.u, options.v, options.w, trace))
        << "\n";
  } else {
    out << "initial stack " << CollapsePda::render_stack(pda.initial_stack()) << "\n";
    for (const auto& step : trace.steps)
      out << "read '" << step.input << "'  stack " << step.stack << "\n";
    out << (trace.accepted ? "accepted" : "rejected") << "\n";
  }
  return trace.accepted ? kExitHolds : kExitFails;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analyze string rewriting systems: normal forms, convergence and "
               "forward-closure diagnostics, Lynch-Morawska conditions, subterm-collapse "
               "and cap decisions."};
  app.name(kToolName);
  app.require_subcommand(1);

  CommandOptions options;
  auto add_common = [&](CLI::App* cmd, bool with_oracle, bool with_trace) {
    cmd->add_option("file", options.file, ".srs system file")->required();
    cmd->add_flag("--json", options.json, "emit a JSON report");
    cmd->add_flag("--assume-terminating", options.assume_terminating,
                  "treat the system as terminating without a certificate");
    if (with_oracle)
      cmd->add_option("--oracle", options.oracle,
                      "cross-check the decision against brute force up to this bound");
    if (with_trace)
      cmd->add_flag("--trace", options.trace, "print intermediate steps");
  };

  CLI::App* check = app.add_subcommand("check", "run all analysis checks");
  add_common(check, false, false);

  CLI::App* normalize_cmd = app.add_subcommand("normalize", "compute the normal form of a word");
  add_common(normalize_cmd, false, true);
  normalize_cmd->add_option("word", options.word, "word to normalize")->required();
  normalize_cmd->add_flag("--term", options.term, "also print the monadic term rendering");

  CLI::App* collapse = app.add_subcommand("collapse", "decide subterm collapse");
  add_common(collapse, true, false);

  CLI::App* cap = app.add_subcommand("cap", "decide the cap problem for u, v");
  add_common(cap, true, true);
  cap->add_option("-u", options.u, "intruder knowledge (irreducible)")->required();
  cap->add_option("-v", options.v, "secret (irreducible)")->required();

  CLI::App* lm = app.add_subcommand("lm", "verify the Lynch-Morawska conditions");
  add_common(lm, false, false);

  CLI::App* explain = app.add_subcommand("explain", "trace the collapse machine on w");
  add_common(explain, false, false);
  explain->add_option("-u", options.u, "initial stack word (irreducible)")->required();
  explain->add_option("-v", options.v, "target word (irreducible)")->required();
  explain->add_option("-w", options.w, "input word to trace")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitError;
  }

  try {
    if (check->parsed())
      return cmd_check_or_lm(options, out, err, false);
    if (normalize_cmd->parsed())
      return cmd_normalize(options, out, err);
    if (collapse->parsed())
      return cmd_collapse(options, out, err);
    if (cap->parsed())
      return cmd_cap(options, out, err);
    if (lm->parsed())
      return cmd_check_or_lm(options, out, err, true);
    if (explain->parsed())
      return cmd_explain(options, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitError;
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << "\n";
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  err << "no command\n";
  return kExitError;
}

} // namespace strew
