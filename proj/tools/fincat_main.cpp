// Command-line front end: corpus builders, classification tables, condition
// checks, localization construction and the theorem verifiers, with optional
// machine-readable reports.
//
// Exit status: 0 when everything passes or is inapplicable, 1 when some
// verification fails, 2 on input errors.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fincat/dsl.hpp"
#include "fincat/verify.hpp"

namespace {

using namespace fincat;

struct CommonOptions {
  std::string corpus;
  std::string input_path;
  std::string json_path;
  std::optional<Obj> core;
  std::optional<Obj> ambient;
  std::uint64_t span_cap = kDefaultSpanCap;
};

void add_common(CLI::App* cmd, CommonOptions* opts, bool with_corpus = true) {
  if (with_corpus) {
    cmd->add_option("--corpus", opts->corpus,
                    "corpus spec, e.g. finset:3,9 or semilattice:B2");
    cmd->add_option("--core", opts->core, "override the core bound");
    cmd->add_option("--ambient", opts->ambient, "override the ambient bound");
  }
  cmd->add_option("--json", opts->json_path, "write the report as JSON");
  cmd->add_option("--span-cap", opts->span_cap,
                  "abort when a hom-set collects more raw spans than this");
}

corpus::CorpusHandle resolve_corpus(const CommonOptions& opts,
                                    const std::string& fallback) {
  const std::string spec = opts.corpus.empty() ? fallback : opts.corpus;
  if (spec.empty()) {
    throw std::invalid_argument("no corpus given (use --corpus)");
  }
  return corpus::build_corpus(spec,
                              corpus::BoundOverrides{opts.core, opts.ambient});
}

Tier tier_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const dsl::FincatDocument doc = dsl::parse(buffer.str());
  if (doc.categories.empty()) {
    throw std::invalid_argument(path + " declares no category");
  }
  const Category& c = doc.categories.front().category;
  return make_tier(c, all_objects(c), true, true);
}

int emit(report::Report report, const CommonOptions& opts,
         std::chrono::steady_clock::time_point started) {
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  report.print_table(std::cout);
  if (!opts.json_path.empty()) {
    std::ofstream out(opts.json_path);
    if (!out) {
      throw std::invalid_argument("cannot write " + opts.json_path);
    }
    out << report.to_json().dump(2) << "\n";
  }
  return report.any_failure() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fincat: exhaustive verification over finite categories"};
  app.require_subcommand(1);

  CommonOptions opts;
  if (const char* env_cap = std::getenv("FINKAT_SPAN_CAP")) {
    opts.span_cap = std::strtoull(env_cap, nullptr, 10);
  }

  std::string condition;
  std::string theorem;

  CLI::App* corpus_cmd =
      app.add_subcommand("corpus", "build a corpus tier and report on it");
  add_common(corpus_cmd, &opts);

  CLI::App* analyze_cmd = app.add_subcommand(
      "analyze", "classification table for every core-codomain morphism");
  add_common(analyze_cmd, &opts);
  analyze_cmd->add_option("--input", opts.input_path,
                          "read a .fincat file instead of a corpus");

  CLI::App* check_cmd =
      app.add_subcommand("check", "evaluate a condition on a corpus tier");
  check_cmd
      ->add_option("condition", condition,
                   "pbse_iso | mono_split | balanced | co_pbse_iso | "
                   "co_mono_split | co_balanced")
      ->required();
  add_common(check_cmd, &opts);

  CLI::App* spec_cmd = app.add_subcommand(
      "spec", "build the localization at the stable essential monos");
  add_common(spec_cmd, &opts);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run a theorem verification suite");
  verify_cmd
      ->add_option("id", theorem,
                   "2.5 | 3.2 | 4.9 | 5.1 | 6.3 | 6.5 | 6.6 | 7.1a | "
                   "7.1b | example-1.1")
      ->required();
  add_common(verify_cmd, &opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    report::Report report;
    if (corpus_cmd->parsed()) {
      const auto handle = resolve_corpus(opts, "");
      report = verify::run_corpus(handle);
      report.command = "corpus " + opts.corpus;
    } else if (analyze_cmd->parsed()) {
      if (!opts.input_path.empty()) {
        report = verify::run_analyze(tier_from_file(opts.input_path));
        report.command = "analyze --input " + opts.input_path;
      } else {
        report = verify::run_analyze(resolve_corpus(opts, "").tier);
        report.command = "analyze --corpus " + opts.corpus;
      }
    } else if (check_cmd->parsed()) {
      std::optional<ConditionTag> tag;
      for (ConditionTag candidate :
           {ConditionTag::kPbseIso, ConditionTag::kMonoSplit,
            ConditionTag::kBalanced, ConditionTag::kCoPbseIso,
            ConditionTag::kCoMonoSplit, ConditionTag::kCoBalanced}) {
        if (condition == condition_name(candidate)) tag = candidate;
      }
      if (!tag) {
        throw std::invalid_argument("unknown condition: " + condition);
      }
      report = verify::run_check(resolve_corpus(opts, ""), *tag);
      report.command = "check " + condition + " --corpus " + opts.corpus;
    } else if (spec_cmd->parsed()) {
      report = verify::run_spec(resolve_corpus(opts, ""), opts.span_cap);
      report.command = "spec --corpus " + opts.corpus;
    } else if (verify_cmd->parsed()) {
      const std::string fallback = verify::default_corpus_for(theorem);
      report = verify::run_verify(theorem, resolve_corpus(opts, fallback),
                                  opts.span_cap);
      report.command = "verify " + theorem + " --corpus " +
                       (opts.corpus.empty() ? fallback : opts.corpus);
    }
    return emit(std::move(report), opts, started);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
