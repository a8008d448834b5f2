// locmod: locality-based module extraction from the command line.
#include "locality/locality.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace fs = std::filesystem;
using namespace locality;

namespace {

enum Exit { kOk = 0, kParse = 1, kUnsupported = 2, kUnknownVerdicts = 3, kInvariant = 4 };

struct Failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kParse, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_code(const std::vector<ParseError>& errors) {
  for (const auto& e : errors)
    if (e.kind == ParseError::Kind::UnsupportedConstruct) return kUnsupported;
  return kParse;
}

Ontology load_ontology(const std::string& path, bool strict) {
  auto r = parse_ontology(read_file(path), {strict});
  if (!r.ok()) {
    std::string msg;
    for (const auto& e : r.errors) msg += (msg.empty() ? "" : "\n") + path + ":" + e.describe();
    throw Failure{exit_code(r.errors), msg};
  }
  if (r.skipped_annotations)
    std::cerr << "warning: " << path << ": skipped " << r.skipped_annotations << " annotation/import axiom(s)\n";
  Ontology o = std::move(*r.value);
  if (o.name().empty()) o.set_name(fs::path(path).stem().string());
  return o;
}

// "C:A,R:r,I:a,B": prefixed entries are taken as given, bare names are
// resolved against the ontology.
Signature parse_terms(const std::string& list, const Ontology& o) {
  std::string lines = list;
  std::replace(lines.begin(), lines.end(), ',', '\n');
  auto r = parse_signature(lines, o);
  if (!r.ok()) {
    std::string msg;
    for (const auto& e : r.errors) msg += (msg.empty() ? "--terms: " : "\n--terms: ") + e.message;
    throw Failure{kParse, msg};
  }
  return *r.value;
}

struct SignatureArgs {
  std::string file;
  std::string terms;
};

Signature load_signature(const SignatureArgs& args, const Ontology& o) {
  Signature sig;
  if (!args.file.empty()) {
    auto r = parse_signature(read_file(args.file), o);
    if (!r.ok()) {
      std::string msg;
      for (const auto& e : r.errors) msg += (msg.empty() ? "" : "\n") + args.file + ":" + e.describe();
      throw Failure{kParse, msg};
    }
    sig = *r.value;
  }
  if (!args.terms.empty()) {
    Signature inline_sig = parse_terms(args.terms, o);
    if (!args.file.empty() && !(inline_sig == sig))
      std::cerr << "warning: --terms and --signature disagree; using --terms\n";
    sig = inline_sig;
  }
  return sig;
}

const std::map<std::string, ModuleFlavor>& flavors() {
  static const std::map<std::string, ModuleFlavor> m{
      {"bot", ModuleFlavor::single(LocalityFlavor::SynBot)},
      {"top", ModuleFlavor::single(LocalityFlavor::SynTop)},
      {"star", ModuleFlavor::syntactic_star()},
      {"sem-bot", ModuleFlavor::single(LocalityFlavor::SemBot)},
      {"sem-top", ModuleFlavor::single(LocalityFlavor::SemTop)},
      {"sem-star", ModuleFlavor::semantic_star()},
  };
  return m;
}

std::vector<std::string> flavor_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : flavors()) out.push_back(k);
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kParse, "cannot write " + path};
  out << text;
}

struct Common {
  std::string ontology;
  bool strict_parse = false;
  bool refined = false;
  std::uint64_t budget_steps = Budget{}.max_steps;
  std::int64_t budget_ms = Budget{}.max_time.count();
  bool strict_verdicts = false;
  bool verbose = false;
  std::string out;

  ExtractionOptions options() const {
    ExtractionOptions o;
    o.refined = refined;
    o.budget.max_steps = budget_steps;
    o.budget.max_time = std::chrono::milliseconds(budget_ms);
    o.trace = verbose;
    return o;
  }
};

void add_common(CLI::App* app, Common& c, bool with_ontology = true) {
  if (with_ontology)
    app->add_option("-o,--ontology", c.ontology, "Ontology file (functional syntax)")->required()->check(CLI::ExistingFile);
  app->add_flag("--strict-parse", c.strict_parse, "Reject entities used without a matching declaration");
  app->add_flag("--refined", c.refined, "Treat InverseObjectProperties(R, inverse R) as syntactically local");
  app->add_option("--budget-steps", c.budget_steps, "Tableau rule applications per semantic check")
      ->envname("LOCMOD_BUDGET_STEPS")
      ->capture_default_str();
  app->add_option("--budget-ms", c.budget_ms, "Wall-clock milliseconds per semantic check")
      ->envname("LOCMOD_BUDGET_MS")
      ->capture_default_str();
  app->add_flag("--strict-verdicts", c.strict_verdicts, "Exit 3 when any semantic check was undecided");
  app->add_flag("-v,--verbose", c.verbose, "Trace extraction passes on stderr");
  app->add_option("--out", c.out, "Output file (default: stdout)");
}

void add_signature(CLI::App* app, SignatureArgs& s) {
  app->add_option("-s,--signature", s.file, "Seed signature file")->check(CLI::ExistingFile);
  app->add_option("-t,--terms", s.terms, "Inline seed signature, e.g. C:Student,R:hasChildren");
}

int unknown_exit(const Common& c, std::uint64_t unknown) {
  if (unknown == 0) return kOk;
  std::cerr << "warning: " << unknown << " semantic check(s) undecided within the budget; treated as non-local\n";
  return c.strict_verdicts ? kUnknownVerdicts : kOk;
}

void print_trace(const Ontology& o, const ModuleResult& r) {
  for (std::size_t pass = 0; pass < r.trace.size(); ++pass) {
    std::cerr << "pass " << pass + 1 << ":\n";
    for (std::size_t i : r.trace[pass]) std::cerr << "  + [" << i << "] " << to_string(o[i]) << "\n";
  }
  std::cerr << r.locality_checks << " locality checks, " << r.module.size() << " axioms\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locality-based module extraction for description logic ontologies"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "locmod 1.0");

  Common common;
  SignatureArgs sig_args;
  std::string extract_flavor, check_flavor, genuine_flavor = "bot", oracle_flavor;
  const auto flavor_check = CLI::IsMember(flavor_names());

  auto* cmd_extract = app.add_subcommand("extract", "Extract a module for a seed signature");
  add_common(cmd_extract, common);
  add_signature(cmd_extract, sig_args);
  cmd_extract->add_option("-f,--flavor", extract_flavor, "bot, top, star, sem-bot, sem-top or sem-star")->required()->check(flavor_check);

  auto* cmd_check = app.add_subcommand("check", "Report the locality of every axiom");
  add_common(cmd_check, common);
  add_signature(cmd_check, sig_args);
  cmd_check->add_option("-f,--flavor", check_flavor, "bot, top, sem-bot or sem-top")
      ->required()
      ->check(CLI::IsMember({"bot", "top", "sem-bot", "sem-top"}));

  auto* cmd_genuine = app.add_subcommand("genuine", "List the distinct modules of all axiom signatures");
  add_common(cmd_genuine, common);
  cmd_genuine->add_option("-f,--flavor", genuine_flavor, "Module flavor")->check(flavor_check)->capture_default_str();

  auto* cmd_compare = app.add_subcommand("compare", "Compare syntactic and semantic locality (T1a, T1b, T2)");
  std::vector<std::string> ontologies;
  std::string corpus, mode = "all", format;
  SamplingConfig sampling;
  unsigned jobs = 0;
  bool timings = false;
  add_common(cmd_compare, common, false);
  cmd_compare->add_option("-o,--ontology", ontologies, "Ontology file; repeatable")->check(CLI::ExistingFile);
  cmd_compare->add_option("--corpus", corpus, "Directory; every *.ofs file in it is compared")->check(CLI::ExistingDirectory);
  cmd_compare->add_option("-m,--mode", mode, "t1a, t1b, t2 or all")->check(CLI::IsMember({"t1a", "t1b", "t2", "all"}))->capture_default_str();
  cmd_compare->add_option("-n,--samples", sampling.sample_count, "Random signatures per ontology")->check(CLI::PositiveNumber)->capture_default_str();
  cmd_compare->add_option("--seed", sampling.rng_seed, "Random seed")->capture_default_str();
  cmd_compare->add_option("-p,--probability", sampling.inclusion_probability, "Inclusion probability per name")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd_compare->add_flag("--binned", sampling.binned, "Draw signature sizes from equal-width bins");
  cmd_compare->add_option("--bins", sampling.bin_count, "Number of bins")->check(CLI::PositiveNumber)->capture_default_str();
  cmd_compare->add_option("--format", format, "csv or markdown (default: from --out extension, else markdown)")
      ->check(CLI::IsMember({"csv", "markdown"}));
  cmd_compare->add_option("-j,--jobs", jobs, "Worker threads (default: all cores)");
  cmd_compare->add_flag("--timings", timings, "Include wall-clock columns (output is then not reproducible)");

  auto* cmd_oracle = app.add_subcommand("oracle", "Search small finite interpretations for countermodels");
  cmd_oracle->group("");  // hidden
  unsigned max_domain = 3;
  add_common(cmd_oracle, common);
  add_signature(cmd_oracle, sig_args);
  cmd_oracle->add_option("-f,--flavor", oracle_flavor, "With a flavor: refute locality instead of validity")
      ->check(CLI::IsMember({"sem-bot", "sem-top"}));
  cmd_oracle->add_option("--max-domain", max_domain, "Largest domain size tried")->check(CLI::Range(1, 8))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    const ExtractionOptions options = common.options();

    if (cmd_extract->parsed()) {
      const Ontology o = load_ontology(common.ontology, common.strict_parse);
      const Signature sig = load_signature(sig_args, o);
      const ModuleResult r = extract(o, sig, flavors().at(extract_flavor), options);
      if (common.verbose) print_trace(o, r);
      Ontology module = r.module;
      module.set_name(o.name() + "-module");
      write_output(common.out, serialize_ontology(module));
      return unknown_exit(common, r.unknown_verdicts);
    }

    if (cmd_check->parsed()) {
      const Ontology o = load_ontology(common.ontology, common.strict_parse);
      const Signature sig = load_signature(sig_args, o);
      const LocalityFlavor f = flavors().at(check_flavor).outer;
      std::ostringstream os;
      std::uint64_t unknown = 0;
      for (std::size_t i = 0; i < o.size(); ++i) {
        const Verdict v = check_locality(o[i], sig, f, options);
        unknown += v.is_unknown();
        os << i << '\t' << to_string(v) << '\t' << to_functional(o[i]) << '\n';
        if (common.verbose && v.is_unknown()) std::cerr << "[" << i << "] " << v.reason << "\n";
      }
      write_output(common.out, os.str());
      return unknown_exit(common, unknown);
    }

    if (cmd_genuine->parsed()) {
      const Ontology o = load_ontology(common.ontology, common.strict_parse);
      std::ostringstream os;
      std::uint64_t unknown = 0;
      for (const auto& g : genuine_modules(o, flavors().at(genuine_flavor), options)) {
        unknown += g.result.unknown_verdicts;
        os << "# module of axiom " << g.axiom << ": " << g.result.module.size() << " axiom(s)\n";
        for (std::size_t i : positions(o, g.result.module)) os << i << '\t' << to_functional(o[i]) << '\n';
      }
      write_output(common.out, os.str());
      return unknown_exit(common, unknown);
    }

    if (cmd_compare->parsed()) {
      std::vector<std::string> files = ontologies;
      if (!corpus.empty()) {
        std::vector<std::string> found;
        for (const auto& e : fs::directory_iterator(corpus))
          if (e.is_regular_file() && e.path().extension() == ".ofs") found.push_back(e.path().string());
        std::sort(found.begin(), found.end());
        files.insert(files.end(), found.begin(), found.end());
      }
      if (files.empty()) throw Failure{kParse, "compare: give --ontology or --corpus"};
      if (format.empty()) format = fs::path(common.out).extension() == ".csv" ? "csv" : "markdown";

      std::vector<Test> tests;
      if (mode == "t1a" || mode == "all") tests.push_back(Test::T1a);
      if (mode == "t1b" || mode == "all") tests.push_back(Test::T1b);
      if (mode == "t2" || mode == "all") tests.push_back(Test::T2);

      ComparisonConfig cfg;
      cfg.sampling = sampling;
      cfg.extraction = options;
      cfg.extraction.trace = false;
      cfg.jobs = jobs;
      std::vector<ComparisonRun> runs;
      std::uint64_t unknown = 0;
      for (const auto& file : files) {
        const Ontology o = load_ontology(file, common.strict_parse);
        for (Test t : tests) {
          if (common.verbose) std::cerr << o.name() << ": " << to_string(t) << "\n";
          runs.push_back(run_comparison(o, t, cfg));
          unknown += runs.back().unknown_verdicts;
        }
      }
      write_output(common.out, render_report(runs, format == "csv" ? ReportFormat::Csv : ReportFormat::Markdown, {timings}));
      return unknown_exit(common, unknown);
    }

    if (cmd_oracle->parsed()) {
      const Ontology o = load_ontology(common.ontology, common.strict_parse);
      std::ostringstream os;
      if (!oracle_flavor.empty()) {
        const Signature sig = load_signature(sig_args, o);
        const LocalityFlavor f = flavors().at(oracle_flavor).outer;
        for (std::size_t i = 0; i < o.size(); ++i) {
          const bool refuted = brute_force_local(o[i], sig, f, max_domain) == Refutation::Refuted;
          os << i << '\t' << (refuted ? "non-local" : "not-refuted") << '\t' << to_functional(o[i]) << '\n';
        }
      } else {
        for (std::size_t i = 0; i < o.size(); ++i) {
          const auto m = find_countermodel(o[i], max_domain);
          os << i << '\t' << (m ? "countermodel of size " + std::to_string(m->domain_size) : "no countermodel") << '\t'
             << to_functional(o[i]) << '\n';
        }
      }
      write_output(common.out, os.str());
      return kOk;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvariant;
  }
  return kOk;
}
