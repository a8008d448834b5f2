#include "support/random_dl.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
};

// Runs locmod with `args`; stderr is folded into the output when `merge`.
CliRun locmod(const std::string& args, bool merge = true, const std::string& env = {}) {
  const std::string cmd = env + (env.empty() ? "" : " ") + LOCMOD_BINARY + std::string(" ") + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string corpus(const std::string& f) { return std::string(LOCALITY_CORPUS_DIR) + "/" + f; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "locmod-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, ExtractPrintsModule) {
  const CliRun r = locmod("extract --flavor bot --ontology " + corpus("koala.ofs") + " --signature " + corpus("koala.sig"), false);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Ontology(<koala.owl-module>"), std::string::npos);
  EXPECT_NE(r.out.find("EquivalentClasses(MaleStudentWith3Daughters"), std::string::npos);
  auto reparsed = locality::parse_ontology(r.out);
  EXPECT_TRUE(reparsed.ok());
}

TEST(Cli, EveryFlavorIsAccepted) {
  for (const char* f : {"bot", "top", "star", "sem-bot", "sem-top", "sem-star"}) {
    const CliRun r = locmod(std::string("extract -f ") + f + " -o " + corpus("koala.ofs") + " -t C:Koala,R:hasHabitat", false);
    EXPECT_EQ(r.code, 0) << f;
  }
  EXPECT_EQ(locmod("extract -f nope -o " + corpus("koala.ofs")).code, 1);
}

TEST(Cli, ExitCodes) {
  const CliRun malformed = locmod("extract --flavor bot --ontology " + corpus("invalid/malformed.ofs"));
  EXPECT_EQ(malformed.code, 1);
  EXPECT_NE(malformed.out.find("malformed.ofs:2:"), std::string::npos) << malformed.out;

  EXPECT_EQ(locmod("extract --flavor bot --ontology " + corpus("invalid/unsupported.ofs")).code, 2);
  EXPECT_EQ(locmod("extract --flavor bot --bogus-flag --ontology " + corpus("koala.ofs")).code, 1);
  EXPECT_EQ(locmod("").code, 1);
  EXPECT_EQ(locmod("extract -f bot -o " + corpus("koala.ofs") + " -t Nonexistent").code, 1);
}

TEST(Cli, HelpListsFlagsForEverySubcommand) {
  const std::map<std::string, std::vector<std::string>> expected{
      {"extract", {"--ontology", "--signature", "--terms", "--flavor", "--refined", "--budget-steps", "--budget-ms", "--strict-parse", "--strict-verdicts", "--verbose", "--out"}},
      {"check", {"--ontology", "--signature", "--terms", "--flavor", "--refined"}},
      {"genuine", {"--ontology", "--flavor", "--out"}},
      {"compare", {"--ontology", "--corpus", "--mode", "--samples", "--seed", "--probability", "--binned", "--bins", "--format", "--jobs", "--timings", "--out"}},
      {"oracle", {"--ontology", "--max-domain", "--flavor"}},
  };
  for (const auto& [cmd, flags] : expected) {
    const CliRun r = locmod(cmd + " --help");
    EXPECT_EQ(r.code, 0) << cmd;
    for (const auto& f : flags) EXPECT_NE(r.out.find(f), std::string::npos) << cmd << " " << f;
  }
  // The oracle subcommand is not advertised.
  EXPECT_EQ(locmod("--help").out.find("oracle"), std::string::npos);
}

TEST(Cli, InlineTermsWinOverFile) {
  const CliRun both = locmod("extract -f bot -o " + corpus("koala.ofs") + " -s " + corpus("koala.sig") + " -t C:Quokka");
  EXPECT_EQ(both.code, 0);
  EXPECT_NE(both.out.find("warning: --terms and --signature disagree"), std::string::npos);
  EXPECT_NE(both.out.find("SubClassOf(Quokka Marsupials)"), std::string::npos);
  EXPECT_EQ(both.out.find("MaleStudentWith3Daughters"), std::string::npos);
}

TEST(Cli, CheckReportsVerdicts) {
  const CliRun r = locmod("check -f sem-bot -o " + corpus("koala.ofs") + " -t C:Student,R:hasChildren,R:hasGender", false);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("local\tEquivalentClasses(MaleStudentWith3Daughters"), std::string::npos) << r.out;
  const CliRun syn = locmod("check -f bot -o " + corpus("koala.ofs") + " -t C:Student,R:hasChildren,R:hasGender", false);
  EXPECT_NE(syn.out.find("non-local\tEquivalentClasses(MaleStudentWith3Daughters"), std::string::npos);
}

TEST(Cli, BudgetFromEnvironmentAndStrictVerdicts) {
  const std::string args = "extract -f sem-bot -o " + corpus("tambis_fragment.ofs") + " -t C:Protein,C:Reaction,R:catalyses,C:Macromolecule";
  EXPECT_EQ(locmod(args + " --strict-verdicts").code, 0);
  const CliRun starved = locmod(args + " --strict-verdicts", true, "LOCMOD_BUDGET_STEPS=1");
  EXPECT_EQ(starved.code, 3);
  EXPECT_NE(starved.out.find("undecided"), std::string::npos);
  EXPECT_EQ(locmod(args, true, "LOCMOD_BUDGET_STEPS=1").code, 0);
  // The flag overrides the environment.
  EXPECT_EQ(locmod(args + " --strict-verdicts --budget-steps 100000", true, "LOCMOD_BUDGET_STEPS=1").code, 0);
}

TEST(Cli, GenuineModules) {
  const CliRun r = locmod("genuine -o " + corpus("animals.ofs"), false);
  EXPECT_EQ(r.code, 0);
  const auto count = static_cast<std::size_t>(std::count(r.out.begin(), r.out.end(), '#'));
  EXPECT_GE(count, 1u);
  EXPECT_LE(count, 14u);
}

TEST(Cli, CompareIsByteReproducible) {
  const fs::path a = scratch("a.csv"), b = scratch("b.csv");
  const std::string args = "compare --mode t1b --samples 400 --seed 7 -o " + corpus("koala.ofs") + " -o " + corpus("tambis_fragment.ofs");
  ASSERT_EQ(locmod(args + " --out " + a.string()).code, 0);
  ASSERT_EQ(locmod(args + " --jobs 3 --out " + b.string()).code, 0);
  const std::string ta = testing_support::read_text(a.string()), tb = testing_support::read_text(b.string());
  EXPECT_EQ(ta, tb);
  EXPECT_EQ(ta.rfind("ontology,axioms,test,case_id,seed_size,syn_size,sem_size,diff_size,diff_rel,syn_ms,sem_ms,culprits\n", 0), 0u);
  EXPECT_EQ(ta.find('\r'), std::string::npos);
  EXPECT_NE(ta.find("tambis-fragment.owl"), std::string::npos);
}

TEST(Cli, CompareCorpusMarkdown) {
  const CliRun r = locmod("compare --corpus " + std::string(LOCALITY_CORPUS_DIR) + " --samples 50 --format markdown", false);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("| ontology | #axioms | test |"), std::string::npos);
  EXPECT_NE(r.out.find("| animals.owl | 14 | T1a | 0 / 50 |"), std::string::npos) << r.out;
}

TEST(Cli, OracleSearchesCountermodels) {
  const CliRun r = locmod("oracle -o " + corpus("animals.ofs") + " --max-domain 2", false);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("countermodel of size 1\tSubClassOf(Bird Animal)"), std::string::npos) << r.out;
  const CliRun local = locmod("oracle -o " + corpus("animals.ofs") + " -f sem-bot -t C:Duck --max-domain 2", false);
  EXPECT_NE(local.out.find("not-refuted\tSubClassOf(Bird Animal)"), std::string::npos) << local.out;
}
