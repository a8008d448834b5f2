// Syntactic-vs-semantic comparison experiments over random seed signatures
// (T1a, T1b) and axiom signatures (T2), with CSV and markdown reports.
#pragma once

#include "locality/extractor.hpp"
#include "locality/model.hpp"
#include "locality/normalize.hpp"
#include "locality/semantic.hpp"
#include "locality/syntactic.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace locality {

struct SamplingConfig {
  std::size_t sample_count = 400;
  double inclusion_probability = 0.5;
  std::uint64_t rng_seed = 0;
  bool binned = false;
  std::size_t bin_count = 10;
  // Signatures with at most this many names are enumerated exhaustively.
  std::size_t enumerate_up_to = 9;

  void validate() const {
    if (!(inclusion_probability > 0.0 && inclusion_probability < 1.0))
      throw std::invalid_argument("inclusion probability must lie strictly between 0 and 1");
    if (sample_count < 1) throw std::invalid_argument("sample count must be at least 1");
    if (binned && bin_count < 1) throw std::invalid_argument("bin count must be at least 1");
  }
};

namespace harness_detail {

// Bit-exact across standard libraries, unlike the <random> distributions.
inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

struct Entity {
  EntityKind kind;
  std::string name;
};

inline std::vector<Entity> entities(const Ontology& o) {
  const Signature s = signature_of(o);
  std::vector<Entity> out;
  for (const auto& c : s.concepts) out.push_back({EntityKind::Concept, c});
  for (const auto& r : s.roles) out.push_back({EntityKind::Role, r});
  return out;
}

}  // namespace harness_detail

// Seed signatures over the concept and role names of `o`.
inline std::vector<Signature> sample_signatures(const Ontology& o, const SamplingConfig& cfg) {
  using namespace harness_detail;
  cfg.validate();
  const std::vector<Entity> names = entities(o);
  const std::size_t m = names.size();
  std::vector<Signature> out;

  if (m <= cfg.enumerate_up_to) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      Signature s;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1) s.add(names[i].kind, names[i].name);
      out.push_back(std::move(s));
    }
    return out;
  }

  std::mt19937_64 rng(cfg.rng_seed);
  if (!cfg.binned) {
    out.reserve(cfg.sample_count);
    for (std::size_t k = 0; k < cfg.sample_count; ++k) {
      Signature s;
      for (const auto& e : names)
        if (unit(rng) < cfg.inclusion_probability) s.add(e.kind, e.name);
      out.push_back(std::move(s));
    }
    return out;
  }

  // Sizes 0..m split into bin_count ranges; each bin gets an equal share of
  // the samples, with a target size drawn uniformly inside the bin.
  const std::size_t bins = std::min(cfg.bin_count, m + 1);
  std::vector<std::size_t> index(m);
  for (std::size_t b = 0; b < bins; ++b) {
    const std::size_t lo = b * (m + 1) / bins;
    const std::size_t hi = (b + 1) * (m + 1) / bins;  // exclusive
    const std::size_t share = cfg.sample_count / bins + (b < cfg.sample_count % bins ? 1 : 0);
    for (std::size_t k = 0; k < share; ++k) {
      const std::size_t size = lo + below(rng, hi - lo);
      for (std::size_t i = 0; i < m; ++i) index[i] = i;
      // Partial Fisher-Yates: the first `size` slots are a uniform subset.
      for (std::size_t i = 0; i < size; ++i) std::swap(index[i], index[i + below(rng, m - i)]);
      Signature s;
      for (std::size_t i = 0; i < size; ++i) s.add(names[index[i]].kind, names[index[i]].name);
      out.push_back(std::move(s));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

enum class CulpritType { None, Type1, Type2 };

inline const char* to_string(CulpritType t) {
  switch (t) {
    case CulpritType::None: return "none";
    case CulpritType::Type1: return "type1";
    case CulpritType::Type2: return "type2";
  }
  return "?";
}

// Type1: InverseRoles(R, R⁻). Type2: A ≡ C1 ⊓ ... ⊓ Cn where, for one role R,
// some Ci is ∀R.D and some Cj is ∃R.E or ≥n R.E with n ≥ 1.
inline CulpritType classify_culprit(const Axiom& a) {
  using K = ConceptExpr::Kind;
  if (a.kind() == Axiom::Kind::InverseRoles)
    return inverse(normalize_role(a.first_role())) == normalize_role(a.second_role()) ? CulpritType::Type1
                                                                                        : CulpritType::None;
  if (a.kind() != Axiom::Kind::EquivalentClasses) return CulpritType::None;
  const ConceptExpr* definition = nullptr;
  if (a.lhs().is(K::Name) && a.rhs().is(K::And))
    definition = &a.rhs();
  else if (a.rhs().is(K::Name) && a.lhs().is(K::And))
    definition = &a.lhs();
  if (!definition) return CulpritType::None;
  std::set<RoleExpr> universal, existential;
  for (const auto& c : definition->operands()) {
    if (c.is(K::ForAll)) universal.insert(c.role());
    if (c.is(K::Exists) || (c.is(K::AtLeast) && c.cardinality() >= 1)) existential.insert(c.role());
  }
  for (const auto& r : universal)
    if (existential.count(r)) return CulpritType::Type2;
  return CulpritType::None;
}

// ---------------------------------------------------------------------------

enum class Test { T1a, T1b, T2 };

inline const char* to_string(Test t) {
  switch (t) {
    case Test::T1a: return "T1a";
    case Test::T1b: return "T1b";
    case Test::T2: return "T2";
  }
  return "?";
}

struct DifferenceRecord {
  Test test = Test::T1b;
  std::size_t case_id = 0;  // sample index, or axiom position for T2
  Signature seed_signature;
  std::size_t syntactic_size = 0;
  std::size_t semantic_size = 0;
  std::vector<std::size_t> difference_axioms;  // positions in the ontology
  std::chrono::nanoseconds syn_time{0};
  std::chrono::nanoseconds sem_time{0};
  std::vector<std::pair<std::size_t, CulpritType>> culprits;
  std::uint64_t unknown_verdicts = 0;

  // Percentage of the syntactic result.
  double relative_difference() const {
    return syntactic_size == 0 ? 0.0 : 100.0 * static_cast<double>(difference_axioms.size()) / syntactic_size;
  }
};

// A syntactically local axiom turned out semantically non-local, or a
// semantic module is not contained in the syntactic one.
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComparisonConfig {
  SamplingConfig sampling{};
  ExtractionOptions extraction{};
  unsigned jobs = 0;  // 0: hardware concurrency
};

struct ComparisonRun {
  std::string ontology;
  std::size_t axioms = 0;
  Test test = Test::T1b;
  std::size_t cases = 0;
  std::vector<DifferenceRecord> records;  // only cases with differences, by case_id
  std::chrono::nanoseconds syn_time{0};  // totals over all cases
  std::chrono::nanoseconds sem_time{0};
  std::uint64_t unknown_verdicts = 0;
};

namespace harness_detail {

struct Case {
  bool differs = false;
  DifferenceRecord record;
};

inline std::string describe(const Signature& s) {
  std::string out;
  for (const auto& c : s.concepts) out += (out.empty() ? "C:" : ",C:") + c;
  for (const auto& r : s.roles) out += (out.empty() ? "R:" : ",R:") + r;
  return out.empty() ? "{}" : out;
}

inline void classify(const Ontology& o, DifferenceRecord& r) {
  for (std::size_t i : r.difference_axioms) r.culprits.emplace_back(i, classify_culprit(o[i]));
}

inline Case t1a(const Ontology& o, const Signature& sig, const ExtractionOptions& options) {
  using clock = std::chrono::steady_clock;
  Case c;
  DifferenceRecord& r = c.record;
  r.test = Test::T1a;
  r.seed_signature = sig;
  std::vector<bool> syn_local(o.size());
  auto t0 = clock::now();
  for (std::size_t i = 0; i < o.size(); ++i)
    syn_local[i] = is_syntactically_local(o[i], sig, LocalityFlavor::SynBot, options.refined);
  auto t1 = clock::now();
  std::vector<Verdict> sem(o.size());
  for (std::size_t i = 0; i < o.size(); ++i) sem[i] = is_semantically_local(o[i], sig, LocalityFlavor::SemBot, options.budget);
  auto t2 = clock::now();
  r.syn_time = t1 - t0;
  r.sem_time = t2 - t1;
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (!syn_local[i]) ++r.syntactic_size;
    if (!sem[i].is_local()) ++r.semantic_size;
    if (sem[i].is_unknown()) ++r.unknown_verdicts;
    if (syn_local[i] && sem[i].is_non_local())
      throw InvariantViolation("axiom " + std::to_string(i) + " (" + to_string(o[i]) +
                               ") is syntactically local but semantically non-local for signature " + describe(sig));
    if (!syn_local[i] && sem[i].is_local()) r.difference_axioms.push_back(i);
  }
  c.differs = !r.difference_axioms.empty();
  return c;
}

inline Case modules(const Ontology& o, Test test, const Signature& sig, const ExtractionOptions& options) {
  Case c;
  DifferenceRecord& r = c.record;
  r.test = test;
  r.seed_signature = sig;
  const ModuleResult syn = extract_module(o, sig, LocalityFlavor::SynBot, options);
  const ModuleResult sem = extract_module(o, sig, LocalityFlavor::SemBot, options);
  r.syn_time = syn.wall_time;
  r.sem_time = sem.wall_time;
  r.syntactic_size = syn.module.size();
  r.semantic_size = sem.module.size();
  r.unknown_verdicts = sem.unknown_verdicts;
  if (!is_subset(sem.module, syn.module) && sem.unknown_verdicts == 0)
    throw InvariantViolation(std::string(to_string(test)) + ": semantic module is not contained in the syntactic module for signature " +
                             describe(sig));
  for (std::size_t i : positions(o, syn.module))
    if (!sem.module.contains(o[i])) r.difference_axioms.push_back(i);
  c.differs = !same_axioms(syn.module, sem.module);
  return c;
}

}  // namespace harness_detail

// Runs one test over `o`. Cases are evaluated concurrently; records come
// back ordered by case id. Throws InvariantViolation on a never-inverted
// breach.
inline ComparisonRun run_comparison(const Ontology& o, Test test, const ComparisonConfig& cfg = {}) {
  using namespace harness_detail;
  std::vector<Signature> sigs;
  if (test == Test::T2) {
    sigs.reserve(o.size());
    for (const auto& a : o.axioms()) sigs.push_back(signature_of(a));
  } else {
    sigs = sample_signatures(o, cfg.sampling);
  }

  auto run_case = [&](std::size_t k) {
    Case c = test == Test::T1a ? t1a(o, sigs[k], cfg.extraction) : modules(o, test, sigs[k], cfg.extraction);
    c.record.case_id = k;
    if (c.differs) classify(o, c.record);
    return c;
  };

  // One untimed warm-up case.
  if (!sigs.empty()) run_case(0);

  std::vector<Case> cases(sigs.size());
  unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(sigs.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= sigs.size()) return;
      try {
        cases[k] = run_case(k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = sigs.size();
        return;
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  ComparisonRun run;
  run.ontology = o.name();
  run.axioms = o.size();
  run.test = test;
  run.cases = sigs.size();
  for (auto& c : cases) {
    run.syn_time += c.record.syn_time;
    run.sem_time += c.record.sem_time;
    run.unknown_verdicts += c.record.unknown_verdicts;
    if (c.differs) run.records.push_back(std::move(c.record));
  }
  return run;
}

// ---------------------------------------------------------------------------

enum class ReportFormat { Csv, Markdown };

struct ReportOptions {
  // Wall-clock columns make the output machine-dependent; without them the
  // report is byte-reproducible.
  bool timings = false;
};

namespace harness_detail {

inline std::string number(double x, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << x;
  std::string s = os.str();
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

inline std::string millis(std::chrono::nanoseconds t) {
  return number(std::chrono::duration<double, std::milli>(t).count(), 3);
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename T>
std::string range(T lo, T hi, const std::string& suffix = {}) {
  if (lo == hi) return number(lo, 1) + suffix;
  return number(lo, 1) + suffix + "–" + number(hi, 1) + suffix;
}

}  // namespace harness_detail

// Average sem:syn time ratio, or nullopt when the syntactic side averages
// under a millisecond and no reliable statement is possible.
inline std::optional<double> time_ratio(const ComparisonRun& run) {
  if (run.cases == 0) return std::nullopt;
  const double syn = std::chrono::duration<double, std::milli>(run.syn_time).count() / run.cases;
  const double sem = std::chrono::duration<double, std::milli>(run.sem_time).count() / run.cases;
  if (syn < 1.0) return std::nullopt;
  return sem / syn;
}

inline std::string render_report(std::span<const ComparisonRun> runs, ReportFormat format, const ReportOptions& options = {}) {
  using namespace harness_detail;
  std::ostringstream os;
  if (format == ReportFormat::Csv) {
    os << "ontology,axioms,test,case_id,seed_size,syn_size,sem_size,diff_size,diff_rel,syn_ms,sem_ms,culprits\n";
    for (const auto& run : runs) {
      for (const auto& r : run.records) {
        std::string culprits;
        for (const auto& [id, type] : r.culprits) culprits += (culprits.empty() ? "" : ";") + std::to_string(id) + ":" + to_string(type);
        os << csv_field(run.ontology) << ',' << run.axioms << ',' << to_string(run.test) << ',' << r.case_id << ','
           << r.seed_signature.term_count() << ',' << r.syntactic_size << ',' << r.semantic_size << ','
           << r.difference_axioms.size() << ',' << number(r.relative_difference(), 2) << ','
           << (options.timings ? millis(r.syn_time) : "") << ',' << (options.timings ? millis(r.sem_time) : "") << ','
           << csv_field(culprits) << '\n';
      }
    }
    return os.str();
  }

  os << "| ontology | #axioms | test | #cases with differences | difference size | relative difference | time ratio sem:syn | culprits |\n";
  os << "|---|---:|---|---:|---:|---:|---:|---|\n";
  for (const auto& run : runs) {
    std::string abs = "—", rel = "—";
    if (!run.records.empty()) {
      std::size_t lo = SIZE_MAX, hi = 0;
      double rlo = 1e300, rhi = 0;
      for (const auto& r : run.records) {
        lo = std::min(lo, r.difference_axioms.size());
        hi = std::max(hi, r.difference_axioms.size());
        rlo = std::min(rlo, r.relative_difference());
        rhi = std::max(rhi, r.relative_difference());
      }
      abs = range(static_cast<double>(lo), static_cast<double>(hi));
      rel = range(rlo, rhi, "%");
    }
    std::string ratio = "—";
    if (options.timings)
      if (auto x = time_ratio(run)) ratio = number(*x, 1);
    // Distinct culprit axioms per type.
    std::map<CulpritType, std::set<std::size_t>> by_type;
    for (const auto& r : run.records)
      for (const auto& [id, type] : r.culprits)
        if (type != CulpritType::None) by_type[type].insert(id);
    std::string culprits;
    for (const auto& [type, ids] : by_type)
      culprits += (culprits.empty() ? "" : ", ") + std::string(to_string(type)) + " (" + std::to_string(ids.size()) + ")";
    if (culprits.empty()) culprits = "—";
    os << "| " << run.ontology << " | " << run.axioms << " | " << to_string(run.test) << " | " << run.records.size() << " / "
       << run.cases << " | " << abs << " | " << rel << " | " << ratio << " | " << culprits << " |\n";
  }
  return os.str();
}

}  // namespace locality
