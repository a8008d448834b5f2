// Locality-based module extraction: single-flavor modules, nested yz-modules
// and their iterated fixpoint, plus genuine modules.
#pragma once

#include "locality/model.hpp"
#include "locality/normalize.hpp"
#include "locality/semantic.hpp"
#include "locality/syntactic.hpp"

#include <chrono>
#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace locality {

struct ExtractionOptions {
  bool refined = false;  // refined syntactic check for InverseRoles(R, R⁻)
  Budget budget{};       // per semantic locality check
  bool trace = false;    // record the axioms added in each pass
};

enum class ModuleKind { Single, Nested, Star };

// Single uses `outer`; Nested and Star compute outer-mod(Σ, inner-mod(Σ, O)).
struct ModuleFlavor {
  ModuleKind kind = ModuleKind::Single;
  LocalityFlavor outer = LocalityFlavor::SynBot;
  LocalityFlavor inner = LocalityFlavor::SynBot;

  static ModuleFlavor single(LocalityFlavor f) { return {ModuleKind::Single, f, f}; }
  static ModuleFlavor nested(LocalityFlavor y, LocalityFlavor z) { return {ModuleKind::Nested, y, z}; }
  static ModuleFlavor star(LocalityFlavor y, LocalityFlavor z) { return {ModuleKind::Star, y, z}; }
  static ModuleFlavor syntactic_star() { return star(LocalityFlavor::SynTop, LocalityFlavor::SynBot); }
  static ModuleFlavor semantic_star() { return star(LocalityFlavor::SemTop, LocalityFlavor::SemBot); }

  friend bool operator==(const ModuleFlavor&, const ModuleFlavor&) = default;
};

inline std::string to_string(const ModuleFlavor& f) {
  switch (f.kind) {
    case ModuleKind::Single: return to_string(f.outer);
    case ModuleKind::Nested: return std::string(to_string(f.outer)) + "+" + to_string(f.inner);
    case ModuleKind::Star: return std::string(to_string(f.outer)) + "+" + to_string(f.inner) + "*";
  }
  return "?";
}

struct ModuleResult {
  Ontology module;
  Signature seed_signature;
  Signature extended_signature;  // seed ∪ Sig(module)
  ModuleFlavor flavor;
  int rounds = 0;
  std::uint64_t locality_checks = 0;
  std::chrono::nanoseconds wall_time{0};
  std::uint64_t unknown_verdicts = 0;  // axioms pulled in only because the check was undecided
  std::vector<std::vector<std::size_t>> trace;  // per pass, positions in the input ontology
  std::vector<std::size_t> chain_sizes;         // Star: |M_0|, |M_1|, ..., |M_n|
};

// Locality of one axiom under any of the four flavors.
inline Verdict check_locality(const Axiom& a, const Signature& sig, LocalityFlavor flavor,
                              const ExtractionOptions& options = {}) {
  if (is_syntactic(flavor))
    return is_syntactically_local(a, sig, flavor, options.refined) ? Verdict::local() : Verdict::non_local();
  return is_semantically_local(a, sig, flavor, options.budget);
}

// The fixpoint "add every axiom that is not local w.r.t. Σ ∪ Sig(M)". Only
// axioms mentioning a name that has just entered the extended signature are
// re-checked, since locality depends on the signature only through the
// axiom's own names.
inline ModuleResult extract_module(const Ontology& o, const Signature& sig, LocalityFlavor flavor,
                                   const ExtractionOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  ModuleResult result;
  result.seed_signature = sig;
  result.extended_signature = sig;
  result.flavor = ModuleFlavor::single(flavor);

  const std::size_t n = o.size();
  std::vector<Signature> sigs(n);
  std::unordered_map<std::string, std::vector<std::size_t>> by_concept, by_role;
  for (std::size_t i = 0; i < n; ++i) {
    sigs[i] = signature_of(o[i]);
    for (const auto& c : sigs[i].concepts) by_concept[c].push_back(i);
    for (const auto& r : sigs[i].roles) by_role[r].push_back(i);
  }

  std::vector<bool> in_module(n, false), pending(n, true);
  std::vector<std::size_t> wave(n);
  for (std::size_t i = 0; i < n; ++i) wave[i] = i;

  Signature& ext = result.extended_signature;
  while (!wave.empty()) {
    std::vector<std::size_t> added;
    std::vector<std::size_t> next;
    for (std::size_t i : wave) pending[i] = false;
    for (std::size_t i : wave) {
      if (in_module[i]) continue;
      ++result.locality_checks;
      const Verdict v = check_locality(o[i], ext, flavor, options);
      if (v.is_local()) continue;
      if (v.is_unknown()) ++result.unknown_verdicts;
      in_module[i] = true;
      added.push_back(i);
      auto wake = [&](const std::vector<std::size_t>& users) {
        for (std::size_t j : users) {
          if (!in_module[j] && !pending[j]) {
            pending[j] = true;
            next.push_back(j);
          }
        }
      };
      for (const auto& c : sigs[i].concepts)
        if (ext.concepts.insert(c).second) wake(by_concept[c]);
      for (const auto& r : sigs[i].roles)
        if (ext.roles.insert(r).second) wake(by_role[r]);
      ext.individuals.insert(sigs[i].individuals.begin(), sigs[i].individuals.end());
    }
    if (!added.empty()) {
      ++result.rounds;
      if (options.trace) result.trace.push_back(added);
    }
    std::sort(next.begin(), next.end());
    wave = std::move(next);
  }

  Ontology module(o.name());
  for (std::size_t i = 0; i < n; ++i)
    if (in_module[i]) module.add(o[i]);
  result.module = std::move(module);
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

namespace extractor_detail {

inline void accumulate(ModuleResult& into, const ModuleResult& from) {
  into.locality_checks += from.locality_checks;
  into.unknown_verdicts += from.unknown_verdicts;
  into.trace.insert(into.trace.end(), from.trace.begin(), from.trace.end());
}

inline ModuleResult finish(ModuleResult r, const Signature& seed, ModuleFlavor flavor,
                           std::chrono::steady_clock::time_point start) {
  r.seed_signature = seed;
  r.extended_signature = seed | signature_of(r.module);
  r.flavor = flavor;
  r.wall_time = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace extractor_detail

// outer-mod(Σ, inner-mod(Σ, O)).
inline ModuleResult extract_nested(const Ontology& o, const Signature& sig, LocalityFlavor outer,
                                   LocalityFlavor inner, const ExtractionOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  ModuleResult first = extract_module(o, sig, inner, options);
  ModuleResult second = extract_module(first.module, sig, outer, options);
  ModuleResult r;
  r.module = std::move(second.module);
  extractor_detail::accumulate(r, first);
  extractor_detail::accumulate(r, second);
  r.rounds = 1;
  return extractor_detail::finish(std::move(r), sig, ModuleFlavor::nested(outer, inner), start);
}

// Iterates extract_nested from M_0 = O until M_n = M_{n+1}; rounds = n.
inline ModuleResult extract_star(const Ontology& o, const Signature& sig, LocalityFlavor outer,
                                 LocalityFlavor inner, const ExtractionOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  ModuleResult r;
  Ontology current = o;
  r.chain_sizes.push_back(current.size());
  for (int i = 0;; ++i) {
    ModuleResult step = extract_nested(current, sig, outer, inner, options);
    extractor_detail::accumulate(r, step);
    if (same_axioms(step.module, current)) {
      r.rounds = i;
      break;
    }
    current = std::move(step.module);
    r.chain_sizes.push_back(current.size());
  }
  r.module = std::move(current);
  return extractor_detail::finish(std::move(r), sig, ModuleFlavor::star(outer, inner), start);
}

inline ModuleResult extract(const Ontology& o, const Signature& sig, const ModuleFlavor& flavor,
                            const ExtractionOptions& options = {}) {
  switch (flavor.kind) {
    case ModuleKind::Single: return extract_module(o, sig, flavor.outer, options);
    case ModuleKind::Nested: return extract_nested(o, sig, flavor.outer, flavor.inner, options);
    case ModuleKind::Star: return extract_star(o, sig, flavor.outer, flavor.inner, options);
  }
  return {};
}

// Positions of the module's axioms in `source`.
inline std::vector<std::size_t> positions(const Ontology& source, const Ontology& module) {
  std::unordered_map<Axiom, std::size_t, AxiomHash> where;
  for (std::size_t i = 0; i < source.size(); ++i) where.emplace(source[i], i);
  std::vector<std::size_t> out;
  for (const auto& a : module.axioms()) {
    auto it = where.find(a);
    if (it != where.end()) out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct GenuineModule {
  std::size_t axiom;  // position of the first axiom whose signature yields this module
  ModuleResult result;
};

// x-mod(Sig(α), O) for every axiom α, deduplicated by module content.
inline std::vector<GenuineModule> genuine_modules(const Ontology& o, const ModuleFlavor& flavor,
                                                  const ExtractionOptions& options = {}) {
  std::vector<GenuineModule> out;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < o.size(); ++i) {
    ModuleResult r = extract(o, signature_of(o[i]), flavor, options);
    if (seen.insert(positions(o, r.module)).second) out.push_back({i, std::move(r)});
  }
  return out;
}

inline std::vector<GenuineModule> genuine_modules(const Ontology& o, LocalityFlavor flavor,
                                                  const ExtractionOptions& options = {}) {
  return genuine_modules(o, ModuleFlavor::single(flavor), options);
}

}  // namespace locality
