// Random concepts, axioms, ontologies and signatures for property tests, and
// a deliberately naive module extractor to compare against.
#pragma once

#include "locality/locality.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testing_support {

using namespace locality;

struct Vocabulary {
  std::vector<std::string> concepts{"A", "B", "C"};
  std::vector<std::string> roles{"r", "s"};
  std::vector<std::string> individuals{};
  bool counting = true;   // ≥n / ≤n
  bool inverses = true;
};

class Generator {
 public:
  Generator(std::uint64_t seed, Vocabulary v) : rng_(seed), v_(std::move(v)) {}

  std::mt19937_64& rng() { return rng_; }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  RoleExpr role() {
    const auto& name = v_.roles[pick(v_.roles.size())];
    return v_.inverses && coin(0.25) ? RoleExpr::inverse_of(name) : RoleExpr::named(name);
  }

  ConceptExpr concept_expr(int depth) {
    using C = ConceptExpr;
    const std::size_t leaves = v_.individuals.empty() ? 3 : 4;
    if (depth <= 0 || coin(0.3)) {
      switch (pick(leaves + 4)) {
        case 0: return C::top();
        case 1: return C::bottom();
        case 2: return v_.individuals.empty() ? C::name(v_.concepts[0]) : C::one_of(v_.individuals[pick(v_.individuals.size())]);
        default: return C::name(v_.concepts[pick(v_.concepts.size())]);
      }
    }
    switch (pick(v_.counting ? 7 : 5)) {
      case 0: return C::negation(concept_expr(depth - 1));
      case 1: return C::conjunction({concept_expr(depth - 1), concept_expr(depth - 1)});
      case 2: return C::disjunction({concept_expr(depth - 1), concept_expr(depth - 1)});
      case 3: return C::exists(role(), concept_expr(depth - 1));
      case 4: return C::forall(role(), concept_expr(depth - 1));
      case 5: return C::at_least(static_cast<unsigned>(pick(3)), role(), concept_expr(depth - 1));
      default: return C::at_most(static_cast<unsigned>(pick(3)), role(), concept_expr(depth - 1));
    }
  }

  Axiom axiom(int depth) {
    switch (pick(12)) {
      case 0: return Axiom::equivalent(concept_expr(depth), concept_expr(depth));
      case 1: return Axiom::disjoint(concept_expr(depth), concept_expr(depth));
      case 2: return Axiom::subrole(role(), role());
      case 3: return Axiom::equivalent_roles(role(), role());
      case 4: return Axiom::inverse_roles(role(), role());
      case 5: return Axiom::transitive(role());
      case 6: return Axiom::domain(role(), concept_expr(depth));
      case 7: return Axiom::range(role(), concept_expr(depth));
      default: return Axiom::subclass(concept_expr(depth), concept_expr(depth));
    }
  }

  // Only the concept-axiom kinds, for tests that go through the tableau.
  Axiom concept_axiom(int depth) {
    switch (pick(6)) {
      case 0: return Axiom::equivalent(concept_expr(depth), concept_expr(depth));
      case 1: return Axiom::disjoint(concept_expr(depth), concept_expr(depth));
      default: return Axiom::subclass(concept_expr(depth), concept_expr(depth));
    }
  }

  Ontology ontology(std::size_t size, int depth, const std::string& name = "random") {
    Ontology o(name);
    while (o.size() < size) o.add(axiom(depth));
    return o;
  }

  Signature signature(const Signature& universe, double p = 0.5) {
    Signature s;
    for (const auto& c : universe.concepts)
      if (coin(p)) s.add(EntityKind::Concept, c);
    for (const auto& r : universe.roles)
      if (coin(p)) s.add(EntityKind::Role, r);
    return s;
  }

  Signature signature(double p = 0.5) {
    Signature universe;
    for (const auto& c : v_.concepts) universe.add(EntityKind::Concept, c);
    for (const auto& r : v_.roles) universe.add(EntityKind::Role, r);
    return signature(universe, p);
  }

  // Random interpretation of every name in `sig` over a domain of `size`.
  Interpretation interpretation(const Signature& sig, unsigned size) {
    Interpretation i(size);
    for (const auto& c : sig.concepts) i.set_concept(c, rng_() & i.domain());
    for (const auto& r : sig.roles) {
      auto& rel = i.role(r);
      for (unsigned x = 0; x < size; ++x)
        for (unsigned y = 0; y < size; ++y)
          if (coin(0.4)) rel.add(x, y);
    }
    for (const auto& a : sig.individuals) i.set_individual(a, static_cast<unsigned>(pick(size)));
    return i;
  }

 private:
  std::mt19937_64 rng_;
  Vocabulary v_;
};

// The textbook fixpoint: sweep over all axioms until nothing changes.
inline Ontology naive_module(const Ontology& o, const Signature& seed, LocalityFlavor flavor, bool refined = false) {
  Ontology m(o.name());
  Signature ext = seed;
  std::vector<bool> in(o.size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < o.size(); ++i) {
      if (in[i]) continue;
      bool local;
      if (is_syntactic(flavor)) {
        local = is_syntactically_local(o[i], ext, flavor, refined);
      } else {
        local = is_semantically_local(o[i], ext, flavor).is_local();
      }
      if (!local) {
        in[i] = true;
        ext.merge(signature_of(o[i]));
        changed = true;
      }
    }
  }
  for (std::size_t i = 0; i < o.size(); ++i)
    if (in[i]) m.add(o[i]);
  return m;
}

// Interprets the names missing from `m` as ∅ / element 0. Tableau models only
// mention names that survive simplification.
inline Interpretation complete(Interpretation m, const Signature& names) {
  for (const auto& c : names.concepts)
    if (!m.concept_ext.count(c)) m.set_concept(c, 0);
  for (const auto& r : names.roles) m.role(r);
  for (const auto& i : names.individuals)
    if (!m.individual_ext.count(i)) m.set_individual(i, 0);
  return m;
}

inline Ontology shuffled(const Ontology& o, std::mt19937_64& rng) {
  std::vector<Axiom> axioms = o.axioms();
  std::shuffle(axioms.begin(), axioms.end(), rng);
  return Ontology(o.name(), axioms);
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> corpus_files() {
  return {"animals.ofs", "inferred_view.ofs", "koala.ofs", "pizza_fragment.ofs", "tambis_fragment.ofs"};
}

inline Ontology load_fixture(const std::string& file) {
  auto r = parse_ontology(read_text(std::string(LOCALITY_CORPUS_DIR) + "/" + file));
  if (!r.ok()) throw std::runtime_error("cannot parse fixture " + file + ": " + r.errors.front().describe());
  return *r.value;
}

// Chain of n definitions A_i ⊑ ∃r_i.A_{i+1} plus noise, used for timing.
inline Ontology large_ontology(std::size_t axioms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  using C = ConceptExpr;
  const std::size_t concepts = axioms / 2 + 1, roles = 50;
  auto cname = [](std::size_t i) { return "A" + std::to_string(i); };
  auto rname = [](std::size_t i) { return "r" + std::to_string(i); };
  auto any = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  Ontology o("generated");
  while (o.size() < axioms) {
    const std::size_t a = any(concepts);
    switch (any(5)) {
      case 0:
      case 1: o.add(Axiom::subclass(C::name(cname(a)), C::name(cname(any(concepts))))); break;
      case 2: o.add(Axiom::subclass(C::name(cname(a)), C::exists(RoleExpr::named(rname(any(roles))), C::name(cname(any(concepts)))))); break;
      case 3:
        o.add(Axiom::equivalent(C::name(cname(a)), C::conjunction({C::name(cname(any(concepts))),
                                                                   C::forall(RoleExpr::named(rname(any(roles))), C::name(cname(any(concepts))))})));
        break;
      default: o.add(Axiom::disjoint(C::name(cname(a)), C::name(cname(any(concepts))))); break;
    }
  }
  return o;
}

}  // namespace testing_support
