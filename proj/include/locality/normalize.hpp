// Signatures of syntax objects and the normal forms shared by the checkers.
#pragma once

#include "locality/model.hpp"

#include <vector>

namespace locality {

inline void collect_signature(const RoleExpr& r, Signature& out) {
  if (!r.is_constant()) out.roles.insert(r.name());
}

inline void collect_signature(const ConceptExpr& c, Signature& out) {
  using K = ConceptExpr::Kind;
  switch (c.kind()) {
    case K::Top:
    case K::Bottom: return;
    case K::Name: out.concepts.insert(c.symbol()); return;
    case K::OneOf: out.individuals.insert(c.symbol()); return;
    default: break;
  }
  if (c.has_role()) collect_signature(c.role(), out);
  for (const auto& op : c.operands()) collect_signature(op, out);
}

inline void collect_signature(const Axiom& a, Signature& out) {
  using K = Axiom::Kind;
  switch (a.kind()) {
    case K::SubClassOf:
    case K::EquivalentClasses:
    case K::DisjointClasses:
      collect_signature(a.lhs(), out);
      collect_signature(a.rhs(), out);
      return;
    case K::Domain:
    case K::Range:
      collect_signature(a.first_role(), out);
      collect_signature(a.lhs(), out);
      return;
    case K::Transitive: collect_signature(a.first_role(), out); return;
    default:
      collect_signature(a.first_role(), out);
      collect_signature(a.second_role(), out);
  }
}

template <typename T>
Signature signature_of(const T& x) {
  Signature s;
  collect_signature(x, s);
  return s;
}

inline Signature signature_of(const Ontology& o) {
  Signature s;
  for (const auto& a : o.axioms()) collect_signature(a, s);
  return s;
}

inline RoleExpr normalize_role(const RoleExpr& r) {
  // RoleExpr cannot nest inverses, so construction already normalizes.
  return r;
}

// Negation normal form: negation only in front of names and nominals.
inline ConceptExpr nnf(const ConceptExpr& c);

inline ConceptExpr nnf_negated(const ConceptExpr& c) {
  using K = ConceptExpr::Kind;
  using C = ConceptExpr;
  auto map = [](std::span<const ConceptExpr> ops) {
    std::vector<ConceptExpr> out;
    out.reserve(ops.size());
    for (const auto& op : ops) out.push_back(nnf_negated(op));
    return out;
  };
  switch (c.kind()) {
    case K::Top: return C::bottom();
    case K::Bottom: return C::top();
    case K::Name:
    case K::OneOf: return C::negation(c);
    case K::Not: return nnf(c.filler());
    case K::And: return C::disjunction(map(c.operands()));
    case K::Or: return C::conjunction(map(c.operands()));
    case K::Exists: return C::forall(c.role(), nnf_negated(c.filler()));
    case K::ForAll: return C::exists(c.role(), nnf_negated(c.filler()));
    case K::AtLeast:
      if (c.cardinality() == 0) return C::bottom();
      return C::at_most(c.cardinality() - 1, c.role(), nnf(c.filler()));
    case K::AtMost: return C::at_least(c.cardinality() + 1, c.role(), nnf(c.filler()));
  }
  return c;
}

inline ConceptExpr nnf(const ConceptExpr& c) {
  using K = ConceptExpr::Kind;
  using C = ConceptExpr;
  auto map = [](std::span<const ConceptExpr> ops) {
    std::vector<ConceptExpr> out;
    out.reserve(ops.size());
    for (const auto& op : ops) out.push_back(nnf(op));
    return out;
  };
  switch (c.kind()) {
    case K::Top:
    case K::Bottom:
    case K::Name:
    case K::OneOf: return c;
    case K::Not: return nnf_negated(c.filler());
    case K::And: return C::conjunction(map(c.operands()));
    case K::Or: return C::disjunction(map(c.operands()));
    case K::Exists: return C::exists(c.role(), nnf(c.filler()));
    case K::ForAll: return C::forall(c.role(), nnf(c.filler()));
    case K::AtLeast: return C::at_least(c.cardinality(), c.role(), nnf(c.filler()));
    case K::AtMost: return C::at_most(c.cardinality(), c.role(), nnf(c.filler()));
  }
  return c;
}

// Rewrites the derived axiom forms into GCIs. Equivalences stay binary
// equivalences; everything else passes through.
inline std::vector<Axiom> normalize_axiom(const Axiom& a) {
  using K = Axiom::Kind;
  using C = ConceptExpr;
  switch (a.kind()) {
    case K::Domain: return {Axiom::subclass(C::exists(a.first_role(), C::top()), a.lhs())};
    case K::Range: return {Axiom::subclass(C::top(), C::forall(a.first_role(), a.lhs()))};
    case K::DisjointClasses: return {Axiom::subclass(C::conjunction({a.lhs(), a.rhs()}), C::bottom())};
    default: return {a};
  }
}

inline Ontology normalize(const Ontology& o) {
  Ontology out(o.name());
  for (const auto& a : o.axioms())
    for (const auto& n : normalize_axiom(a)) out.add(n);
  for (auto k : {EntityKind::Concept, EntityKind::Role, EntityKind::Individual})
    for (const auto& n : o.declarations().names(k)) out.declare(k, n);
  return out;
}

}  // namespace locality
