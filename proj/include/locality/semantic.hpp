// Semantic (empty-set / full-domain) locality.
//
// For a fixed interpretation of the signature, the interpretation of every
// other symbol is forced: the empty set or relation for the bottom flavor,
// the whole domain or Δ×Δ for the top flavor. An axiom is therefore local
// iff the axiom obtained by substituting those constants is valid.
#pragma once

#include "locality/model.hpp"
#include "locality/normalize.hpp"
#include "locality/tableau.hpp"

#include <string>
#include <vector>

namespace locality {

struct Verdict {
  enum class Kind { Local, NonLocal, Unknown };

  Kind kind = Kind::Unknown;
  std::string reason;

  static Verdict local() { return {Kind::Local, {}}; }
  static Verdict non_local() { return {Kind::NonLocal, {}}; }
  static Verdict unknown(std::string why) { return {Kind::Unknown, std::move(why)}; }

  bool is_local() const { return kind == Kind::Local; }
  bool is_non_local() const { return kind == Kind::NonLocal; }
  bool is_unknown() const { return kind == Kind::Unknown; }
};

inline const char* to_string(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::Local: return "local";
    case Verdict::Kind::NonLocal: return "non-local";
    case Verdict::Kind::Unknown: return "unknown";
  }
  return "?";
}

enum class Tautology { True, False, Unknown };

// ---------------------------------------------------------------------------

inline RoleExpr substitute(const RoleExpr& r, const Signature& sig, bool bottom) {
  if (r.is_constant() || sig.has_role(r.name())) return r;
  return bottom ? RoleExpr::empty() : RoleExpr::universal();
}

inline ConceptExpr substitute(const ConceptExpr& c, const Signature& sig, bool bottom) {
  using K = ConceptExpr::Kind;
  using C = ConceptExpr;
  auto map = [&](std::span<const ConceptExpr> ops) {
    std::vector<ConceptExpr> out;
    out.reserve(ops.size());
    for (const auto& op : ops) out.push_back(substitute(op, sig, bottom));
    return out;
  };
  switch (c.kind()) {
    case K::Top:
    case K::Bottom:
    case K::OneOf: return c;
    case K::Name:
      if (sig.has_concept(c.symbol())) return c;
      return bottom ? C::bottom() : C::top();
    case K::Not: return C::negation(substitute(c.filler(), sig, bottom));
    case K::And: return C::conjunction(map(c.operands()));
    case K::Or: return C::disjunction(map(c.operands()));
    case K::Exists: return C::exists(substitute(c.role(), sig, bottom), substitute(c.filler(), sig, bottom));
    case K::ForAll: return C::forall(substitute(c.role(), sig, bottom), substitute(c.filler(), sig, bottom));
    case K::AtLeast:
      return C::at_least(c.cardinality(), substitute(c.role(), sig, bottom), substitute(c.filler(), sig, bottom));
    case K::AtMost:
      return C::at_most(c.cardinality(), substitute(c.role(), sig, bottom), substitute(c.filler(), sig, bottom));
  }
  return c;
}

// Replaces every concept name outside `sig` by ⊥ (SemBot) or ⊤ (SemTop) and
// every role outside `sig` by the empty or the universal role. Syntactic
// flavors map to their semantic counterparts.
inline Axiom substitute(const Axiom& a, const Signature& sig, LocalityFlavor flavor) {
  using K = Axiom::Kind;
  const bool bottom = is_bottom(flavor);
  auto cs = [&](const ConceptExpr& c) { return substitute(c, sig, bottom); };
  auto rs = [&](const RoleExpr& r) { return substitute(r, sig, bottom); };
  switch (a.kind()) {
    case K::SubClassOf: return Axiom::subclass(cs(a.lhs()), cs(a.rhs()));
    case K::EquivalentClasses: return Axiom::equivalent(cs(a.lhs()), cs(a.rhs()));
    case K::DisjointClasses: return Axiom::disjoint(cs(a.lhs()), cs(a.rhs()));
    case K::SubRoleOf: return Axiom::subrole(rs(a.first_role()), rs(a.second_role()));
    case K::EquivalentRoles: return Axiom::equivalent_roles(rs(a.first_role()), rs(a.second_role()));
    case K::InverseRoles: return Axiom::inverse_roles(rs(a.first_role()), rs(a.second_role()));
    case K::Transitive: return Axiom::transitive(rs(a.first_role()));
    case K::Domain: return Axiom::domain(rs(a.first_role()), cs(a.lhs()));
    case K::Range: return Axiom::range(rs(a.first_role()), cs(a.lhs()));
  }
  return a;
}

// Constant propagation over ⊤, ⊥ and the empty role; ≥1 and ≤0 become ∃ and
// ∀. The universal role is left for the reasoner.
inline ConceptExpr simplify(const ConceptExpr& c) {
  using K = ConceptExpr::Kind;
  using C = ConceptExpr;
  switch (c.kind()) {
    case K::Top:
    case K::Bottom:
    case K::Name:
    case K::OneOf: return c;
    case K::Not: {
      const C inner = simplify(c.filler());
      if (inner.is(K::Top)) return C::bottom();
      if (inner.is(K::Bottom)) return C::top();
      if (inner.is(K::Not)) return inner.filler();
      return C::negation(inner);
    }
    case K::And:
    case K::Or: {
      const bool conj = c.is(K::And);
      const K absorbing = conj ? K::Bottom : K::Top;
      const K neutral = conj ? K::Top : K::Bottom;
      std::vector<C> ops;
      for (const auto& op : c.operands()) {
        C s = simplify(op);
        if (s.is(absorbing)) return s;
        if (s.is(neutral)) continue;
        if (std::find(ops.begin(), ops.end(), s) == ops.end()) ops.push_back(std::move(s));
      }
      if (ops.empty()) return conj ? C::top() : C::bottom();
      return conj ? C::conjunction(std::move(ops)) : C::disjunction(std::move(ops));
    }
    default: break;
  }
  const C filler = simplify(c.filler());
  const bool empty_role = c.role().kind() == RoleExpr::Kind::Empty;
  const unsigned n = c.cardinality();
  switch (c.kind()) {
    case K::Exists:
      if (empty_role || filler.is(K::Bottom)) return C::bottom();
      return C::exists(c.role(), filler);
    case K::ForAll:
      if (empty_role || filler.is(K::Top)) return C::top();
      return C::forall(c.role(), filler);
    case K::AtLeast:
      if (n == 0) return C::top();
      if (empty_role || filler.is(K::Bottom)) return C::bottom();
      if (n == 1) return C::exists(c.role(), filler);
      return C::at_least(n, c.role(), filler);
    case K::AtMost:
      if (empty_role || filler.is(K::Bottom)) return C::top();
      if (n == 0) return simplify(C::forall(c.role(), nnf_negated(filler)));
      return C::at_most(n, c.role(), filler);
    default: break;
  }
  return c;
}

// Validity of a concept axiom by refuting the satisfiability of a
// counterexample concept. Role axioms are handled by
// is_semantically_local.
inline Tautology is_tautology(const Axiom& a, const Budget& budget = {}) {
  using C = ConceptExpr;
  auto subsumed = [&](const C& sub, const C& sup) {
    const C witness = simplify(nnf(C::conjunction({sub, C::negation(sup)})));
    if (witness.is(C::Kind::Bottom)) return Tautology::True;
    if (witness.is(C::Kind::Top)) return Tautology::False;
    const SatResult r = is_satisfiable(witness, budget);
    if (r.unsatisfiable()) return Tautology::True;
    if (r.satisfiable()) return Tautology::False;
    return Tautology::Unknown;
  };
  switch (a.kind()) {
    case Axiom::Kind::SubClassOf: return subsumed(a.lhs(), a.rhs());
    case Axiom::Kind::EquivalentClasses: {
      const Tautology forward = subsumed(a.lhs(), a.rhs());
      if (forward == Tautology::False) return forward;
      const Tautology backward = subsumed(a.rhs(), a.lhs());
      if (backward == Tautology::False) return backward;
      return forward == Tautology::True && backward == Tautology::True ? Tautology::True : Tautology::Unknown;
    }
    default: {
      for (const auto& n : normalize_axiom(a))
        if (n.kind() != a.kind()) return is_tautology(n, budget);
      return Tautology::Unknown;
    }
  }
}

inline Verdict is_semantically_local(const Axiom& a, const Signature& sig, LocalityFlavor flavor,
                                     const Budget& budget = {}) {
  using K = Axiom::Kind;
  const Axiom s = substitute(a, sig, flavor);
  auto verdict = [](bool valid) { return valid ? Verdict::local() : Verdict::non_local(); };
  auto is = [](const RoleExpr& r, RoleExpr::Kind k) { return r.kind() == k; };
  const RoleExpr& r = s.first_role();
  const RoleExpr& q = s.second_role();
  switch (s.kind()) {
    case K::SubRoleOf:
      return verdict(is(r, RoleExpr::Kind::Empty) || is(q, RoleExpr::Kind::Universal) ||
                     normalize_role(r) == normalize_role(q));
    case K::EquivalentRoles: return verdict(normalize_role(r) == normalize_role(q));
    case K::InverseRoles: return verdict(normalize_role(inverse(r)) == normalize_role(q));
    case K::Transitive: return verdict(r.is_constant());
    default: break;
  }
  switch (is_tautology(s, budget)) {
    case Tautology::True: return Verdict::local();
    case Tautology::False: return Verdict::non_local();
    case Tautology::Unknown: break;
  }
  return Verdict::unknown("reasoner gave no answer within the budget or fragment");
}

}  // namespace locality
