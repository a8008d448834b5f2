// Syntax model for the description-logic fragment: roles, concepts, axioms,
// signatures and ontologies. All values are immutable once built and may be
// shared freely across threads.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace locality {

namespace detail {

inline std::size_t hash_combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::strong_ordering compare_strings(const std::string& a, const std::string& b) {
  const int c = a.compare(b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Roles

class RoleExpr {
 public:
  enum class Kind : std::uint8_t { Name, Inverse, Empty, Universal };

  RoleExpr() = default;

  static RoleExpr named(std::string name) { return RoleExpr(Kind::Name, std::move(name)); }
  static RoleExpr inverse_of(std::string name) { return RoleExpr(Kind::Inverse, std::move(name)); }
  static RoleExpr empty() { return RoleExpr(Kind::Empty, {}); }
  static RoleExpr universal() { return RoleExpr(Kind::Universal, {}); }

  Kind kind() const noexcept { return kind_; }
  // Underlying role name; empty for the two constants.
  const std::string& name() const noexcept { return name_; }
  bool is_constant() const noexcept { return kind_ == Kind::Empty || kind_ == Kind::Universal; }

  std::size_t hash() const noexcept {
    return detail::hash_combine(static_cast<std::size_t>(kind_), std::hash<std::string>{}(name_));
  }

  friend bool operator==(const RoleExpr& a, const RoleExpr& b) {
    return a.kind_ == b.kind_ && a.name_ == b.name_;
  }
  friend std::strong_ordering operator<=>(const RoleExpr& a, const RoleExpr& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    return detail::compare_strings(a.name_, b.name_);
  }

 private:
  RoleExpr(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  Kind kind_ = Kind::Empty;
  std::string name_;
};

// inv(inv(P)) = P; the constants are their own inverses.
inline RoleExpr inverse(const RoleExpr& r) {
  switch (r.kind()) {
    case RoleExpr::Kind::Name: return RoleExpr::inverse_of(r.name());
    case RoleExpr::Kind::Inverse: return RoleExpr::named(r.name());
    default: return r;
  }
}

// ---------------------------------------------------------------------------
// Concepts

class ConceptExpr {
 public:
  enum class Kind : std::uint8_t {
    Top, Bottom, Name, Not, And, Or, Exists, ForAll, AtLeast, AtMost, OneOf
  };

  // Default-constructed concept is Top.
  ConceptExpr() : ConceptExpr(top()) {}

  static ConceptExpr top() {
    static const ConceptExpr t(make(Kind::Top, {}, {}, 0, {}));
    return t;
  }
  static ConceptExpr bottom() {
    static const ConceptExpr b(make(Kind::Bottom, {}, {}, 0, {}));
    return b;
  }
  static ConceptExpr name(std::string n) { return ConceptExpr(make(Kind::Name, std::move(n), {}, 0, {})); }
  static ConceptExpr one_of(std::string individual) {
    return ConceptExpr(make(Kind::OneOf, std::move(individual), {}, 0, {}));
  }
  static ConceptExpr negation(ConceptExpr c) { return ConceptExpr(make(Kind::Not, {}, {}, 0, {std::move(c)})); }

  // Nested conjunctions are flattened; a single operand collapses to itself.
  static ConceptExpr conjunction(std::vector<ConceptExpr> ops) { return nary(Kind::And, std::move(ops)); }
  static ConceptExpr disjunction(std::vector<ConceptExpr> ops) { return nary(Kind::Or, std::move(ops)); }

  static ConceptExpr exists(RoleExpr r, ConceptExpr c) {
    return ConceptExpr(make(Kind::Exists, {}, std::move(r), 0, {std::move(c)}));
  }
  static ConceptExpr forall(RoleExpr r, ConceptExpr c) {
    return ConceptExpr(make(Kind::ForAll, {}, std::move(r), 0, {std::move(c)}));
  }
  static ConceptExpr at_least(unsigned n, RoleExpr r, ConceptExpr c) {
    return ConceptExpr(make(Kind::AtLeast, {}, std::move(r), n, {std::move(c)}));
  }
  static ConceptExpr at_most(unsigned n, RoleExpr r, ConceptExpr c) {
    return ConceptExpr(make(Kind::AtMost, {}, std::move(r), n, {std::move(c)}));
  }
  // "Exactly n" is not a constructor of its own.
  static ConceptExpr exactly(unsigned n, const RoleExpr& r, const ConceptExpr& c) {
    return conjunction({at_least(n, r, c), at_most(n, r, c)});
  }

  Kind kind() const noexcept { return node_->kind; }
  bool is(Kind k) const noexcept { return node_->kind == k; }
  // Concept name for Name, individual for OneOf.
  const std::string& symbol() const noexcept { return node_->symbol; }
  const RoleExpr& role() const noexcept { return node_->role; }
  unsigned cardinality() const noexcept { return node_->n; }
  std::span<const ConceptExpr> operands() const noexcept { return node_->children; }
  // Operand of Not and filler of the role restrictions.
  const ConceptExpr& filler() const noexcept { return node_->children.front(); }
  bool has_role() const noexcept {
    const auto k = kind();
    return k == Kind::Exists || k == Kind::ForAll || k == Kind::AtLeast || k == Kind::AtMost;
  }

  std::size_t hash() const noexcept { return node_->hash; }

  friend bool operator==(const ConceptExpr& a, const ConceptExpr& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->hash != b.node_->hash) return false;
    return (a <=> b) == 0;
  }
  friend std::strong_ordering operator<=>(const ConceptExpr& a, const ConceptExpr& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (auto c = x.kind <=> y.kind; c != 0) return c;
    if (auto c = x.n <=> y.n; c != 0) return c;
    if (auto c = detail::compare_strings(x.symbol, y.symbol); c != 0) return c;
    if (auto c = x.role <=> y.role; c != 0) return c;
    if (auto c = x.children.size() <=> y.children.size(); c != 0) return c;
    for (std::size_t i = 0; i < x.children.size(); ++i) {
      if (auto c = x.children[i] <=> y.children[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  struct Node {
    Kind kind;
    std::string symbol;
    RoleExpr role;
    unsigned n;
    std::vector<ConceptExpr> children;
    std::size_t hash;
  };

  explicit ConceptExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static std::shared_ptr<const Node> make(Kind kind, std::string symbol, RoleExpr role, unsigned n,
                                          std::vector<ConceptExpr> children) {
    std::size_t h = static_cast<std::size_t>(kind) * 1315423911u;
    h = detail::hash_combine(h, std::hash<std::string>{}(symbol));
    h = detail::hash_combine(h, role.hash());
    h = detail::hash_combine(h, n);
    for (const auto& c : children) h = detail::hash_combine(h, c.hash());
    return std::make_shared<const Node>(
        Node{kind, std::move(symbol), std::move(role), n, std::move(children), h});
  }

  static ConceptExpr nary(Kind kind, std::vector<ConceptExpr> ops) {
    if (ops.empty()) throw std::invalid_argument("empty conjunction/disjunction");
    std::vector<ConceptExpr> flat;
    flat.reserve(ops.size());
    for (auto& op : ops) {
      if (op.kind() == kind) {
        flat.insert(flat.end(), op.operands().begin(), op.operands().end());
      } else {
        flat.push_back(std::move(op));
      }
    }
    if (flat.size() == 1) return flat.front();
    return ConceptExpr(make(kind, {}, {}, 0, std::move(flat)));
  }

  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Axioms

class Axiom {
 public:
  enum class Kind : std::uint8_t {
    SubClassOf,
    EquivalentClasses,
    SubRoleOf,
    EquivalentRoles,
    InverseRoles,
    Transitive,
    Domain,
    Range,
    DisjointClasses
  };

  static Axiom subclass(ConceptExpr sub, ConceptExpr sup) {
    return Axiom(Kind::SubClassOf, std::move(sub), std::move(sup), {}, {});
  }
  static Axiom equivalent(ConceptExpr a, ConceptExpr b) {
    return Axiom(Kind::EquivalentClasses, std::move(a), std::move(b), {}, {});
  }
  static Axiom disjoint(ConceptExpr a, ConceptExpr b) {
    return Axiom(Kind::DisjointClasses, std::move(a), std::move(b), {}, {});
  }
  static Axiom subrole(RoleExpr sub, RoleExpr sup) { return Axiom(Kind::SubRoleOf, {}, {}, std::move(sub), std::move(sup)); }
  static Axiom equivalent_roles(RoleExpr a, RoleExpr b) {
    return Axiom(Kind::EquivalentRoles, {}, {}, std::move(a), std::move(b));
  }
  static Axiom inverse_roles(RoleExpr a, RoleExpr b) {
    return Axiom(Kind::InverseRoles, {}, {}, std::move(a), std::move(b));
  }
  static Axiom transitive(RoleExpr r) { return Axiom(Kind::Transitive, {}, {}, std::move(r), {}); }
  static Axiom domain(RoleExpr r, ConceptExpr c) { return Axiom(Kind::Domain, std::move(c), {}, std::move(r), {}); }
  static Axiom range(RoleExpr r, ConceptExpr c) { return Axiom(Kind::Range, std::move(c), {}, std::move(r), {}); }

  Kind kind() const noexcept { return kind_; }
  bool is_concept_axiom() const noexcept {
    return kind_ == Kind::SubClassOf || kind_ == Kind::EquivalentClasses || kind_ == Kind::DisjointClasses;
  }
  bool is_role_axiom() const noexcept {
    return kind_ == Kind::SubRoleOf || kind_ == Kind::EquivalentRoles || kind_ == Kind::InverseRoles ||
           kind_ == Kind::Transitive;
  }

  // Concept operands: (sub, sup) for SubClassOf, the two sides for
  // EquivalentClasses/DisjointClasses, the filler for Domain/Range in lhs().
  const ConceptExpr& lhs() const noexcept { return lhs_; }
  const ConceptExpr& rhs() const noexcept { return rhs_; }
  // Role operands: (sub, sup), the two sides, or the single role of
  // Transitive/Domain/Range in first_role().
  const RoleExpr& first_role() const noexcept { return r1_; }
  const RoleExpr& second_role() const noexcept { return r2_; }

  std::size_t hash() const noexcept {
    std::size_t h = static_cast<std::size_t>(kind_);
    h = detail::hash_combine(h, lhs_.hash());
    h = detail::hash_combine(h, rhs_.hash());
    h = detail::hash_combine(h, r1_.hash());
    return detail::hash_combine(h, r2_.hash());
  }

  friend bool operator==(const Axiom& a, const Axiom& b) {
    return a.kind_ == b.kind_ && a.r1_ == b.r1_ && a.r2_ == b.r2_ && a.lhs_ == b.lhs_ && a.rhs_ == b.rhs_;
  }
  friend std::strong_ordering operator<=>(const Axiom& a, const Axiom& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (auto c = a.lhs_ <=> b.lhs_; c != 0) return c;
    if (auto c = a.rhs_ <=> b.rhs_; c != 0) return c;
    if (auto c = a.r1_ <=> b.r1_; c != 0) return c;
    return a.r2_ <=> b.r2_;
  }

 private:
  Axiom(Kind kind, ConceptExpr lhs, ConceptExpr rhs, RoleExpr r1, RoleExpr r2)
      : kind_(kind), lhs_(std::move(lhs)), rhs_(std::move(rhs)), r1_(std::move(r1)), r2_(std::move(r2)) {}

  Kind kind_;
  ConceptExpr lhs_;
  ConceptExpr rhs_;
  RoleExpr r1_;
  RoleExpr r2_;
};

struct AxiomHash {
  std::size_t operator()(const Axiom& a) const noexcept { return a.hash(); }
};

// ---------------------------------------------------------------------------
// Signatures

enum class EntityKind : std::uint8_t { Concept, Role, Individual };

struct Signature {
  std::set<std::string> concepts;
  std::set<std::string> roles;
  std::set<std::string> individuals;

  bool has_concept(const std::string& n) const { return concepts.count(n) != 0; }
  bool has_role(const std::string& n) const { return roles.count(n) != 0; }
  bool has_individual(const std::string& n) const { return individuals.count(n) != 0; }

  const std::set<std::string>& names(EntityKind k) const {
    switch (k) {
      case EntityKind::Concept: return concepts;
      case EntityKind::Role: return roles;
      default: return individuals;
    }
  }
  std::set<std::string>& names(EntityKind k) {
    return const_cast<std::set<std::string>&>(std::as_const(*this).names(k));
  }

  bool add(EntityKind k, const std::string& n) { return names(k).insert(n).second; }

  // Number of terms (concept and role names).
  std::size_t term_count() const noexcept { return concepts.size() + roles.size(); }
  bool empty() const noexcept { return concepts.empty() && roles.empty() && individuals.empty(); }

  void merge(const Signature& other) {
    concepts.insert(other.concepts.begin(), other.concepts.end());
    roles.insert(other.roles.begin(), other.roles.end());
    individuals.insert(other.individuals.begin(), other.individuals.end());
  }

  bool includes(const Signature& other) const {
    return std::includes(concepts.begin(), concepts.end(), other.concepts.begin(), other.concepts.end()) &&
           std::includes(roles.begin(), roles.end(), other.roles.begin(), other.roles.end()) &&
           std::includes(individuals.begin(), individuals.end(), other.individuals.begin(),
                         other.individuals.end());
  }

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature operator|(Signature a, const Signature& b) {
  a.merge(b);
  return a;
}

// ---------------------------------------------------------------------------
// Locality flavors

enum class LocalityFlavor : std::uint8_t { SynBot, SynTop, SemBot, SemTop };

inline bool is_syntactic(LocalityFlavor f) { return f == LocalityFlavor::SynBot || f == LocalityFlavor::SynTop; }
inline bool is_bottom(LocalityFlavor f) { return f == LocalityFlavor::SynBot || f == LocalityFlavor::SemBot; }

inline const char* to_string(LocalityFlavor f) {
  switch (f) {
    case LocalityFlavor::SynBot: return "bot";
    case LocalityFlavor::SynTop: return "top";
    case LocalityFlavor::SemBot: return "sem-bot";
    case LocalityFlavor::SemTop: return "sem-top";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Ontologies

// Ordered axiom list without duplicates plus the declared entities. Equality
// compares the name and the axiom list; declarations are metadata.
class Ontology {
 public:
  Ontology() = default;
  explicit Ontology(std::string name) : name_(std::move(name)) {}
  Ontology(std::string name, std::initializer_list<Axiom> axioms) : name_(std::move(name)) {
    for (const auto& a : axioms) add(a);
  }
  Ontology(std::string name, std::span<const Axiom> axioms) : name_(std::move(name)) {
    for (const auto& a : axioms) add(a);
  }

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  const std::vector<Axiom>& axioms() const noexcept { return axioms_; }
  std::size_t size() const noexcept { return axioms_.size(); }
  bool empty() const noexcept { return axioms_.empty(); }
  const Axiom& operator[](std::size_t i) const { return axioms_[i]; }

  // Returns false when a structurally identical axiom is already present.
  bool add(const Axiom& a) {
    if (!index_.insert(a).second) return false;
    axioms_.push_back(a);
    return true;
  }
  bool contains(const Axiom& a) const { return index_.count(a) != 0; }

  const Signature& declarations() const noexcept { return declarations_; }
  void declare(EntityKind k, const std::string& n) { declarations_.add(k, n); }

  friend bool operator==(const Ontology& a, const Ontology& b) {
    return a.name_ == b.name_ && a.axioms_ == b.axioms_;
  }

 private:
  std::string name_;
  std::vector<Axiom> axioms_;
  std::unordered_set<Axiom, AxiomHash> index_;
  Signature declarations_;
};

// True when every axiom of `sub` also occurs in `super`.
inline bool is_subset(const Ontology& sub, const Ontology& super) {
  return std::all_of(sub.axioms().begin(), sub.axioms().end(), [&](const Axiom& a) { return super.contains(a); });
}

// Same axioms regardless of order.
inline bool same_axioms(const Ontology& a, const Ontology& b) {
  return a.size() == b.size() && is_subset(a, b);
}

// ---------------------------------------------------------------------------
// Plain DL notation, used for diagnostics and traces.

inline std::string to_string(const RoleExpr& r) {
  switch (r.kind()) {
    case RoleExpr::Kind::Name: return r.name();
    case RoleExpr::Kind::Inverse: return r.name() + "⁻";
    case RoleExpr::Kind::Empty: return "∅r";
    case RoleExpr::Kind::Universal: return "Ur";
  }
  return "?";
}

inline std::string to_string(const ConceptExpr& c) {
  using K = ConceptExpr::Kind;
  auto join = [](std::span<const ConceptExpr> ops, const char* sep) {
    std::string s = "(";
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (i) s += sep;
      s += to_string(ops[i]);
    }
    return s + ")";
  };
  switch (c.kind()) {
    case K::Top: return "⊤";
    case K::Bottom: return "⊥";
    case K::Name: return c.symbol();
    case K::OneOf: return "{" + c.symbol() + "}";
    case K::Not: return "¬" + to_string(c.filler());
    case K::And: return join(c.operands(), " ⊓ ");
    case K::Or: return join(c.operands(), " ⊔ ");
    case K::Exists: return "∃" + to_string(c.role()) + "." + to_string(c.filler());
    case K::ForAll: return "∀" + to_string(c.role()) + "." + to_string(c.filler());
    case K::AtLeast:
      return "≥" + std::to_string(c.cardinality()) + " " + to_string(c.role()) + "." + to_string(c.filler());
    case K::AtMost:
      return "≤" + std::to_string(c.cardinality()) + " " + to_string(c.role()) + "." + to_string(c.filler());
  }
  return "?";
}

inline std::string to_string(const Axiom& a) {
  using K = Axiom::Kind;
  switch (a.kind()) {
    case K::SubClassOf: return to_string(a.lhs()) + " ⊑ " + to_string(a.rhs());
    case K::EquivalentClasses: return to_string(a.lhs()) + " ≡ " + to_string(a.rhs());
    case K::DisjointClasses: return "Disjoint(" + to_string(a.lhs()) + ", " + to_string(a.rhs()) + ")";
    case K::SubRoleOf: return to_string(a.first_role()) + " ⊑ " + to_string(a.second_role());
    case K::EquivalentRoles: return to_string(a.first_role()) + " ≡ " + to_string(a.second_role());
    case K::InverseRoles: return "Inverse(" + to_string(a.first_role()) + ", " + to_string(a.second_role()) + ")";
    case K::Transitive: return "Trans(" + to_string(a.first_role()) + ")";
    case K::Domain: return "Domain(" + to_string(a.first_role()) + ", " + to_string(a.lhs()) + ")";
    case K::Range: return "Range(" + to_string(a.first_role()) + ", " + to_string(a.lhs()) + ")";
  }
  return "?";
}

}  // namespace locality

template <>
struct std::hash<locality::ConceptExpr> {
  std::size_t operator()(const locality::ConceptExpr& c) const noexcept { return c.hash(); }
};
template <>
struct std::hash<locality::RoleExpr> {
  std::size_t operator()(const locality::RoleExpr& r) const noexcept { return r.hash(); }
};
