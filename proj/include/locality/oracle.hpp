// Brute-force model theory over small finite interpretations. This is the
// independent reference the tableau and the semantic checker are tested
// against: it evaluates concepts directly from the set semantics and finds
// countermodels by exhaustive enumeration.
#pragma once

#include "locality/interpretation.hpp"
#include "locality/model.hpp"
#include "locality/normalize.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace locality {

class MissingNameError : public std::out_of_range {
 public:
  explicit MissingNameError(const std::string& name)
      : std::out_of_range("name not interpreted: " + name), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

namespace oracle_detail {

// Names resolved to dense slots so the enumerator can swap extensions
// without rebuilding maps.
struct Frame {
  unsigned size = 1;
  std::vector<ElementSet> concepts;
  std::vector<std::vector<ElementSet>> roles;
  std::vector<unsigned> individuals;
};

struct SlotTable {
  std::map<std::string, int> concepts;
  std::map<std::string, int> roles;
  std::map<std::string, int> individuals;

  static int lookup(const std::map<std::string, int>& m, const std::string& n) {
    auto it = m.find(n);
    if (it == m.end()) throw MissingNameError(n);
    return it->second;
  }
};

inline std::vector<ElementSet> role_rows(const RoleExpr& r, const SlotTable& t, const Frame& f) {
  switch (r.kind()) {
    case RoleExpr::Kind::Empty: return std::vector<ElementSet>(f.size, 0);
    case RoleExpr::Kind::Universal: return std::vector<ElementSet>(f.size, full_set(f.size));
    case RoleExpr::Kind::Name: return f.roles[SlotTable::lookup(t.roles, r.name())];
    case RoleExpr::Kind::Inverse: {
      const auto& rows = f.roles[SlotTable::lookup(t.roles, r.name())];
      std::vector<ElementSet> inv(f.size, 0);
      for (unsigned x = 0; x < f.size; ++x)
        for (unsigned y = 0; y < f.size; ++y)
          if (contains(rows[x], y)) inv[y] |= ElementSet{1} << x;
      return inv;
    }
  }
  return {};
}

inline ElementSet eval(const ConceptExpr& c, const SlotTable& t, const Frame& f) {
  using K = ConceptExpr::Kind;
  const ElementSet all = full_set(f.size);
  switch (c.kind()) {
    case K::Top: return all;
    case K::Bottom: return 0;
    case K::Name: return f.concepts[SlotTable::lookup(t.concepts, c.symbol())];
    case K::OneOf: return ElementSet{1} << f.individuals[SlotTable::lookup(t.individuals, c.symbol())];
    case K::Not: return all & ~eval(c.filler(), t, f);
    case K::And: {
      ElementSet s = all;
      for (const auto& op : c.operands()) s &= eval(op, t, f);
      return s;
    }
    case K::Or: {
      ElementSet s = 0;
      for (const auto& op : c.operands()) s |= eval(op, t, f);
      return s;
    }
    default: break;
  }
  const ElementSet filler = eval(c.filler(), t, f);
  const auto rows = role_rows(c.role(), t, f);
  ElementSet out = 0;
  for (unsigned x = 0; x < f.size; ++x) {
    const ElementSet succ = rows[x];
    bool in = false;
    switch (c.kind()) {
      case K::Exists: in = (succ & filler) != 0; break;
      case K::ForAll: in = (succ & ~filler) == 0; break;
      case K::AtLeast: in = cardinality(succ & filler) >= c.cardinality(); break;
      case K::AtMost: in = cardinality(succ & filler) <= c.cardinality(); break;
      default: break;
    }
    if (in) out |= ElementSet{1} << x;
  }
  return out;
}

inline bool holds(const Axiom& a, const SlotTable& t, const Frame& f) {
  using K = Axiom::Kind;
  switch (a.kind()) {
    case K::SubClassOf: return (eval(a.lhs(), t, f) & ~eval(a.rhs(), t, f)) == 0;
    case K::EquivalentClasses: return eval(a.lhs(), t, f) == eval(a.rhs(), t, f);
    case K::DisjointClasses: return (eval(a.lhs(), t, f) & eval(a.rhs(), t, f)) == 0;
    case K::Domain: {
      const auto rows = role_rows(a.first_role(), t, f);
      const ElementSet c = eval(a.lhs(), t, f);
      for (unsigned x = 0; x < f.size; ++x)
        if (rows[x] != 0 && !contains(c, x)) return false;
      return true;
    }
    case K::Range: {
      const auto rows = role_rows(a.first_role(), t, f);
      const ElementSet c = eval(a.lhs(), t, f);
      for (unsigned x = 0; x < f.size; ++x)
        if ((rows[x] & ~c) != 0) return false;
      return true;
    }
    case K::SubRoleOf: {
      const auto r = role_rows(a.first_role(), t, f);
      const auto s = role_rows(a.second_role(), t, f);
      for (unsigned x = 0; x < f.size; ++x)
        if ((r[x] & ~s[x]) != 0) return false;
      return true;
    }
    case K::EquivalentRoles: return role_rows(a.first_role(), t, f) == role_rows(a.second_role(), t, f);
    case K::InverseRoles:
      return role_rows(inverse(a.first_role()), t, f) == role_rows(a.second_role(), t, f);
    case K::Transitive: {
      const auto r = role_rows(a.first_role(), t, f);
      for (unsigned x = 0; x < f.size; ++x)
        for (unsigned y = 0; y < f.size; ++y)
          if (contains(r[x], y) && (r[y] & ~r[x]) != 0) return false;
      return true;
    }
  }
  return false;
}

inline void bind(const Interpretation& i, const Signature& names, SlotTable& t, Frame& f) {
  f.size = i.domain_size;
  for (const auto& n : names.concepts) {
    auto it = i.concept_ext.find(n);
    if (it == i.concept_ext.end()) throw MissingNameError(n);
    t.concepts[n] = static_cast<int>(f.concepts.size());
    f.concepts.push_back(it->second & full_set(f.size));
  }
  for (const auto& n : names.roles) {
    auto it = i.role_ext.find(n);
    if (it == i.role_ext.end()) throw MissingNameError(n);
    t.roles[n] = static_cast<int>(f.roles.size());
    std::vector<ElementSet> rows(f.size, 0);
    for (unsigned x = 0; x < f.size && x < it->second.size(); ++x) rows[x] = it->second.successors(x) & full_set(f.size);
    f.roles.push_back(std::move(rows));
  }
  for (const auto& n : names.individuals) {
    auto it = i.individual_ext.find(n);
    if (it == i.individual_ext.end()) throw MissingNameError(n);
    t.individuals[n] = static_cast<int>(f.individuals.size());
    f.individuals.push_back(it->second);
  }
}

// Names whose extension is pinned instead of enumerated: concepts to the
// empty set or the whole domain, roles to the empty or the full relation.
struct Pinned {
  std::map<std::string, bool> concepts;  // true = whole domain
  std::map<std::string, bool> roles;     // true = all pairs
};

inline std::optional<Interpretation> search(const Axiom& a, unsigned max_domain, const Pinned& pinned) {
  const Signature sig = signature_of(a);
  SlotTable t;
  std::vector<int> free_concepts, free_roles;
  int slot = 0;
  for (const auto& n : sig.concepts) {
    t.concepts[n] = slot;
    if (!pinned.concepts.count(n)) free_concepts.push_back(slot);
    ++slot;
  }
  slot = 0;
  for (const auto& n : sig.roles) {
    t.roles[n] = slot;
    if (!pinned.roles.count(n)) free_roles.push_back(slot);
    ++slot;
  }
  slot = 0;
  for (const auto& n : sig.individuals) t.individuals[n] = slot++;

  for (unsigned size = 1; size <= max_domain; ++size) {
    if (size * size > 64) throw std::invalid_argument("enumeration supports domains up to 8 elements");
    Frame f;
    f.size = size;
    const ElementSet all = full_set(size);
    const std::uint64_t all_pairs = full_set(size * size);
    f.concepts.assign(sig.concepts.size(), 0);
    f.roles.assign(sig.roles.size(), std::vector<ElementSet>(size, 0));
    f.individuals.assign(sig.individuals.size(), 0);
    for (const auto& [n, whole] : pinned.concepts)
      if (t.concepts.count(n)) f.concepts[t.concepts[n]] = whole ? all : 0;
    for (const auto& [n, whole] : pinned.roles)
      if (t.roles.count(n)) f.roles[t.roles[n]].assign(size, whole ? all : 0);

    // Odometer over free concept masks, free role pair-masks and individual
    // assignments; the first digit is the most significant.
    struct Digit {
      int kind;  // 0 concept, 1 role, 2 individual
      int slot;
      std::uint64_t limit;
    };
    std::vector<Digit> digits;
    for (int s : free_concepts) digits.push_back({0, s, all});
    for (int s : free_roles) digits.push_back({1, s, all_pairs});
    for (int s = 0; s < static_cast<int>(sig.individuals.size()); ++s) digits.push_back({2, s, size - 1u});
    std::vector<std::uint64_t> value(digits.size(), 0);

    auto apply = [&](std::size_t d) {
      const Digit& g = digits[d];
      if (g.kind == 0) {
        f.concepts[g.slot] = value[d];
      } else if (g.kind == 1) {
        auto& rows = f.roles[g.slot];
        for (unsigned x = 0; x < size; ++x) rows[x] = (value[d] >> (x * size)) & all;
      } else {
        f.individuals[g.slot] = static_cast<unsigned>(value[d]);
      }
    };
    for (std::size_t d = 0; d < digits.size(); ++d) apply(d);

    for (;;) {
      if (!holds(a, t, f)) {
        Interpretation model(size);
        for (const auto& [n, s] : t.concepts) model.set_concept(n, f.concepts[s]);
        for (const auto& [n, s] : t.roles) {
          auto& rel = model.role(n);
          for (unsigned x = 0; x < size; ++x)
            for (unsigned y = 0; y < size; ++y)
              if (contains(f.roles[s][x], y)) rel.add(x, y);
        }
        for (const auto& [n, s] : t.individuals) model.set_individual(n, f.individuals[s]);
        return model;
      }
      bool exhausted = true;
      for (std::size_t d = digits.size(); d-- > 0;) {
        if (value[d] < digits[d].limit) {
          ++value[d];
          apply(d);
          exhausted = false;
          break;
        }
        value[d] = 0;
        apply(d);
      }
      if (exhausted) break;
    }
  }
  return std::nullopt;
}

}  // namespace oracle_detail

// Extension of `c` in `i`. Throws MissingNameError for uninterpreted names.
inline ElementSet eval_concept(const ConceptExpr& c, const Interpretation& i) {
  oracle_detail::SlotTable t;
  oracle_detail::Frame f;
  oracle_detail::bind(i, signature_of(c), t, f);
  return oracle_detail::eval(c, t, f);
}

inline bool holds(const Axiom& a, const Interpretation& i) {
  oracle_detail::SlotTable t;
  oracle_detail::Frame f;
  oracle_detail::bind(i, signature_of(a), t, f);
  return oracle_detail::holds(a, t, f);
}

// First interpretation (domain sizes 1..max_domain, lexicographic) in which
// `a` fails. Cost is doubly exponential in the number of names of `a`.
inline std::optional<Interpretation> find_countermodel(const Axiom& a, unsigned max_domain) {
  return oracle_detail::search(a, max_domain, {});
}

enum class Refutation { Refuted, NotRefuted };

// Searches for an interpretation I such that the unique J that agrees with I
// on `sig` and sends every other symbol of `a` to the empty set (bottom
// flavors) or to the full domain / full relation (top flavors) violates `a`.
// Syntactic flavors are treated like their semantic counterparts.
inline Refutation brute_force_local(const Axiom& a, const Signature& sig, LocalityFlavor flavor,
                                    unsigned max_domain) {
  const bool whole = !is_bottom(flavor);
  oracle_detail::Pinned pinned;
  const Signature names = signature_of(a);
  for (const auto& n : names.concepts)
    if (!sig.has_concept(n)) pinned.concepts[n] = whole;
  for (const auto& n : names.roles)
    if (!sig.has_role(n)) pinned.roles[n] = whole;
  return oracle_detail::search(a, max_domain, pinned) ? Refutation::Refuted : Refutation::NotRefuted;
}

}  // namespace locality
