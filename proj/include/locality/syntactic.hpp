// Syntactic ⊥- and ⊤-locality.
//
// A concept is classified bottom-up into Bot(Σ) (forced empty once every
// symbol outside Σ is interpreted by the flavor's constant), Top(Σ) (forced
// to the whole domain), or neither. Productions for ⊥-locality:
//
//   Bot ::= A∉Σ | ⊥ | ¬Top | C ⊓ Bot | Bot ⊔ Bot | ∃R.Bot | ≥n R.Bot
//         | ∃R∉Σ.C | ≥n R∉Σ.C                                  (n ≥ 1)
//   Top ::= ⊤ | ¬Bot | Top ⊓ Top | C ⊔ Top | ≥0 R.C | ∀R.Top
//         | ∀R∉Σ.C | ≤n R∉Σ.C | ≤n R.Bot
//
// and for ⊤-locality:
//
//   Bot ::= ⊥ | ¬Top | C ⊓ Bot | Bot ⊔ Bot | ∃R.Bot | ≥n R.Bot   (n ≥ 1)
//   Top ::= A∉Σ | ⊤ | ¬Bot | Top ⊓ Top | C ⊔ Top | ≥0 R.C | ∀R.Top
//         | ∃R∉Σ.Top | ≥n R∉Σ.Top
//
// A role is outside Σ when its name is; inverses are transparent. Nominals
// are never classified.
#pragma once

#include "locality/model.hpp"
#include "locality/normalize.hpp"

namespace locality {

enum class SyntacticClass { InBot, InTop, Neither };

inline const char* to_string(SyntacticClass c) {
  switch (c) {
    case SyntacticClass::InBot: return "bot";
    case SyntacticClass::InTop: return "top";
    case SyntacticClass::Neither: return "neither";
  }
  return "?";
}

namespace syntactic_detail {

inline bool outside(const RoleExpr& r, const Signature& sig) { return !r.is_constant() && !sig.has_role(r.name()); }

}  // namespace syntactic_detail

// `flavor` must be SynBot or SynTop (the semantic flavors are accepted and
// mapped onto them).
inline SyntacticClass classify_concept(const ConceptExpr& c, const Signature& sig, LocalityFlavor flavor) {
  using K = ConceptExpr::Kind;
  using S = SyntacticClass;
  const bool bot = is_bottom(flavor);
  auto sub = [&](const ConceptExpr& x) { return classify_concept(x, sig, flavor); };

  switch (c.kind()) {
    case K::Top: return S::InTop;
    case K::Bottom: return S::InBot;
    case K::OneOf: return S::Neither;
    case K::Name:
      if (sig.has_concept(c.symbol())) return S::Neither;
      return bot ? S::InBot : S::InTop;
    case K::Not:
      switch (sub(c.filler())) {
        case S::InBot: return S::InTop;
        case S::InTop: return S::InBot;
        default: return S::Neither;
      }
    case K::And: {
      bool all_top = true;
      for (const auto& op : c.operands()) {
        const S s = sub(op);
        if (s == S::InBot) return S::InBot;
        all_top = all_top && s == S::InTop;
      }
      return all_top ? S::InTop : S::Neither;
    }
    case K::Or: {
      bool all_bot = true;
      for (const auto& op : c.operands()) {
        const S s = sub(op);
        if (s == S::InTop) return S::InTop;
        all_bot = all_bot && s == S::InBot;
      }
      return all_bot ? S::InBot : S::Neither;
    }
    default: break;
  }

  const bool role_out = syntactic_detail::outside(c.role(), sig);
  const S filler = sub(c.filler());
  switch (c.kind()) {
    case K::Exists:
      if (filler == S::InBot) return S::InBot;
      if (bot && role_out) return S::InBot;
      if (!bot && role_out && filler == S::InTop) return S::InTop;
      return S::Neither;
    case K::AtLeast:
      if (c.cardinality() == 0) return S::InTop;
      if (filler == S::InBot) return S::InBot;
      if (bot && role_out) return S::InBot;
      // ≥2 over the universal role is empty on a one-element domain.
      if (!bot && role_out && filler == S::InTop && c.cardinality() == 1) return S::InTop;
      return S::Neither;
    case K::ForAll:
      if (filler == S::InTop) return S::InTop;
      if (bot && role_out) return S::InTop;
      return S::Neither;
    case K::AtMost:
      if (bot && (role_out || filler == S::InBot)) return S::InTop;
      return S::Neither;
    default: break;
  }
  return S::Neither;
}

// Local forms: Bot ⊑ C, C ⊑ Top, Bot ≡ Bot, Top ≡ Top, R∉Σ ⊑ S (⊥) or
// R ⊑ S∉Σ (⊤), Trans(R∉Σ), role equivalences and inverse declarations whose
// role names are both outside Σ. With `refined`, InverseRoles(R, R⁻) is local
// regardless of Σ.
inline bool is_syntactically_local(const Axiom& a, const Signature& sig, LocalityFlavor flavor,
                                   bool refined = false) {
  using K = Axiom::Kind;
  using S = SyntacticClass;
  const bool bot = is_bottom(flavor);
  auto cls = [&](const ConceptExpr& c) { return classify_concept(c, sig, flavor); };
  auto out = [&](const RoleExpr& r) { return r.is_constant() || !sig.has_role(r.name()); };

  switch (a.kind()) {
    case K::SubClassOf: return cls(a.lhs()) == S::InBot || cls(a.rhs()) == S::InTop;
    case K::EquivalentClasses: {
      const S l = cls(a.lhs());
      return l != S::Neither && l == cls(a.rhs());
    }
    case K::SubRoleOf: return bot ? out(a.first_role()) : out(a.second_role());
    case K::EquivalentRoles: return out(a.first_role()) && out(a.second_role());
    case K::InverseRoles:
      if (refined && inverse(a.first_role()) == a.second_role()) return true;
      return out(a.first_role()) && out(a.second_role());
    case K::Transitive: return out(a.first_role());
    case K::Domain:
    case K::Range:
    case K::DisjointClasses: {
      for (const auto& n : normalize_axiom(a))
        if (!is_syntactically_local(n, sig, flavor, refined)) return false;
      return true;
    }
  }
  return false;
}

}  // namespace locality
