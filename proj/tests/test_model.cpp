#include "support/random_dl.hpp"

#include <gtest/gtest.h>

using namespace locality;
using C = ConceptExpr;
using R = RoleExpr;

TEST(RoleExpr, InverseIsAnInvolution) {
  const R p = R::named("P");
  EXPECT_EQ(inverse(inverse(p)), p);
  EXPECT_EQ(inverse(p), R::inverse_of("P"));
  EXPECT_NE(inverse(p), p);
  EXPECT_EQ(inverse(R::empty()), R::empty());
  EXPECT_EQ(inverse(R::universal()), R::universal());
}

TEST(ConceptExpr, ConjunctionFlattensAndCollapses) {
  const C a = C::name("A"), b = C::name("B"), c = C::name("C");
  const C nested = C::conjunction({a, C::conjunction({b, c})});
  ASSERT_TRUE(nested.is(C::Kind::And));
  EXPECT_EQ(nested.operands().size(), 3u);
  EXPECT_EQ(C::conjunction({a}), a);
  EXPECT_THROW(C::conjunction({}), std::invalid_argument);
}

TEST(ConceptExpr, ExactlyIsAtLeastAndAtMost) {
  const C e = C::exactly(3, R::named("c"), C::top());
  ASSERT_TRUE(e.is(C::Kind::And));
  EXPECT_EQ(e.operands()[0], C::at_least(3, R::named("c"), C::top()));
  EXPECT_EQ(e.operands()[1], C::at_most(3, R::named("c"), C::top()));
}

TEST(ConceptExpr, StructuralEqualityAndHash) {
  testing_support::Generator g(1, {});
  for (int i = 0; i < 200; ++i) {
    const C c = g.concept_expr(3);
    const C copy = c;
    EXPECT_EQ(c, copy);
    EXPECT_EQ(c.hash(), copy.hash());
    EXPECT_EQ(c <=> copy, std::strong_ordering::equal);
  }
  EXPECT_NE(C::exists(R::named("r"), C::name("A")), C::exists(R::inverse_of("r"), C::name("A")));
}

TEST(Ontology, DeduplicatesAndKeepsOrder) {
  Ontology o("t");
  const Axiom a = Axiom::subclass(C::name("A"), C::name("B"));
  const Axiom b = Axiom::subclass(C::name("B"), C::name("C"));
  EXPECT_TRUE(o.add(a));
  EXPECT_TRUE(o.add(b));
  EXPECT_FALSE(o.add(a));
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o[0], a);
  EXPECT_EQ(o[1], b);
}

TEST(Signature, OfAxiomAndUnion) {
  const Axiom a = Axiom::equivalent(C::name("M"), C::conjunction({C::name("S"), C::forall(R::named("g"), C::one_of("m"))}));
  const Signature s = signature_of(a);
  EXPECT_EQ(s.concepts, (std::set<std::string>{"M", "S"}));
  EXPECT_EQ(s.roles, (std::set<std::string>{"g"}));
  EXPECT_EQ(s.individuals, (std::set<std::string>{"m"}));
  EXPECT_EQ(s.term_count(), 3u);  // individuals are not terms

  Signature x;
  x.add(EntityKind::Concept, "A");
  const Signature u = x | s;
  EXPECT_TRUE(u.includes(s));
  EXPECT_TRUE(u.has_concept("A"));
}

TEST(Normalize, DerivedAxiomsBecomeInclusions) {
  const R r = R::named("r");
  const auto dom = normalize_axiom(Axiom::domain(r, C::name("A")));
  ASSERT_EQ(dom.size(), 1u);
  EXPECT_EQ(dom[0], Axiom::subclass(C::exists(r, C::top()), C::name("A")));
  const auto rng = normalize_axiom(Axiom::range(r, C::name("A")));
  EXPECT_EQ(rng[0], Axiom::subclass(C::top(), C::forall(r, C::name("A"))));
  const auto dis = normalize_axiom(Axiom::disjoint(C::name("A"), C::name("B")));
  EXPECT_EQ(dis[0], Axiom::subclass(C::conjunction({C::name("A"), C::name("B")}), C::bottom()));
}

// nnf and nnf_negated must preserve and complement extensions respectively;
// checked against direct evaluation on random interpretations.
TEST(Normalize, NegationNormalFormPreservesSemantics) {
  testing_support::Vocabulary v;
  v.individuals = {"a"};
  testing_support::Generator g(7, v);
  for (int i = 0; i < 500; ++i) {
    const C c = g.concept_expr(3);
    const C n = nnf(c);
    const C neg = nnf_negated(c);
    const Signature names = signature_of(c);
    for (unsigned size = 1; size <= 4; ++size) {
      const Interpretation in = g.interpretation(names | Signature{{"A", "B", "C"}, {"r", "s"}, {"a"}}, size);
      const ElementSet ext = eval_concept(c, in);
      EXPECT_EQ(eval_concept(n, in), ext) << to_string(c);
      EXPECT_EQ(eval_concept(neg, in), in.domain() & ~ext) << to_string(c);
    }
  }
}

TEST(Normalize, NegationNormalFormHasNegationOnlyOnAtoms) {
  testing_support::Generator g(11, {});
  std::function<bool(const C&)> ok = [&](const C& c) {
    if (c.is(C::Kind::Not)) return c.filler().is(C::Kind::Name) || c.filler().is(C::Kind::OneOf);
    if (c.is(C::Kind::And) || c.is(C::Kind::Or)) {
      for (const auto& op : c.operands())
        if (!ok(op)) return false;
      return true;
    }
    if (c.has_role()) return ok(c.filler());
    return true;
  };
  for (int i = 0; i < 300; ++i) {
    const C c = g.concept_expr(4);
    EXPECT_TRUE(ok(nnf(c))) << to_string(nnf(c));
  }
}
