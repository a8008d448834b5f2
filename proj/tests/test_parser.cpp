#include "support/random_dl.hpp"

#include <gtest/gtest.h>

using namespace locality;
using C = ConceptExpr;
using R = RoleExpr;

namespace {

std::string wrap(const std::string& body) {
  return "Prefix(:=<http://example.org/t#>)\nPrefix(owl:=<http://www.w3.org/2002/07/owl#>)\nOntology(<http://example.org/t.owl>\n" +
         body + "\n)\n";
}

Ontology parse_ok(const std::string& body, ParseOptions options = {}) {
  auto r = parse_ontology(wrap(body), options);
  EXPECT_TRUE(r.ok()) << (r.errors.empty() ? "" : r.errors.front().describe());
  return r.value.value_or(Ontology{});
}

ParseError parse_error(const std::string& text, ParseOptions options = {}) {
  auto r = parse_ontology(text, options);
  EXPECT_FALSE(r.ok());
  return r.errors.empty() ? ParseError{} : r.errors.front();
}

}  // namespace

TEST(Parser, IrisReduceToLocalNames) {
  const Ontology o = parse_ok("SubClassOf(<http://example.org/zoo#Duck> :Bird)\nSubClassOf(<http://example.org/zoo/Bird> owl:Thing)");
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o[0], Axiom::subclass(C::name("Duck"), C::name("Bird")));
  EXPECT_EQ(o[1], Axiom::subclass(C::name("Bird"), C::top()));
  EXPECT_EQ(o.name(), "t.owl");
}

TEST(Parser, ClassConstructors) {
  const Ontology o = parse_ok(
      "SubClassOf(ObjectIntersectionOf(:A ObjectComplementOf(:B)) ObjectUnionOf(:C owl:Nothing))\n"
      "SubClassOf(:A ObjectSomeValuesFrom(ObjectInverseOf(:r) :B))\n"
      "SubClassOf(:A ObjectAllValuesFrom(:r :B))\n"
      "SubClassOf(:A ObjectMinCardinality(2 :r))\n"
      "SubClassOf(:A ObjectMaxCardinality(1 :r :B))\n"
      "SubClassOf(:A ObjectHasValue(:r :a))\n"
      "SubClassOf(:A ObjectOneOf(:a))");
  ASSERT_EQ(o.size(), 7u);
  EXPECT_EQ(o[0], Axiom::subclass(C::conjunction({C::name("A"), C::negation(C::name("B"))}),
                                  C::disjunction({C::name("C"), C::bottom()})));
  EXPECT_EQ(o[1].rhs(), C::exists(R::inverse_of("r"), C::name("B")));
  EXPECT_EQ(o[2].rhs(), C::forall(R::named("r"), C::name("B")));
  EXPECT_EQ(o[3].rhs(), C::at_least(2, R::named("r"), C::top()));
  EXPECT_EQ(o[4].rhs(), C::at_most(1, R::named("r"), C::name("B")));
  EXPECT_EQ(o[5].rhs(), C::exists(R::named("r"), C::one_of("a")));
  EXPECT_EQ(o[6].rhs(), C::one_of("a"));
}

TEST(Parser, ExactCardinalityIsDesugared) {
  const Ontology o = parse_ok("SubClassOf(:M ObjectExactCardinality(3 :c owl:Thing))");
  EXPECT_EQ(o[0].rhs(), C::conjunction({C::at_least(3, R::named("c"), C::top()), C::at_most(3, R::named("c"), C::top())}));
}

TEST(Parser, NaryAxiomsExpand) {
  const Ontology o = parse_ok("EquivalentClasses(:A :B :C)\nDisjointClasses(:A :B :C)\nEquivalentObjectProperties(:r :s :t)");
  std::vector<Axiom> expected{
      Axiom::equivalent(C::name("A"), C::name("B")),
      Axiom::equivalent(C::name("B"), C::name("C")),
      Axiom::subclass(C::conjunction({C::name("A"), C::name("B")}), C::bottom()),
      Axiom::subclass(C::conjunction({C::name("A"), C::name("C")}), C::bottom()),
      Axiom::subclass(C::conjunction({C::name("B"), C::name("C")}), C::bottom()),
      Axiom::equivalent_roles(R::named("r"), R::named("s")),
      Axiom::equivalent_roles(R::named("s"), R::named("t")),
  };
  EXPECT_EQ(o.axioms(), expected);
}

TEST(Parser, RoleAxioms) {
  const Ontology o = parse_ok(
      "SubObjectPropertyOf(:r :s)\nInverseObjectProperties(:P ObjectInverseOf(:P))\nTransitiveObjectProperty(:r)\n"
      "ObjectPropertyDomain(:r :A)\nObjectPropertyRange(:r :B)");
  ASSERT_EQ(o.size(), 5u);
  EXPECT_EQ(o[0], Axiom::subrole(R::named("r"), R::named("s")));
  EXPECT_EQ(o[1], Axiom::inverse_roles(R::named("P"), R::inverse_of("P")));
  EXPECT_EQ(o[2], Axiom::transitive(R::named("r")));
  EXPECT_EQ(o[3], Axiom::subclass(C::exists(R::named("r"), C::top()), C::name("A")));
  EXPECT_EQ(o[4], Axiom::subclass(C::top(), C::forall(R::named("r"), C::name("B"))));
}

TEST(Parser, AnnotationsAreSkippedAndCounted) {
  auto r = parse_ontology(wrap(
      "Declaration(AnnotationProperty(:note))\nAnnotationAssertion(:note :A \"text\"@en)\n"
      "SubClassOf(Annotation(:note \"x\") :A :B)\nAnnotationAssertion(:note :B \"y\"^^<http://www.w3.org/2001/XMLSchema#string>)"));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.skipped_annotations, 2u);
  EXPECT_EQ(r.value->size(), 1u);
}

TEST(Parser, MultiIndividualOneOfIsUnsupported) {
  const ParseError e = parse_error(wrap("SubClassOf(:A ObjectOneOf(:a :b))"));
  EXPECT_EQ(e.kind, ParseError::Kind::UnsupportedConstruct);
  EXPECT_EQ(e.construct, "ObjectOneOf");
  EXPECT_EQ(e.line, 4);
}

TEST(Parser, UnknownKeywordIsUnsupported) {
  const ParseError e = parse_error(wrap("DataPropertyDomain(:age :Person)"));
  EXPECT_EQ(e.kind, ParseError::Kind::UnsupportedConstruct);
  EXPECT_EQ(e.construct, "DataPropertyDomain");
  const ParseError chain = parse_error(wrap("SubObjectPropertyOf(ObjectPropertyChain(:r :s) :t)"));
  EXPECT_EQ(chain.construct, "ObjectPropertyChain");
}

TEST(Parser, SyntaxErrorsCarryPositions) {
  const ParseError e = parse_error("Ontology(\nSubClassOf(:A :B\n");
  EXPECT_EQ(e.kind, ParseError::Kind::Syntax);
  EXPECT_EQ(e.line, 2);
  EXPECT_EQ(e.column, 1);

  const ParseError stray = parse_error("Ontology(\nSubClassOf(:A :B)))\n");
  EXPECT_EQ(stray.kind, ParseError::Kind::Syntax);
  EXPECT_EQ(stray.line, 2);

  const ParseError arity = parse_error(wrap("SubClassOf(:A)"));
  EXPECT_EQ(arity.kind, ParseError::Kind::Syntax);
  EXPECT_EQ(arity.line, 4);

  const ParseError count = parse_error(wrap("SubClassOf(:A ObjectMinCardinality(two :r))"));
  EXPECT_EQ(count.kind, ParseError::Kind::Syntax);
  EXPECT_EQ(count.column, 36);
}

TEST(Parser, StrictModeRequiresDeclarations) {
  const std::string body = "Declaration(Class(:A))\nDeclaration(ObjectProperty(:r))\nSubClassOf(:A ObjectSomeValuesFrom(:r :B))";
  parse_ok(body);
  const ParseError e = parse_error(wrap(body), {true});
  EXPECT_EQ(e.kind, ParseError::Kind::UnknownEntity);
  EXPECT_NE(e.message.find("'B'"), std::string::npos);
  // Declarations may come after use.
  parse_ok("SubClassOf(:A :B)\nDeclaration(Class(:A))\nDeclaration(Class(:B))", {true});
}

TEST(Parser, MissingOntologyBlock) {
  EXPECT_EQ(parse_error("Prefix(:=<http://x#>)").kind, ParseError::Kind::Syntax);
  EXPECT_EQ(parse_error("SubClassOf(:A :B)").kind, ParseError::Kind::Syntax);
}

// serialize ∘ parse is the identity on axiom lists.
TEST(Parser, RoundTripOnRandomOntologies) {
  testing_support::Vocabulary v;
  v.individuals = {"a", "b"};
  testing_support::Generator g(3, v);
  for (int i = 0; i < 200; ++i) {
    const Ontology o = g.ontology(1 + g.pick(12), 3, "round-trip");
    const std::string text = serialize_ontology(o);
    auto r = parse_ontology(text, {true});
    ASSERT_TRUE(r.ok()) << text << (r.errors.empty() ? "" : r.errors.front().describe());
    // Parsing normalizes domain, range and disjointness, so compare against
    // the normalized source.
    EXPECT_TRUE(same_axioms(*r.value, normalize(o))) << text;
    EXPECT_EQ(serialize_ontology(*r.value), serialize_ontology(*parse_ontology(serialize_ontology(*r.value)).value));
  }
}

TEST(Parser, CorpusFixturesParse) {
  for (const auto& f : testing_support::corpus_files()) {
    auto r = parse_ontology(testing_support::read_text(std::string(LOCALITY_CORPUS_DIR) + "/" + f), {true});
    EXPECT_TRUE(r.ok()) << f << ": " << (r.errors.empty() ? "" : r.errors.front().describe());
    EXPECT_GT(r.value->size(), 10u) << f;
  }
}

TEST(SignatureFile, PrefixesCommentsAndLookup) {
  const Ontology o = parse_ok("Declaration(Class(:Student))\nDeclaration(ObjectProperty(:hasChildren))\nSubClassOf(:Student :Person)");
  auto r = parse_signature("# seed\nC:Student   # trailing comment\n\nhasChildren\nPerson\n<http://example.org/t#Student>\nR:extra\n", o);
  ASSERT_TRUE(r.ok()) << r.errors.front().describe();
  EXPECT_EQ(r.value->concepts, (std::set<std::string>{"Person", "Student"}));
  EXPECT_EQ(r.value->roles, (std::set<std::string>{"extra", "hasChildren"}));
}

TEST(SignatureFile, UnknownBareNameIsAnError) {
  const Ontology o = parse_ok("SubClassOf(:A :B)");
  auto r = parse_signature("A\nNope\n", o);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.errors.front().kind, ParseError::Kind::UnknownEntity);
  EXPECT_EQ(r.errors.front().line, 2);
}
