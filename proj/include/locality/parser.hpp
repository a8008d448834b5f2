// Reader and writer for the functional-style ontology syntax subset, and for
// seed-signature files.
//
// Supported: Declaration, SubClassOf, EquivalentClasses, DisjointClasses,
// SubObjectPropertyOf, EquivalentObjectProperties, InverseObjectProperties,
// TransitiveObjectProperty, ObjectPropertyDomain, ObjectPropertyRange and the
// class constructors ObjectIntersectionOf, ObjectUnionOf,
// ObjectComplementOf, ObjectSomeValuesFrom, ObjectAllValuesFrom,
// ObjectMin/Max/ExactCardinality, ObjectOneOf (one individual),
// ObjectHasValue and ObjectInverseOf. Annotation axioms and imports are
// skipped and counted. IRIs are reduced to their local names.
#pragma once

#include "locality/model.hpp"
#include "locality/normalize.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace locality {

struct ParseError {
  enum class Kind { Syntax, UnsupportedConstruct, UnknownEntity };

  int line = 1;
  int column = 1;
  std::string message;
  Kind kind = Kind::Syntax;
  std::string construct;  // offending keyword for UnsupportedConstruct

  std::string describe() const {
    std::ostringstream os;
    os << line << ":" << column << ": ";
    switch (kind) {
      case Kind::Syntax: os << "syntax error: "; break;
      case Kind::UnsupportedConstruct: os << "unsupported construct: "; break;
      case Kind::UnknownEntity: os << "unknown entity: "; break;
    }
    os << message;
    return os.str();
  }
};

struct ParseOptions {
  // Every entity must be declared with the kind it is used as.
  bool strict = false;
};

template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<ParseError> errors;
  std::size_t skipped_annotations = 0;

  bool ok() const { return value.has_value() && errors.empty(); }
};

namespace parser_detail {

struct Token {
  enum class Kind { LParen, RParen, Atom, Iri, Literal, End } kind;
  std::string text;
  int line;
  int column;
};

struct Failure {
  ParseError error;
};

[[noreturn]] inline void fail(ParseError::Kind kind, int line, int column, std::string message,
                              std::string construct = {}) {
  throw Failure{ParseError{line, column, std::move(message), kind, std::move(construct)}};
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const int line = line_, col = col_;
      if (pos_ >= text_.size()) {
        out.push_back({Token::Kind::End, {}, line, col});
        return out;
      }
      const char c = text_[pos_];
      if (c == '(') {
        advance();
        out.push_back({Token::Kind::LParen, "(", line, col});
      } else if (c == ')') {
        advance();
        out.push_back({Token::Kind::RParen, ")", line, col});
      } else if (c == '<') {
        advance();
        std::string iri;
        while (pos_ < text_.size() && text_[pos_] != '>') iri += advance();
        if (pos_ >= text_.size()) fail(ParseError::Kind::Syntax, line, col, "unterminated IRI");
        advance();
        out.push_back({Token::Kind::Iri, iri, line, col});
      } else if (c == '"') {
        advance();
        std::string lit;
        while (pos_ < text_.size() && text_[pos_] != '"') {
          if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) advance();
          lit += advance();
        }
        if (pos_ >= text_.size()) fail(ParseError::Kind::Syntax, line, col, "unterminated literal");
        advance();
        // Language tag or datatype suffix belongs to the literal.
        if (pos_ < text_.size() && text_[pos_] == '@') {
          while (pos_ < text_.size() && !is_delim(text_[pos_])) advance();
        } else if (text_.substr(pos_, 2) == "^^") {
          advance();
          advance();
          if (pos_ < text_.size() && text_[pos_] == '<') {
            while (pos_ < text_.size() && text_[pos_] != '>') advance();
            if (pos_ < text_.size()) advance();
          } else {
            while (pos_ < text_.size() && !is_delim(text_[pos_])) advance();
          }
        }
        out.push_back({Token::Kind::Literal, lit, line, col});
      } else {
        std::string atom;
        while (pos_ < text_.size() && !is_delim(text_[pos_])) atom += advance();
        out.push_back({Token::Kind::Atom, atom, line, col});
      }
    }
  }

 private:
  static bool is_delim(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"' || c == '<';
  }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// Generic term: an atom, IRI or literal, or Keyword(arg ...).
struct Term {
  Token token;
  bool compound = false;
  std::vector<Term> args;

  const std::string& head() const { return token.text; }
};

class TermReader {
 public:
  explicit TermReader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::vector<Term> document() {
    std::vector<Term> out;
    while (peek().kind != Token::Kind::End) out.push_back(term());
    return out;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  Term term() {
    const Token& t = tokens_[pos_];
    switch (t.kind) {
      case Token::Kind::RParen: fail(ParseError::Kind::Syntax, t.line, t.column, "unexpected ')'");
      case Token::Kind::LParen: fail(ParseError::Kind::Syntax, t.line, t.column, "unexpected '('");
      case Token::Kind::End: fail(ParseError::Kind::Syntax, t.line, t.column, "unexpected end of input");
      default: break;
    }
    Term out{t, false, {}};
    ++pos_;
    if (t.kind == Token::Kind::Atom && peek().kind == Token::Kind::LParen) {
      out.compound = true;
      ++pos_;
      for (;;) {
        const Token& n = peek();
        if (n.kind == Token::Kind::RParen) {
          ++pos_;
          break;
        }
        if (n.kind == Token::Kind::End)
          fail(ParseError::Kind::Syntax, t.line, t.column, "unbalanced parenthesis: '" + t.text + "(' is never closed");
        out.args.push_back(term());
      }
    }
    return out;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";

// Local name of an IRI or prefixed name.
inline std::string local_name(const Token& t) {
  const std::string& s = t.text;
  if (t.kind == Token::Kind::Iri) {
    const auto hash = s.rfind('#');
    if (hash != std::string::npos) return s.substr(hash + 1);
    const auto slash = s.rfind('/');
    return slash == std::string::npos ? s : s.substr(slash + 1);
  }
  const auto colon = s.rfind(':');
  return colon == std::string::npos ? s : s.substr(colon + 1);
}

inline bool is_owl(const Token& t, std::string_view local) {
  if (t.kind == Token::Kind::Iri) return t.text.size() == kOwl.size() + local.size() && t.text.starts_with(kOwl) && t.text.ends_with(local);
  return t.kind == Token::Kind::Atom && t.text.size() == 4 + local.size() && t.text.starts_with("owl:") &&
         t.text.ends_with(local);
}

inline const std::set<std::string, std::less<>>& annotation_axioms() {
  static const std::set<std::string, std::less<>> s{"AnnotationAssertion", "SubAnnotationPropertyOf",
                                                   "AnnotationPropertyDomain", "AnnotationPropertyRange"};
  return s;
}

class Interpreter {
 public:
  Interpreter(const ParseOptions& options, ParseResult<Ontology>& result) : options_(options), result_(result) {}

  Ontology run(const std::vector<Term>& doc) {
    const Term* body = nullptr;
    for (const auto& t : doc) {
      if (t.compound && t.head() == "Prefix") continue;
      if (t.compound && t.head() == "Ontology") {
        if (body) fail(ParseError::Kind::Syntax, t.token.line, t.token.column, "more than one Ontology block");
        body = &t;
        continue;
      }
      fail(ParseError::Kind::Syntax, t.token.line, t.token.column, "expected Prefix(...) or Ontology(...)");
    }
    if (!body) fail(ParseError::Kind::Syntax, 1, 1, "missing Ontology(...) block");

    Ontology o;
    std::size_t first = 0;
    // Optional ontology IRI and version IRI.
    while (first < body->args.size() && !body->args[first].compound && first < 2) {
      if (first == 0) o.set_name(local_name(body->args[first].token));
      ++first;
    }
    for (std::size_t i = first; i < body->args.size(); ++i) collect_declaration(body->args[i], o);
    for (std::size_t i = first; i < body->args.size(); ++i) {
      try {
        axiom(body->args[i], o);
      } catch (const Failure& f) {
        if (f.error.kind == ParseError::Kind::Syntax) throw;
        result_.errors.push_back(f.error);
      }
    }
    return o;
  }

 private:
  [[noreturn]] static void syntax(const Term& t, const std::string& message) {
    fail(ParseError::Kind::Syntax, t.token.line, t.token.column, message);
  }
  [[noreturn]] static void unsupported(const Term& t, const std::string& what) {
    fail(ParseError::Kind::UnsupportedConstruct, t.token.line, t.token.column, what + " is outside the supported fragment",
         t.head());
  }

  void collect_declaration(const Term& t, Ontology& o) {
    if (!t.compound || t.head() != "Declaration") return;
    const Term* entity = nullptr;
    for (const auto& a : t.args)
      if (!(a.compound && a.head() == "Annotation")) entity = &a;
    if (!entity || !entity->compound || entity->args.size() != 1 || entity->args[0].compound)
      syntax(t, "malformed Declaration");
    const std::string name = local_name(entity->args[0].token);
    const std::string& kind = entity->head();
    if (kind == "Class") {
      if (!is_owl(entity->args[0].token, "Thing") && !is_owl(entity->args[0].token, "Nothing"))
        o.declare(EntityKind::Concept, name);
    } else if (kind == "ObjectProperty") {
      o.declare(EntityKind::Role, name);
    } else if (kind == "NamedIndividual") {
      o.declare(EntityKind::Individual, name);
    } else if (kind != "AnnotationProperty" && kind != "DataProperty" && kind != "Datatype") {
      syntax(*entity, "unknown entity type '" + kind + "'");
    }
  }

  std::string entity(const Term& t, EntityKind kind, const Ontology& o) {
    if (t.compound || (t.token.kind != Token::Kind::Atom && t.token.kind != Token::Kind::Iri))
      syntax(t, "expected an entity name");
    std::string name = local_name(t.token);
    if (name.empty()) syntax(t, "empty entity name");
    if (options_.strict && !o.declarations().names(kind).count(name)) {
      const char* what = kind == EntityKind::Concept ? "class" : kind == EntityKind::Role ? "object property" : "individual";
      fail(ParseError::Kind::UnknownEntity, t.token.line, t.token.column, std::string("undeclared ") + what + " '" + name + "'");
    }
    return name;
  }

  static std::vector<const Term*> operands(const Term& t) {
    std::vector<const Term*> out;
    for (const auto& a : t.args)
      if (!(a.compound && a.head() == "Annotation")) out.push_back(&a);
    return out;
  }

  RoleExpr role(const Term& t, const Ontology& o) {
    if (!t.compound) {
      if (is_owl(t.token, "topObjectProperty") || is_owl(t.token, "bottomObjectProperty"))
        unsupported(t, t.token.text);
      return RoleExpr::named(entity(t, EntityKind::Role, o));
    }
    if (t.head() == "ObjectInverseOf") {
      if (t.args.size() != 1) syntax(t, "ObjectInverseOf takes one property");
      return inverse(role(t.args[0], o));
    }
    if (t.head() == "ObjectPropertyChain") unsupported(t, "role chain");
    unsupported(t, t.head());
  }

  unsigned number(const Term& t) {
    if (t.compound || t.token.kind != Token::Kind::Atom || t.token.text.empty() ||
        !std::all_of(t.token.text.begin(), t.token.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      syntax(t, "expected a non-negative integer");
    return static_cast<unsigned>(std::stoul(t.token.text));
  }

  ConceptExpr concept_expr(const Term& t, const Ontology& o) {
    using C = ConceptExpr;
    if (!t.compound) {
      if (is_owl(t.token, "Thing")) return C::top();
      if (is_owl(t.token, "Nothing")) return C::bottom();
      return C::name(entity(t, EntityKind::Concept, o));
    }
    const std::string& h = t.head();
    auto all = [&](std::size_t min) {
      if (t.args.size() < min) syntax(t, h + " needs at least " + std::to_string(min) + " operands");
      std::vector<C> out;
      for (const auto& a : t.args) out.push_back(concept_expr(a, o));
      return out;
    };
    auto arity = [&](std::size_t lo, std::size_t hi) {
      if (t.args.size() < lo || t.args.size() > hi) syntax(t, "wrong number of arguments to " + h);
    };
    if (h == "ObjectIntersectionOf") return C::conjunction(all(2));
    if (h == "ObjectUnionOf") return C::disjunction(all(2));
    if (h == "ObjectComplementOf") {
      arity(1, 1);
      return C::negation(concept_expr(t.args[0], o));
    }
    if (h == "ObjectSomeValuesFrom" || h == "ObjectAllValuesFrom") {
      arity(2, 2);
      RoleExpr r = role(t.args[0], o);
      C c = concept_expr(t.args[1], o);
      return h == "ObjectSomeValuesFrom" ? C::exists(std::move(r), std::move(c)) : C::forall(std::move(r), std::move(c));
    }
    if (h == "ObjectMinCardinality" || h == "ObjectMaxCardinality" || h == "ObjectExactCardinality") {
      arity(2, 3);
      const unsigned n = number(t.args[0]);
      RoleExpr r = role(t.args[1], o);
      C c = t.args.size() == 3 ? concept_expr(t.args[2], o) : C::top();
      if (h == "ObjectMinCardinality") return C::at_least(n, r, c);
      if (h == "ObjectMaxCardinality") return C::at_most(n, r, c);
      return C::exactly(n, r, c);
    }
    if (h == "ObjectOneOf") {
      if (t.args.size() != 1) unsupported(t, "ObjectOneOf with more than one individual");
      return C::one_of(entity(t.args[0], EntityKind::Individual, o));
    }
    if (h == "ObjectHasValue") {
      arity(2, 2);
      RoleExpr r = role(t.args[0], o);
      return C::exists(std::move(r), C::one_of(entity(t.args[1], EntityKind::Individual, o)));
    }
    unsupported(t, h);
  }

  void add(Ontology& o, const Axiom& a) {
    for (const auto& n : normalize_axiom(a)) o.add(n);
  }

  void axiom(const Term& t, Ontology& o) {
    if (!t.compound) syntax(t, "expected an axiom");
    const std::string& h = t.head();
    if (h == "Declaration") return;
    if (h == "Import" || h == "Annotation" || annotation_axioms().count(h)) {
      ++result_.skipped_annotations;
      return;
    }
    const auto ops = operands(t);
    auto arity = [&](std::size_t n) {
      if (ops.size() != n) syntax(t, h + " expects " + std::to_string(n) + " arguments");
    };
    auto at_least = [&](std::size_t n) {
      if (ops.size() < n) syntax(t, h + " expects at least " + std::to_string(n) + " arguments");
    };
    if (h == "SubClassOf") {
      arity(2);
      add(o, Axiom::subclass(concept_expr(*ops[0], o), concept_expr(*ops[1], o)));
    } else if (h == "EquivalentClasses") {
      at_least(2);
      std::vector<ConceptExpr> cs;
      for (const Term* x : ops) cs.push_back(concept_expr(*x, o));
      for (std::size_t i = 0; i + 1 < cs.size(); ++i) add(o, Axiom::equivalent(cs[i], cs[i + 1]));
    } else if (h == "DisjointClasses") {
      at_least(2);
      std::vector<ConceptExpr> cs;
      for (const Term* x : ops) cs.push_back(concept_expr(*x, o));
      for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) add(o, Axiom::disjoint(cs[i], cs[j]));
    } else if (h == "SubObjectPropertyOf") {
      arity(2);
      add(o, Axiom::subrole(role(*ops[0], o), role(*ops[1], o)));
    } else if (h == "EquivalentObjectProperties") {
      at_least(2);
      std::vector<RoleExpr> rs;
      for (const Term* x : ops) rs.push_back(role(*x, o));
      for (std::size_t i = 0; i + 1 < rs.size(); ++i) add(o, Axiom::equivalent_roles(rs[i], rs[i + 1]));
    } else if (h == "InverseObjectProperties") {
      arity(2);
      add(o, Axiom::inverse_roles(role(*ops[0], o), role(*ops[1], o)));
    } else if (h == "TransitiveObjectProperty") {
      arity(1);
      add(o, Axiom::transitive(role(*ops[0], o)));
    } else if (h == "ObjectPropertyDomain") {
      arity(2);
      add(o, Axiom::domain(role(*ops[0], o), concept_expr(*ops[1], o)));
    } else if (h == "ObjectPropertyRange") {
      arity(2);
      add(o, Axiom::range(role(*ops[0], o), concept_expr(*ops[1], o)));
    } else {
      unsupported(t, h);
    }
  }

  const ParseOptions& options_;
  ParseResult<Ontology>& result_;
};

// ---------------------------------------------------------------------------
// Writer

inline void write(std::ostream& os, const RoleExpr& r) {
  if (r.kind() == RoleExpr::Kind::Inverse)
    os << "ObjectInverseOf(" << r.name() << ")";
  else if (r.kind() == RoleExpr::Kind::Name)
    os << r.name();
  else
    os << (r.kind() == RoleExpr::Kind::Empty ? "owl:bottomObjectProperty" : "owl:topObjectProperty");
}

inline void write(std::ostream& os, const ConceptExpr& c) {
  using K = ConceptExpr::Kind;
  auto list = [&](const char* head) {
    os << head << "(";
    bool first = true;
    for (const auto& op : c.operands()) {
      if (!first) os << " ";
      first = false;
      write(os, op);
    }
    os << ")";
  };
  auto restriction = [&](const char* head, bool counted) {
    os << head << "(";
    if (counted) os << c.cardinality() << " ";
    write(os, c.role());
    os << " ";
    write(os, c.filler());
    os << ")";
  };
  switch (c.kind()) {
    case K::Top: os << "owl:Thing"; break;
    case K::Bottom: os << "owl:Nothing"; break;
    case K::Name: os << c.symbol(); break;
    case K::OneOf: os << "ObjectOneOf(" << c.symbol() << ")"; break;
    case K::Not:
      os << "ObjectComplementOf(";
      write(os, c.filler());
      os << ")";
      break;
    case K::And: list("ObjectIntersectionOf"); break;
    case K::Or: list("ObjectUnionOf"); break;
    case K::Exists: restriction("ObjectSomeValuesFrom", false); break;
    case K::ForAll: restriction("ObjectAllValuesFrom", false); break;
    case K::AtLeast: restriction("ObjectMinCardinality", true); break;
    case K::AtMost: restriction("ObjectMaxCardinality", true); break;
  }
}

}  // namespace parser_detail

inline ParseResult<Ontology> parse_ontology(std::string_view text, const ParseOptions& options = {}) {
  using namespace parser_detail;
  ParseResult<Ontology> result;
  try {
    TermReader reader(Lexer(text).run());
    const auto doc = reader.document();
    Ontology o = Interpreter(options, result).run(doc);
    if (result.errors.empty()) result.value = std::move(o);
  } catch (const Failure& f) {
    result.errors.push_back(f.error);
  }
  return result;
}

inline void write_axiom(std::ostream& os, const Axiom& a) {
  using parser_detail::write;
  using K = Axiom::Kind;
  auto two_concepts = [&](const char* head) {
    os << head << "(";
    write(os, a.lhs());
    os << " ";
    write(os, a.rhs());
    os << ")";
  };
  auto two_roles = [&](const char* head) {
    os << head << "(";
    write(os, a.first_role());
    os << " ";
    write(os, a.second_role());
    os << ")";
  };
  auto role_concept = [&](const char* head) {
    os << head << "(";
    write(os, a.first_role());
    os << " ";
    write(os, a.lhs());
    os << ")";
  };
  switch (a.kind()) {
    case K::SubClassOf: two_concepts("SubClassOf"); break;
    case K::EquivalentClasses: two_concepts("EquivalentClasses"); break;
    case K::DisjointClasses: two_concepts("DisjointClasses"); break;
    case K::SubRoleOf: two_roles("SubObjectPropertyOf"); break;
    case K::EquivalentRoles: two_roles("EquivalentObjectProperties"); break;
    case K::InverseRoles: two_roles("InverseObjectProperties"); break;
    case K::Transitive:
      os << "TransitiveObjectProperty(";
      write(os, a.first_role());
      os << ")";
      break;
    case K::Domain: role_concept("ObjectPropertyDomain"); break;
    case K::Range: role_concept("ObjectPropertyRange"); break;
  }
}

inline std::string to_functional(const Axiom& a) {
  std::ostringstream os;
  write_axiom(os, a);
  return os.str();
}

inline std::string serialize_ontology(const Ontology& o) {
  std::ostringstream os;
  os << "Prefix(owl:=<" << parser_detail::kOwl << ">)\n";
  os << "Ontology(";
  if (!o.name().empty()) os << "<" << o.name() << ">";
  os << "\n";
  const Signature names = o.declarations() | signature_of(o);
  for (const auto& n : names.concepts) os << "Declaration(Class(" << n << "))\n";
  for (const auto& n : names.roles) os << "Declaration(ObjectProperty(" << n << "))\n";
  for (const auto& n : names.individuals) os << "Declaration(NamedIndividual(" << n << "))\n";
  for (const auto& a : o.axioms()) {
    write_axiom(os, a);
    os << "\n";
  }
  os << ")\n";
  return os.str();
}

// One entity per line, optionally prefixed with "C:", "R:" or "I:"; '#'
// starts a comment. Unprefixed names are looked up in the ontology's
// declarations and signature.
inline ParseResult<Signature> parse_signature(std::string_view text, const Ontology& against) {
  ParseResult<Signature> result;
  Signature sig;
  const Signature known = against.declarations() | signature_of(against);
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    bool in_iri = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '<') in_iri = true;
      if (line[i] == '>') in_iri = false;
      if (line[i] == '#' && !in_iri) {
        line.resize(i);
        break;
      }
    }
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    std::string entry = line.substr(first, last - first + 1);
    const int column = static_cast<int>(first) + 1;

    std::optional<EntityKind> kind;
    if (entry.size() > 2 && entry[1] == ':' && (entry[0] == 'C' || entry[0] == 'R' || entry[0] == 'I')) {
      kind = entry[0] == 'C' ? EntityKind::Concept : entry[0] == 'R' ? EntityKind::Role : EntityKind::Individual;
      entry = entry.substr(2);
    }
    parser_detail::Token tok{parser_detail::Token::Kind::Atom, entry, line_no, column};
    if (entry.size() > 1 && entry.front() == '<' && entry.back() == '>') {
      tok.kind = parser_detail::Token::Kind::Iri;
      tok.text = entry.substr(1, entry.size() - 2);
    }
    const std::string name = parser_detail::local_name(tok);
    if (name.empty()) {
      result.errors.push_back({line_no, column, "empty entity name", ParseError::Kind::Syntax, {}});
      continue;
    }
    if (kind) {
      sig.add(*kind, name);
      continue;
    }
    bool found = false;
    for (auto k : {EntityKind::Concept, EntityKind::Role, EntityKind::Individual}) {
      if (known.names(k).count(name)) {
        sig.add(k, name);
        found = true;
      }
    }
    if (!found)
      result.errors.push_back(
          {line_no, column, "'" + name + "' is not an entity of the ontology", ParseError::Kind::UnknownEntity, {}});
  }
  if (result.errors.empty()) result.value = std::move(sig);
  return result;
}

}  // namespace locality
