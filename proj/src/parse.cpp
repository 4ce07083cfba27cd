#include "contlog/parse.hpp"

#include <cctype>

namespace contlog {

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    return text[pos];
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size())
      throw ParseError(std::string("unbalanced parenthesis: expected '") + c + "'", pos);
    if (text[pos] != c)
      throw ParseError(std::string("expected '") + c + "', found '" + text[pos] + "'", pos);
    ++pos;
  }

  std::string symbol() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')')
      ++pos;
    if (pos == start) throw ParseError("expected a symbol", pos);
    return text.substr(start, pos - start);
  }

  Nat natural() {
    std::size_t start = pos;
    std::string s = symbol();
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("expected a natural number, found '" + s + "'", start);
    return Nat(s);
  }

  std::uint64_t natural64() {
    std::size_t start = pos;
    Nat n = natural();
    if (!n.fits_ulong_p()) throw ParseError("number too large", start);
    return n.get_ui();
  }
};

struct Parser {
  Lexer lex;
  const Signature& sig;
  bool allow_henkin;

  Dyad parse_num_args() {
    std::size_t start = lex.pos;
    Nat l = lex.natural();
    std::uint64_t k = lex.natural64();
    try {
      return Dyad(l, k);
    } catch (const std::domain_error& e) {
      throw ParseError(e.what(), start);
    }
  }

  Term parse_term() {
    lex.expect('(');
    std::size_t start = lex.pos;
    std::string head = lex.symbol();
    Term out;
    if (head == "var") {
      out = term_var(lex.natural64());
    } else if (head == "const") {
      std::string name = lex.symbol();
      unsigned id;
      if (!sig.find_constant(name, id))
        throw ParseError("unknown constant: " + name, start);
      out = term_const(id);
    } else if (head == "app") {
      std::string name = lex.symbol();
      unsigned id;
      if (!sig.find_function(name, id))
        throw ParseError("unknown function: " + name, start);
      std::vector<Term> args;
      while (lex.peek() != ')') args.push_back(parse_term());
      if (args.size() != sig.function(id).arity)
        throw ParseError("arity mismatch applying " + name, start);
      out = term_app(sig, id, std::move(args));
    } else if (head == "henkin") {
      if (!allow_henkin)
        throw ParseError("henkin constants are not part of the base signature", start);
      Wff phi = parse_wff();
      std::uint64_t v = lex.natural64();
      lex.expect('(');
      if (lex.symbol() != "num") throw ParseError("expected (num L K)", start);
      Dyad p = parse_num_args();
      lex.expect(')');
      lex.expect('(');
      if (lex.symbol() != "num") throw ParseError("expected (num L K)", start);
      Dyad q = parse_num_args();
      lex.expect(')');
      out = term_henkin(phi, v, p, q);
    } else {
      throw ParseError("unknown term form: " + head, start);
    }
    lex.expect(')');
    return out;
  }

  Wff parse_wff() {
    lex.expect('(');
    std::size_t start = lex.pos;
    std::string head = lex.symbol();
    Wff out;
    if (head == "pred") {
      std::string name = lex.symbol();
      unsigned id;
      if (!sig.find_predicate(name, id))
        throw ParseError("unknown predicate: " + name, start);
      std::vector<Term> terms;
      while (lex.peek() != ')') terms.push_back(parse_term());
      if (terms.size() != sig.predicate(id).arity)
        throw ParseError("arity mismatch applying predicate " + name, start);
      out = wff_atomic(sig, id, std::move(terms));
    } else if (head == "neg") {
      out = wff_neg(parse_wff());
    } else if (head == "half") {
      out = wff_half(parse_wff());
    } else if (head == "sub") {
      Wff a = parse_wff();
      Wff b = parse_wff();
      out = wff_truncsub(a, b);
    } else if (head == "sup") {
      std::uint64_t v = lex.natural64();
      out = wff_sup(v, parse_wff());
    } else if (head == "inf") {
      std::uint64_t v = lex.natural64();
      out = wff_inf(v, parse_wff());
    } else if (head == "or") {
      Wff a = parse_wff();
      Wff b = parse_wff();
      out = wff_or(a, b);
    } else if (head == "and") {
      Wff a = parse_wff();
      Wff b = parse_wff();
      out = wff_and(a, b);
    } else if (head == "iff") {
      Wff a = parse_wff();
      Wff b = parse_wff();
      out = wff_iff(a, b);
    } else if (head == "plus") {
      Wff a = parse_wff();
      Wff b = parse_wff();
      out = wff_plus(a, b);
    } else if (head == "times") {
      std::uint64_t m = lex.natural64();
      out = wff_times(m, parse_wff());
    } else if (head == "num") {
      out = wff_num(parse_num_args());
    } else {
      throw ParseError("unknown wff form: " + head, start);
    }
    lex.expect(')');
    return out;
  }
};

} // namespace

Wff parse_wff(const std::string& text, const Signature& sig, bool allow_henkin) {
  Parser p{Lexer{text}, sig, allow_henkin};
  Wff w = p.parse_wff();
  if (!p.lex.at_end())
    throw ParseError("trailing input after wff", p.lex.pos);
  return w;
}

Term parse_term(const std::string& text, const Signature& sig, bool allow_henkin) {
  Parser p{Lexer{text}, sig, allow_henkin};
  Term t = p.parse_term();
  if (!p.lex.at_end())
    throw ParseError("trailing input after term", p.lex.pos);
  return t;
}

} // namespace contlog
