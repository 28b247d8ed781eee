#include "modfo/parse.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "modfo/error.hpp"

namespace modfo {

namespace {

struct Token {
  enum Kind {
    Ident,
    Nat,
    LParen,
    RParen,
    Dot,
    Comma,
    Amp,
    Arrow,
    IffTok,
    Lt,
    Eq,
    KwForall,
    KwExists,
    KwNot,
    KwOr,
    KwMod,
    KwDivides,
    End
  };

  Kind kind = End;
  std::string text;
  std::uint64_t value = 0;
  int line = 1;
  int column = 1;
};

const char* describe(Token::Kind k) {
  switch (k) {
    case Token::Ident: return "identifier";
    case Token::Nat: return "literal";
    case Token::LParen: return "'('";
    case Token::RParen: return "')'";
    case Token::Dot: return "'.'";
    case Token::Comma: return "','";
    case Token::Amp: return "'&'";
    case Token::Arrow: return "'->'";
    case Token::IffTok: return "'<->'";
    case Token::Lt: return "'<'";
    case Token::Eq: return "'='";
    case Token::KwForall: return "'forall'";
    case Token::KwExists: return "'exists'";
    case Token::KwNot: return "'not'";
    case Token::KwOr: return "'or'";
    case Token::KwMod: return "'mod'";
    case Token::KwDivides: return "'divides'";
    case Token::End: return "end of input";
  }
  return "token";
}

std::vector<Token> lex(std::string_view input) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (i + k < input.size() && input[i + k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    i += n;
  };
  while (i < input.size()) {
    char c = input[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = column;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < input.size() &&
             (std::isalnum(static_cast<unsigned char>(input[j])) || input[j] == '_' || input[j] == '\''))
        ++j;
      tok.text = std::string(input.substr(i, j - i));
      if (tok.text == "forall") tok.kind = Token::KwForall;
      else if (tok.text == "exists") tok.kind = Token::KwExists;
      else if (tok.text == "not") tok.kind = Token::KwNot;
      else if (tok.text == "or") tok.kind = Token::KwOr;
      else if (tok.text == "mod") tok.kind = Token::KwMod;
      else if (tok.text == "divides") tok.kind = Token::KwDivides;
      else tok.kind = Token::Ident;
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < input.size() && std::isdigit(static_cast<unsigned char>(input[j]))) ++j;
      tok.kind = Token::Nat;
      tok.text = std::string(input.substr(i, j - i));
      auto res = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), tok.value);
      if (res.ec != std::errc())
        throw ParseError(line, column, "literal out of range: " + tok.text);
      advance(j - i);
    } else if (c == '(') {
      tok.kind = Token::LParen;
      advance(1);
    } else if (c == ')') {
      tok.kind = Token::RParen;
      advance(1);
    } else if (c == '.') {
      tok.kind = Token::Dot;
      advance(1);
    } else if (c == ',') {
      tok.kind = Token::Comma;
      advance(1);
    } else if (c == '&') {
      tok.kind = Token::Amp;
      advance(1);
    } else if (c == '=') {
      tok.kind = Token::Eq;
      advance(1);
    } else if (c == '<') {
      if (input.substr(i, 3) == "<->") {
        tok.kind = Token::IffTok;
        advance(3);
      } else {
        tok.kind = Token::Lt;
        advance(1);
      }
    } else if (c == '-') {
      if (input.substr(i, 2) == "->") {
        tok.kind = Token::Arrow;
        advance(2);
      } else {
        throw ParseError(line, column, "unexpected character '-'");
      }
    } else {
      throw ParseError(line, column, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = Token::End;
  end.line = line;
  end.column = column;
  out.push_back(end);
  return out;
}

class Parser {
public:
  Parser(std::vector<Token> tokens, const Signature& sig)
      : tokens_(std::move(tokens)), sig_(sig) {}

  Formula run() {
    Formula f = formula();
    if (!at(Token::End)) fail("unexpected trailing input");
    return f;
  }

private:
  std::vector<Token> tokens_;
  const Signature& sig_;
  std::size_t pos_ = 0;

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = pos_ + ahead;
    return k < tokens_.size() ? tokens_[k] : tokens_.back();
  }
  bool at(Token::Kind k) const { return peek().kind == k; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, message + " (found " + describe(t.kind) + ")");
  }

  void expect(Token::Kind k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    ++pos_;
  }

  Formula formula() {
    Formula lhs = implication();
    while (at(Token::IffTok)) {
      take();
      lhs = Formula::iff(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (at(Token::Arrow)) {
      take();
      return Formula::implies(std::move(lhs), implication());  // right-assoc
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (at(Token::KwOr)) {
      take();
      lhs = Formula::disj(std::move(lhs), conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (at(Token::Amp)) {
      take();
      lhs = Formula::conj(std::move(lhs), unary());
    }
    return lhs;
  }

  std::string variable_name() {
    if (!at(Token::Ident)) fail("expected variable name");
    const Token& t = take();
    if (sig_.has_symbol(t.text))
      throw ParseError(t.line, t.column,
                       "symbol " + t.text + " of signature " + sig_.name() + " used as a variable");
    return t.text;
  }

  Formula unary() {
    if (at(Token::KwNot)) {
      take();
      return Formula::negation(unary());
    }
    if (at(Token::KwForall) || at(Token::KwExists)) {
      Quant q = at(Token::KwForall) ? Quant::Forall : Quant::Exists;
      take();
      std::string var = variable_name();
      expect(Token::Dot, "'.' after quantified variable");
      return Formula::quantified(q, std::move(var), formula());
    }
    if (at(Token::LParen)) {
      // "(" may open a parenthesized formula or a parenthesized term that
      // starts an atom. Try the formula reading first and fall back; keep
      // whichever error got further.
      std::size_t saved = pos_;
      try {
        take();
        Formula f = formula();
        expect(Token::RParen, "')'");
        return f;
      } catch (const ParseError& as_formula) {
        std::size_t formula_pos = pos_;
        pos_ = saved;
        try {
          return atom();
        } catch (const ParseError& as_atom) {
          if (pos_ >= formula_pos) throw;
          throw as_formula;
        }
      }
    }
    return atom();
  }

  Formula atom() {
    if (at(Token::Ident) && peek(1).kind == Token::LParen) {
      const Token& t = peek();
      if (const SymbolInfo* rel = sig_.relation(t.text)) {
        take();
        take();  // '('
        std::vector<Term> args;
        args.push_back(term());
        while (at(Token::Comma)) {
          take();
          args.push_back(term());
        }
        expect(Token::RParen, "')'");
        if (args.size() != rel->arity)
          throw ParseError(t.line, t.column,
                           "relation " + rel->name + " expects " + std::to_string(rel->arity) +
                               " arguments, got " + std::to_string(args.size()));
        return Formula::atom(rel->name, std::move(args));
      }
    }
    Term lhs = term();
    if (at(Token::Eq)) {
      take();
      return Formula::equals(std::move(lhs), term());
    }
    if (at(Token::Lt)) {
      const Token& t = take();
      if (!sig_.relation("<"))
        throw ParseError(t.line, t.column, "unknown relation symbol < in signature " + sig_.name());
      return Formula::atom("<", {std::move(lhs), term()});
    }
    if (at(Token::KwDivides)) {
      const Token& t = take();
      if (!sig_.relation("divides"))
        throw ParseError(t.line, t.column,
                         "unknown relation symbol divides in signature " + sig_.name());
      return Formula::atom("divides", {std::move(lhs), term()});
    }
    fail("expected a relation symbol after the term (a connective cannot apply to a bare term)");
  }

  Term term() {
    Term lhs = factor();
    while (at(Token::KwMod)) {
      const Token& t = take();
      if (!sig_.function("mod"))
        throw ParseError(t.line, t.column, "unknown function symbol mod in signature " + sig_.name());
      lhs = Term::app("mod", {std::move(lhs), factor()});
    }
    return lhs;
  }

  Term factor() {
    if (at(Token::Ident)) {
      const Token& t = take();
      if (sig_.has_symbol(t.text))
        throw ParseError(t.line, t.column,
                         "symbol " + t.text + " of signature " + sig_.name() + " used as a variable");
      return Term::var(t.text);
    }
    if (at(Token::Nat)) {
      const Token& t = take();
      if (!sig_.allows_literals())
        throw ParseError(t.line, t.column,
                         "literals are not allowed in signature " + sig_.name());
      return Term::lit(t.value);
    }
    if (at(Token::LParen)) {
      take();
      Term t = term();
      expect(Token::RParen, "')'");
      return t;
    }
    fail("expected a term");
  }
};

}  // namespace

Formula parse(std::string_view input, const Signature& sig) {
  return Parser(lex(input), sig).run();
}

}  // namespace modfo
