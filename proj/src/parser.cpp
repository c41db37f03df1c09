#include "gppl/parser.hpp"

#include <cctype>
#include <set>
#include <vector>

namespace gppl::lang {

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, End };
  Kind kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, tok_.line, tok_.col);
  }

 private:
  void advance() {
    skip_space();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_ = {Token::Kind::End, "", line_, col_};
      return;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
              src_[pos_] == '\'')) {
        s += src_[pos_];
        bump();
      }
      tok_ = {Token::Kind::Ident, s, tok_.line, tok_.col};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s;
      while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '.')) {
        s += src_[pos_];
        bump();
      }
      tok_ = {Token::Kind::Number, s, tok_.line, tok_.col};
      return;
    }
    if (c == '-') {
      if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        bump();
        bump();
        tok_ = {Token::Kind::Punct, "->", tok_.line, tok_.col};
        return;
      }
      throw ParseError("unexpected '-'", line_, col_);
    }
    static const std::string singles = "(){}[],;=&|*+/";
    if (singles.find(c) != std::string::npos) {
      bump();
      tok_ = {Token::Kind::Punct, std::string(1, c), tok_.line, tok_.col};
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_{Token::Kind::End, "", 1, 1};
};

bool is_keyword(const std::string& s) {
  static const std::set<std::string> kws = {
      "let",  "in",   "case", "of",       "inl",  "inr",  "absurd", "fst",  "snd",
      "new",  "edge", "bernoulli", "true", "false", "if",  "then",   "else", "not",
      "subm", "unit", "void", "bool",     "vertex"};
  return kws.count(s) > 0;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  TermPtr parse_program() {
    TermPtr t = parse_term();
    if (lex_.peek().kind != Token::Kind::End) lex_.fail("trailing input after program");
    return t;
  }

  Type parse_type_program() {
    Type t = parse_type();
    if (lex_.peek().kind != Token::Kind::End) lex_.fail("trailing input after type");
    return t;
  }

 private:
  SourceLoc here() const { return {lex_.peek().line, lex_.peek().col}; }

  bool at_ident(const std::string& s) const {
    return lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == s;
  }

  bool at_punct(const std::string& s) const {
    return lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == s;
  }

  void expect_punct(const std::string& s) {
    if (!at_punct(s)) lex_.fail("expected '" + s + "'");
    lex_.next();
  }

  void expect_ident(const std::string& s) {
    if (!at_ident(s)) lex_.fail("expected '" + s + "'");
    lex_.next();
  }

  std::string expect_name() {
    if (lex_.peek().kind != Token::Kind::Ident) lex_.fail("expected identifier");
    if (is_keyword(lex_.peek().text)) lex_.fail("keyword used as identifier");
    return lex_.next().text;
  }

  std::string fresh_binder(const TermPtr& branch) {
    auto fv = free_vars(branch);
    std::string name;
    do {
      name = "_k" + std::to_string(fresh_++);
    } while (fv.count(name));
    return name;
  }

  // if c then a else b  ~>  case c of { inl _ -> a; inr _ -> b }
  TermPtr desugar_if(TermPtr c, TermPtr a, TermPtr b, SourceLoc loc) {
    std::string x1 = fresh_binder(a);
    std::string x2 = fresh_binder(b);
    return case_of(std::move(c), x1, std::move(a), x2, std::move(b), loc);
  }

  TermPtr parse_term() {
    SourceLoc loc = here();
    if (at_ident("let")) {
      lex_.next();
      std::string x = expect_name();
      expect_punct("=");
      TermPtr bound = parse_term();
      expect_ident("in");
      TermPtr body = parse_term();
      return let(x, std::move(bound), std::move(body), loc);
    }
    if (at_ident("case")) {
      lex_.next();
      TermPtr scrut = parse_term();
      expect_ident("of");
      expect_punct("{");
      expect_ident("inl");
      std::string x1 = expect_name();
      expect_punct("->");
      TermPtr br1 = parse_term();
      expect_punct(";");
      expect_ident("inr");
      std::string x2 = expect_name();
      expect_punct("->");
      TermPtr br2 = parse_term();
      expect_punct("}");
      return case_of(std::move(scrut), x1, std::move(br1), x2, std::move(br2), loc);
    }
    if (at_ident("if")) {
      lex_.next();
      TermPtr c = parse_term();
      expect_ident("then");
      TermPtr a = parse_term();
      expect_ident("else");
      TermPtr b = parse_term();
      return desugar_if(std::move(c), std::move(a), std::move(b), loc);
    }
    return parse_or();
  }

  TermPtr parse_or() {
    TermPtr t = parse_and();
    while (at_punct("|")) {
      SourceLoc loc = here();
      lex_.next();
      TermPtr rhs = parse_and();
      t = desugar_if(std::move(t), true_term(), std::move(rhs), loc);
    }
    return t;
  }

  TermPtr parse_and() {
    TermPtr t = parse_not();
    while (at_punct("&")) {
      SourceLoc loc = here();
      lex_.next();
      TermPtr rhs = parse_not();
      t = desugar_if(std::move(t), std::move(rhs), false_term(), loc);
    }
    return t;
  }

  TermPtr parse_not() {
    if (at_ident("not")) {
      SourceLoc loc = here();
      lex_.next();
      TermPtr t = parse_not();
      return desugar_if(std::move(t), false_term(), true_term(), loc);
    }
    return parse_app();
  }

  TermPtr parse_app() {
    SourceLoc loc = here();
    if (at_ident("fst")) {
      lex_.next();
      return proj1(parse_app(), loc);
    }
    if (at_ident("snd")) {
      lex_.next();
      return proj2(parse_app(), loc);
    }
    if (at_ident("inl")) {
      lex_.next();
      return inj1(parse_app(), loc);
    }
    if (at_ident("inr")) {
      lex_.next();
      return inj2(parse_app(), loc);
    }
    if (at_ident("absurd")) {
      lex_.next();
      return case_zero(parse_app(), loc);
    }
    return parse_atom();
  }

  Rat parse_rational_literal() {
    if (lex_.peek().kind != Token::Kind::Number) lex_.fail("expected rational literal");
    std::string num = lex_.next().text;
    if (at_punct("/")) {
      lex_.next();
      if (lex_.peek().kind != Token::Kind::Number) lex_.fail("expected denominator");
      num += "/" + lex_.next().text;
    }
    try {
      return parse_rational(num);
    } catch (const std::invalid_argument& e) {
      lex_.fail(e.what());
    }
  }

  int parse_nat() {
    if (lex_.peek().kind != Token::Kind::Number) lex_.fail("expected integer");
    Token t = lex_.next();
    if (t.text.find('.') != std::string::npos)
      throw ParseError("expected integer, found decimal", t.line, t.col);
    return std::stoi(t.text);
  }

  TermPtr parse_atom() {
    SourceLoc loc = here();
    const Token& tok = lex_.peek();
    if (tok.kind == Token::Kind::Punct && tok.text == "(") {
      lex_.next();
      if (at_punct(")")) {
        lex_.next();
        return unit_intro(loc);
      }
      TermPtr a = parse_term();
      if (at_punct(",")) {
        lex_.next();
        TermPtr b = parse_term();
        expect_punct(")");
        return pair(std::move(a), std::move(b), loc);
      }
      expect_punct(")");
      return a;
    }
    if (tok.kind == Token::Kind::Punct && tok.text == "[") return parse_matrix(loc);
    if (tok.kind != Token::Kind::Ident) lex_.fail("expected a term");
    if (tok.text == "true") {
      lex_.next();
      return inj1(unit_intro(), loc);
    }
    if (tok.text == "false") {
      lex_.next();
      return inj2(unit_intro(), loc);
    }
    if (tok.text == "new") {
      lex_.next();
      expect_punct("(");
      expect_punct(")");
      return const_app(ConstKind::New, unit_intro(), loc);
    }
    if (tok.text == "edge") {
      lex_.next();
      expect_punct("(");
      TermPtr a = parse_term();
      expect_punct(",");
      TermPtr b = parse_term();
      expect_punct(")");
      return edge_query(std::move(a), std::move(b), loc);
    }
    if (tok.text == "bernoulli") {
      lex_.next();
      expect_punct("(");
      Rat q = parse_rational_literal();
      expect_punct(")");
      if (!in_unit_interval(q))
        throw ParseError("bernoulli parameter outside [0,1]: " + rat_string(q), loc.line,
                         loc.col);
      return bernoulli(q, loc);
    }
    if (tok.text == "subm") return parse_subm(loc);
    if (is_keyword(tok.text)) lex_.fail("unexpected keyword '" + tok.text + "'");
    return var(lex_.next().text, loc);
  }

  // [[t11, t12], [t21, t22]]  ~>  flat row-major right-nested pairs
  TermPtr parse_matrix(SourceLoc loc) {
    expect_punct("[");
    std::vector<TermPtr> entries;
    std::size_t width = 0;
    bool first_row = true;
    while (true) {
      expect_punct("[");
      std::size_t row_len = 0;
      while (true) {
        entries.push_back(parse_term());
        ++row_len;
        if (at_punct(",")) {
          lex_.next();
          continue;
        }
        break;
      }
      expect_punct("]");
      if (first_row) {
        width = row_len;
        first_row = false;
      } else if (row_len != width) {
        throw ParseError("ragged matrix literal", loc.line, loc.col);
      }
      if (at_punct(",")) {
        lex_.next();
        continue;
      }
      break;
    }
    expect_punct("]");
    return nest_pairs(entries);
  }

  // Projection of entry e out of a right-nested tuple of length len.
  TermPtr tuple_proj(TermPtr t, int e, int len) {
    for (int i = 0; i < e; ++i) t = proj2(std::move(t));
    if (e < len - 1) t = proj1(std::move(t));
    return t;
  }

  // subm(t, n, [i, ...]): extract the submatrix of an n-by-n matrix at the
  // 1-based index set; expands to projections out of a let-bound copy.
  TermPtr parse_subm(SourceLoc loc) {
    lex_.next();
    expect_punct("(");
    TermPtr t = parse_term();
    expect_punct(",");
    int n = parse_nat();
    if (n < 1) throw ParseError("subm requires n >= 1", loc.line, loc.col);
    expect_punct(",");
    expect_punct("[");
    std::set<int> index_set;
    while (true) {
      int i = parse_nat();
      if (i < 1 || i > n)
        throw ParseError("subm index out of range: " + std::to_string(i), loc.line, loc.col);
      index_set.insert(i);
      if (at_punct(",")) {
        lex_.next();
        continue;
      }
      break;
    }
    expect_punct("]");
    expect_punct(")");
    auto fv = free_vars(t);
    std::string m;
    do {
      m = "_m" + std::to_string(fresh_++);
    } while (fv.count(m));
    std::vector<TermPtr> entries;
    for (int i : index_set)
      for (int j : index_set)
        entries.push_back(tuple_proj(var(m), (i - 1) * n + (j - 1), n * n));
    return let(m, std::move(t), nest_pairs(entries), loc);
  }

  Type parse_type() {
    Type t = parse_type_prod();
    if (at_punct("+")) {
      lex_.next();
      return Type::sum(t, parse_type());
    }
    return t;
  }

  Type parse_type_prod() {
    Type t = parse_type_atom();
    if (at_punct("*")) {
      lex_.next();
      return Type::prod(t, parse_type_prod());
    }
    return t;
  }

  Type parse_type_atom() {
    if (at_punct("(")) {
      lex_.next();
      Type t = parse_type();
      expect_punct(")");
      return t;
    }
    if (at_ident("unit")) {
      lex_.next();
      return Type::unit();
    }
    if (at_ident("void")) {
      lex_.next();
      return Type::empty();
    }
    if (at_ident("bool")) {
      lex_.next();
      return Type::boolean();
    }
    if (at_ident("vertex")) {
      lex_.next();
      return Type::vertex();
    }
    lex_.fail("expected a type");
  }

  Lexer lex_;
  int fresh_ = 0;
};

}  // namespace

TermPtr parse(const std::string& source) {
  Parser p(source);
  return p.parse_program();
}

Type parse_type(const std::string& source) {
  Parser p(source);
  return p.parse_type_program();
}

}  // namespace gppl::lang
