#include "mzv/parser.hpp"

#include <cctype>

#include "mzv/operators.hpp"

namespace mzv {

namespace {

struct Token {
  enum class Kind { number, word, ident, plus, minus, star, lparen, rparen, comma, end };
  Kind kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      const int line = line_, col = col_;
      if (pos_ >= text_.size()) {
        out.push_back({Token::Kind::end, "", line, col});
        return out;
      }
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back({Token::Kind::number, lex_number(), line, col});
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string ident = lex_ident();
        const bool word = ident.find_first_not_of("xy") == std::string::npos;
        out.push_back({word ? Token::Kind::word : Token::Kind::ident, std::move(ident), line, col});
      } else {
        Token::Kind kind;
        switch (c) {
          case '+': kind = Token::Kind::plus; break;
          case '-': kind = Token::Kind::minus; break;
          case '*': kind = Token::Kind::star; break;
          case '(': kind = Token::Kind::lparen; break;
          case ')': kind = Token::Kind::rparen; break;
          case ',': kind = Token::Kind::comma; break;
          default:
            throw ParseError("unexpected character '" + std::string(1, c) + "'", line, col);
        }
        advance();
        out.push_back({kind, std::string(1, c), line, col});
      }
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string lex_number() {
    std::string s;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      s += text_[pos_];
      advance();
    }
    if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      s += '/';
      advance();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        s += text_[pos_];
        advance();
      }
    }
    return s;
  }

  std::string lex_ident() {
    std::string s;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      s += text_[pos_];
      advance();
    }
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Expr run() {
    Expr e = parse_sum();
    expect(Token::Kind::end, "end of input");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  Token take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    const std::string found =
        at.kind == Token::Kind::end ? "end of input" : "'" + at.text + "'";
    throw ParseError(msg + ", found " + found, at.line, at.col);
  }

  Token expect(Token::Kind kind, const std::string& what) {
    if (peek().kind != kind) fail("expected " + what, peek());
    return take();
  }

  Expr parse_sum() {
    Expr sum;
    sum.kind = Expr::Kind::sum;
    int sign = 1;
    if (peek().kind == Token::Kind::minus) {
      take();
      sign = -1;
    }
    sum.children.push_back(parse_term());
    sum.signs.push_back(sign);
    while (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) {
      sign = take().kind == Token::Kind::plus ? 1 : -1;
      sum.children.push_back(parse_term());
      sum.signs.push_back(sign);
    }
    if (sum.children.size() == 1 && sum.signs[0] == 1) return std::move(sum.children[0]);
    return sum;
  }

  Expr parse_term() {
    if (peek().kind == Token::Kind::number) {
      Token num = take();
      Expr lit;
      lit.kind = Expr::Kind::number;
      lit.value = parse_rational(num.text);
      if (peek().kind != Token::Kind::star) return lit;  // bare rational
      take();
      Expr scale;
      scale.kind = Expr::Kind::scale;
      scale.value = lit.value;
      scale.children.push_back(parse_atom());
      return scale;
    }
    return parse_atom();
  }

  Expr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::word: {
        Expr e;
        e.kind = Expr::Kind::word;
        e.word = Word::from_string(take().text);
        return e;
      }
      case Token::Kind::lparen: {
        take();
        Expr e = parse_sum();
        expect(Token::Kind::rparen, "')'");
        return e;
      }
      case Token::Kind::ident:
        return parse_call();
      default:
        fail("expected a word, rational, function call or '('", t);
    }
  }

  long long parse_int_arg(const std::string& what) {
    Token t = expect(Token::Kind::number, what);
    if (t.text.find('/') != std::string::npos) fail("expected an integer for " + what, t);
    return std::stoll(t.text);
  }

  Expr parse_call() {
    Token name = take();
    Expr call;
    call.kind = Expr::Kind::call;
    call.func = name.text;
    expect(Token::Kind::lparen, "'(' after function name");
    if (name.text == "cc" || name.text == "sh" || name.text == "st") {
      call.children.push_back(parse_sum());
      expect(Token::Kind::comma, "','");
      call.children.push_back(parse_sum());
    } else if (name.text == "dn") {
      call.int_arg = parse_int_arg("derivation index");
      if (call.int_arg < 1) fail("derivation index must be positive", name);
      expect(Token::Kind::comma, "','");
      call.children.push_back(parse_sum());
    } else if (name.text == "d" || name.text == "phi" || name.text == "lx") {
      call.children.push_back(parse_sum());
    } else if (name.text == "pw") {
      call.children.push_back(parse_sum());
      expect(Token::Kind::comma, "','");
      call.int_arg = parse_int_arg("power exponent");
      if (call.int_arg < 0) fail("power exponent must be nonnegative", name);
      expect(Token::Kind::comma, "','");
      Token prod = expect(Token::Kind::ident, "product name (cc, sh or st)");
      if (prod.text == "cc" || prod.text == "concat")
        call.prod = ProductKind::concat;
      else if (prod.text == "sh" || prod.text == "shuffle")
        call.prod = ProductKind::shuffle;
      else if (prod.text == "st" || prod.text == "harmonic")
        call.prod = ProductKind::harmonic;
      else
        fail("unknown product name '" + prod.text + "'", prod);
    } else {
      fail("unknown function name '" + name.text + "'", name);
    }
    expect(Token::Kind::rparen, "')'");
    return call;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(Lexer(text).run()).run(); }

NCPoly evaluate(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number:
      return NCPoly(e.value);
    case Expr::Kind::word:
      return NCPoly::monomial(e.word);
    case Expr::Kind::sum: {
      NCPoly r;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (e.signs[i] > 0)
          r += evaluate(e.children[i]);
        else
          r -= evaluate(e.children[i]);
      }
      return r;
    }
    case Expr::Kind::scale:
      return e.value * evaluate(e.children[0]);
    case Expr::Kind::call: {
      if (e.func == "cc") return evaluate(e.children[0]) * evaluate(e.children[1]);
      if (e.func == "sh") return shuffle(evaluate(e.children[0]), evaluate(e.children[1]));
      if (e.func == "st") return harmonic(evaluate(e.children[0]), evaluate(e.children[1]));
      if (e.func == "dn")
        return partial_n(evaluate(e.children[0]), static_cast<unsigned>(e.int_arg));
      if (e.func == "d") return dmap(evaluate(e.children[0]));
      if (e.func == "phi") return phi(evaluate(e.children[0]));
      if (e.func == "lx") return Lx(evaluate(e.children[0]));
      if (e.func == "pw")
        return power(evaluate(e.children[0]), static_cast<unsigned>(e.int_arg), e.prod);
      throw std::logic_error("unknown call in AST: " + e.func);
    }
  }
  throw std::logic_error("malformed expression tree");
}

NCPoly parse_poly(std::string_view text) { return evaluate(parse_expr(text)); }

}  // namespace mzv
