#include "orbtop/gcf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace orbtop {

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& q) {
  if (is_integral(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer parse_integer(const std::string& text) {
  Integer v;
  if (text.empty() || mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("malformed integer: '" + text + "'");
  return v;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return make_rational(num, den);
}

Gcf collatz_gcf() {
  Gcf g;
  g.modulus = 2;
  g.branches = {{make_rational(1, 2), Rational(0)}, {Rational(3), Rational(1)}};
  g.name = "collatz";
  return g;
}

Gcf successor_gcf() {
  Gcf g;
  g.modulus = 1;
  g.branches = {{Rational(1), Rational(1)}};
  g.name = "successor";
  return g;
}

namespace {

enum class Tok { Number, X, Mod, Colon, Plus, Minus, LParen, RParen, Slash, Sep, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_space_and_comments();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Tok::End, "", line, col};
    char c = src_[pos_];
    if (c == '\n' || c == ';') {
      advance();
      return {Tok::Sep, std::string(1, c), line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        num += src_[pos_];
        advance();
      }
      return {Tok::Number, num, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
        word += src_[pos_];
        advance();
      }
      if (word == "mod") return {Tok::Mod, word, line, col};
      if (word == "x") return {Tok::X, word, line, col};
      throw ParseError(line, col, "unexpected word '" + word + "'");
    }
    advance();
    switch (c) {
      case ':': return {Tok::Colon, ":", line, col};
      case '+': return {Tok::Plus, "+", line, col};
      case '-': return {Tok::Minus, "-", line, col};
      case '(': return {Tok::LParen, "(", line, col};
      case ')': return {Tok::RParen, ")", line, col};
      case '/': return {Tok::Slash, "/", line, col};
      default:
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else {
        return;
      }
    }
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) { bump(); }

  Gcf parse(const std::string& name) {
    Gcf g;
    g.name = name.empty() ? "gcf" : name;
    skip_seps();
    expect(Tok::Mod, "expected 'mod <m>'");
    bool neg = accept(Tok::Minus);
    Token m = expect(Tok::Number, "expected modulus after 'mod'");
    Integer mod = parse_integer(m.text);
    if (neg || mod <= 0) throw ParseError(m.line, m.col, "modulus must be positive");
    if (!mod.fits_ulong_p())
      throw ParseError(m.line, m.col, "modulus too large");
    g.modulus = mod.get_ui();
    g.branches.assign(g.modulus, GcfBranch{});
    std::vector<bool> seen(g.modulus, false);

    while (true) {
      if (cur_.kind != Tok::Sep && cur_.kind != Tok::End)
        throw ParseError(cur_.line, cur_.col, "expected end of declaration");
      skip_seps();
      if (cur_.kind == Tok::End) break;
      Token res = expect(Tok::Number, "expected residue declaration '<i>: ...'");
      Integer residue = parse_integer(res.text);
      if (residue >= Integer(static_cast<unsigned long>(g.modulus)))
        throw ParseError(res.line, res.col,
                         "residue " + residue.get_str() + " out of range 0.." +
                             std::to_string(g.modulus - 1));
      unsigned long i = residue.get_ui();
      if (seen[i])
        throw ParseError(res.line, res.col, "duplicate residue " + std::to_string(i));
      seen[i] = true;
      expect(Tok::Colon, "expected ':' after residue");
      g.branches[i] = parse_branch();
    }

    for (unsigned long i = 0; i < g.modulus; ++i)
      if (!seen[i])
        throw ParseError(1, 1, "missing residue " + std::to_string(i));
    return g;
  }

 private:
  GcfBranch parse_branch() {
    GcfBranch br;
    int sign = 1;
    while (accept(Tok::Minus)) sign = -sign;
    if (cur_.kind == Tok::X) {
      bump();
      br.a = Rational(sign);
    } else {
      Rational coeff = parse_number();
      expect(Tok::X, "expected 'x' after coefficient");
      br.a = sign * coeff;
    }
    if (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      int csign = cur_.kind == Tok::Minus ? -1 : 1;
      bump();
      while (accept(Tok::Minus)) csign = -csign;
      br.b = csign * parse_number();
    } else {
      br.b = Rational(0);
    }
    return br;
  }

  // NUMBER or ( [-] NUMBER / NUMBER )
  Rational parse_number() {
    if (cur_.kind == Tok::Number) {
      Rational v = Rational(parse_integer(cur_.text));
      bump();
      return v;
    }
    Token open = expect(Tok::LParen, "expected number or '(p/q)'");
    int sign = 1;
    while (accept(Tok::Minus)) sign = -sign;
    Token p = expect(Tok::Number, "expected numerator");
    expect(Tok::Slash, "expected '/' in rational");
    Token q = expect(Tok::Number, "expected denominator");
    expect(Tok::RParen, "expected ')'");
    (void)open;
    Integer den = parse_integer(q.text);
    if (den == 0) throw ParseError(q.line, q.col, "zero denominator");
    return make_rational(sign * parse_integer(p.text), den);
  }

  void skip_seps() {
    while (cur_.kind == Tok::Sep) bump();
  }

  Token expect(Tok kind, const std::string& msg) {
    if (cur_.kind != kind) throw ParseError(cur_.line, cur_.col, msg);
    Token t = cur_;
    bump();
    return t;
  }

  bool accept(Tok kind) {
    if (cur_.kind != kind) return false;
    bump();
    return true;
  }

  void bump() { cur_ = lex_.next(); }

  Lexer lex_;
  Token cur_{Tok::End, "", 0, 0};
};

std::string render_term(const Rational& v) {
  if (is_integral(v)) return v.get_num().get_str();
  return "(" + v.get_num().get_str() + "/" + v.get_den().get_str() + ")";
}

}  // namespace

Gcf parse_gcf(const std::string& text, const std::string& name) {
  return Parser(text).parse(name);
}

std::string render_gcf(const Gcf& g) {
  std::ostringstream out;
  out << "mod " << g.modulus << "\n";
  for (unsigned long i = 0; i < g.modulus; ++i) {
    const GcfBranch& br = g.branches[i];
    out << i << ": ";
    if (br.a == 1) {
      out << "x";
    } else if (br.a == -1) {
      out << "-x";
    } else {
      out << render_term(br.a) << "x";
    }
    if (br.b >= 0)
      out << " + " << render_term(br.b);
    else
      out << " - " << render_term(-br.b);
    out << "\n";
  }
  return out.str();
}

ValidationReport validate(const Gcf& g) {
  ValidationReport rep;
  if (g.modulus == 0 || g.branches.size() != g.modulus) {
    rep.reason = "modulus must be positive with one branch per residue";
    return rep;
  }
  const Integer m(static_cast<unsigned long>(g.modulus));
  for (unsigned long i = 0; i < g.modulus; ++i) {
    const Rational& a = g.branches[i].a;
    const Rational& b = g.branches[i].b;
    rep.residue = static_cast<int>(i);
    Integer x_min = (i == 0) ? m : Integer(static_cast<unsigned long>(i));

    if (a < 0) {
      rep.reason = "branch " + std::to_string(i) + " has negative coefficient " +
                   to_string(a);
      return rep;
    }

    // a*x + b is integral on the whole class iff a*m is integral and the
    // value at the least representative is.
    Rational step = a * Rational(m);
    Rational v0 = a * Rational(x_min) + b;
    if (!is_integral(v0) || !is_integral(step)) {
      Integer witness = is_integral(v0) ? Integer(x_min + m) : x_min;
      Rational value = a * Rational(witness) + b;
      rep.reason = "branch " + std::to_string(i) + " is non-integral: g(" +
                   witness.get_str() + ") = " + to_string(value);
      rep.witness = witness;
      rep.value_at_witness = value;
      return rep;
    }

    if (a == 0) {
      if (b < 1) {
        rep.reason = "branch " + std::to_string(i) + " is constant " + to_string(b) +
                     " which is not a positive integer";
        rep.witness = x_min;
        rep.value_at_witness = b;
        return rep;
      }
    } else if (v0 < 1) {
      // Monotone in x, so the least representative is the only candidate
      // that can fall below 1.
      rep.reason = "branch " + std::to_string(i) + " leaves the positive integers: g(" +
                   x_min.get_str() + ") = " + to_string(v0);
      rep.witness = x_min;
      rep.value_at_witness = v0;
      return rep;
    }
  }
  rep.accepted = true;
  rep.residue = -1;
  return rep;
}

Integer eval(const Gcf& g, const Integer& x) {
  unsigned long i = mpz_fdiv_ui(x.get_mpz_t(), g.modulus);
  Rational v = g.branches[i].a * Rational(x) + g.branches[i].b;
  if (!is_integral(v))
    throw std::logic_error("eval on non-validated function: g(" + x.get_str() +
                           ") = " + to_string(v));
  return numerator(v);
}

std::vector<Integer> preimage(const Gcf& g, const Integer& y) {
  std::vector<Integer> result;
  for (unsigned long i = 0; i < g.modulus; ++i) {
    const Rational& a = g.branches[i].a;
    const Rational& b = g.branches[i].b;
    if (a == 0) {
      if (b == Rational(y)) throw InfinitePreimageRisk(y);
      continue;
    }
    Rational x = (Rational(y) - b) / a;
    if (!is_integral(x)) continue;
    Integer xi = numerator(x);
    if (xi < 1) continue;
    if (mpz_fdiv_ui(xi.get_mpz_t(), g.modulus) == i) result.push_back(xi);
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace orbtop
