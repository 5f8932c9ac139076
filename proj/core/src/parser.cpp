#include "fibcat/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace fibcat {

namespace {

enum class tk { ident, number, lparen, rparen, colon, assign, comma, arrow, eof };

struct token {
  tk k;
  std::string text;
  std::uint64_t num = 0;
  int line = 1, col = 1;
};

struct lexer {
  const std::string& src;
  std::size_t pos = 0;
  int line = 1, col = 1;
  std::vector<token> toks;

  explicit lexer(const std::string& s) : src(s) {}

  void bump(char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void run() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        bump(c);
        continue;
      }
      if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '-') {
        while (pos < src.size() && src[pos] != '\n') bump(src[pos]);
        continue;
      }
      int l = line, co = col;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::uint64_t v = 0;
        while (pos < src.size() &&
               std::isdigit(static_cast<unsigned char>(src[pos]))) {
          v = v * 10 + (src[pos] - '0');
          bump(src[pos]);
        }
        toks.push_back({tk::number, "", v, l, co});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string s;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) ||
                src[pos] == '_' || src[pos] == '\'')) {
          s += src[pos];
          bump(src[pos]);
        }
        toks.push_back({tk::ident, s, 0, l, co});
        continue;
      }
      switch (c) {
        case '(': toks.push_back({tk::lparen, "(", 0, l, co}); bump(c); break;
        case ')': toks.push_back({tk::rparen, ")", 0, l, co}); bump(c); break;
        case ',': toks.push_back({tk::comma, ",", 0, l, co}); bump(c); break;
        case ':':
          bump(c);
          if (pos < src.size() && src[pos] == '=') {
            bump('=');
            toks.push_back({tk::assign, ":=", 0, l, co});
          } else {
            toks.push_back({tk::colon, ":", 0, l, co});
          }
          break;
        case '=':
          bump(c);
          if (pos < src.size() && src[pos] == '>') {
            bump('>');
            toks.push_back({tk::arrow, "=>", 0, l, co});
          } else {
            throw parse_error("unexpected '='", l, co);
          }
          break;
        default:
          throw parse_error(std::string("unexpected character '") + c + "'", l,
                            co);
      }
    }
    toks.push_back({tk::eof, "", 0, line, col});
  }
};

bool is_keyword(const std::string& s) {
  static const char* kws[] = {"def",  "fun",    "Pi",    "Sig",    "El",
                              "Id",   "refl",   "J",     "zero",   "succ",
                              "natind", "Nat",  "Unit",  "tt",     "pair",
                              "fst",  "snd",    "cunit", "csigma", "cpi",
                              "cid",  "cnat",   "up",    "funext"};
  for (auto* k : kws)
    if (s == k) return true;
  if (s.size() >= 2 && s[0] == 'U' &&
      std::all_of(s.begin() + 1, s.end(),
                  [](char c) { return std::isdigit((unsigned char)c); }))
    return true;
  if (s.rfind("ua", 0) == 0 && s.size() > 2 &&
      std::all_of(s.begin() + 2, s.end(),
                  [](char c) { return std::isdigit((unsigned char)c); }))
    return true;
  if (s.rfind("trunc", 0) == 0 && s.size() > 5 &&
      std::all_of(s.begin() + 5, s.end(),
                  [](char c) { return std::isdigit((unsigned char)c); }))
    return true;
  return false;
}

struct parser {
  std::vector<token> toks;
  std::size_t at = 0;
  std::vector<std::string> scope; // innermost last
  std::map<std::string, term> globals;

  const token& peek() const { return toks[at]; }
  token next() { return toks[at++]; }
  [[noreturn]] void fail(const std::string& m) const {
    throw parse_error(m, peek().line, peek().col);
  }
  void expect(tk k, const char* what) {
    if (peek().k != k) fail(std::string("expected ") + what);
    ++at;
  }
  bool is_ident(const char* s) const {
    return peek().k == tk::ident && peek().text == s;
  }
  void keyword(const char* s) {
    if (!is_ident(s)) fail(std::string("expected '") + s + "'");
    ++at;
  }
  std::uint64_t number() {
    if (peek().k != tk::number) fail("expected a number");
    return next().num;
  }

  term var_or_global(const std::string& name) {
    for (std::size_t i = 0; i < scope.size(); ++i) {
      if (scope[scope.size() - 1 - i] == name)
        return t_var(static_cast<std::uint32_t>(i));
    }
    auto it = globals.find(name);
    if (it == globals.end()) fail("unbound name '" + name + "'");
    return shift(it->second, static_cast<int>(scope.size()));
  }

  // `(x y z)` unannotated binder pack of given arity (J/natind motives)
  term binder_pack(unsigned arity) {
    expect(tk::lparen, "'('");
    keyword("fun");
    expect(tk::lparen, "'('");
    std::vector<std::string> names;
    while (peek().k == tk::ident && !is_keyword(peek().text))
      names.push_back(next().text);
    if (names.size() != arity)
      fail("binder pack of arity " + std::to_string(arity));
    expect(tk::rparen, "')'");
    expect(tk::arrow, "'=>'");
    for (auto& n : names) scope.push_back(n);
    term body = parse_term();
    for (unsigned i = 0; i < arity; ++i) scope.pop_back();
    expect(tk::rparen, "')'");
    return body;
  }

  term parse_atom() {
    const token& t = peek();
    if (t.k == tk::lparen) {
      next();
      term e = parse_term();
      expect(tk::rparen, "')'");
      return e;
    }
    if (t.k != tk::ident) fail("expected a term");
    const std::string s = t.text;
    if (s == "zero") { next(); return t_zero(); }
    if (s == "tt") { next(); return t_tt(); }
    if (s == "Nat") { next(); return t_nat(); }
    if (s == "Unit") { next(); return t_unit(); }
    if (s.size() >= 2 && s[0] == 'U' &&
        std::all_of(s.begin() + 1, s.end(),
                    [](char c) { return std::isdigit((unsigned char)c); })) {
      next();
      return t_univ(static_cast<std::uint32_t>(std::stoul(s.substr(1))));
    }
    if (s.rfind("ua", 0) == 0 && s.size() > 2 &&
        std::all_of(s.begin() + 2, s.end(),
                    [](char c) { return std::isdigit((unsigned char)c); })) {
      next();
      return t_axiom(axk::ua, static_cast<std::uint32_t>(std::stoul(s.substr(2))), {});
    }
    if (s.rfind("trunc", 0) == 0 && s.size() > 5 &&
        std::all_of(s.begin() + 5, s.end(),
                    [](char c) { return std::isdigit((unsigned char)c); })) {
      next();
      return t_axiom(axk::trunc,
                     static_cast<std::uint32_t>(std::stoul(s.substr(5))), {});
    }
    if (is_keyword(s)) {
      // keyword-headed fixed-arity forms
      next();
      if (s == "succ") return t_succ(parse_atom());
      if (s == "refl") return t_refl(parse_atom());
      if (s == "fst") return t_fst(parse_atom());
      if (s == "snd") return t_snd(parse_atom());
      if (s == "El") return t_el(parse_atom());
      if (s == "pair") {
        term a = parse_atom();
        return t_pair(a, parse_atom());
      }
      if (s == "Id") {
        term ty = parse_atom();
        term l = parse_atom();
        return t_id(ty, l, parse_atom());
      }
      if (s == "J") {
        term motive = binder_pack(3);
        term base = binder_pack(1);
        term l = parse_atom();
        term r = parse_atom();
        return t_j(motive, base, l, r, parse_atom());
      }
      if (s == "natind") {
        term motive = binder_pack(1);
        term z = parse_atom();
        term step = binder_pack(2);
        return t_natind(motive, z, step, parse_atom());
      }
      if (s == "cunit") return t_cunit(static_cast<std::uint32_t>(number()));
      if (s == "cnat") return t_cnat(static_cast<std::uint32_t>(number()));
      if (s == "csigma" || s == "cpi") {
        auto l = static_cast<std::uint32_t>(number());
        term a = parse_atom();
        term b = parse_atom();
        return s == "csigma" ? t_csigma(l, a, b) : t_cpi(l, a, b);
      }
      if (s == "cid") {
        auto l = static_cast<std::uint32_t>(number());
        term a = parse_atom();
        term x = parse_atom();
        return t_cid(l, a, x, parse_atom());
      }
      if (s == "up") {
        auto l = static_cast<std::uint32_t>(number());
        return t_up(l, parse_atom());
      }
      if (s == "funext") {
        term A = parse_atom();
        // B is a one-variable family over A, written as a binder pack
        term B = binder_pack(1);
        term f = parse_atom();
        term g = parse_atom();
        term H = parse_atom();
        return t_axiom(axk::funext, 0, {A, B, f, g, H});
      }
      if (s == "fun" || s == "Pi" || s == "Sig")
        fail("binder form not allowed here; parenthesize");
      fail("unexpected keyword '" + s + "'");
    }
    next();
    return var_or_global(s);
  }

  term parse_term() {
    const token& t = peek();
    if (t.k == tk::ident && (t.text == "fun" || t.text == "Pi" || t.text == "Sig")) {
      std::string head = next().text;
      // one or more annotated binder groups
      std::vector<std::pair<std::string, term>> binders;
      while (peek().k == tk::lparen) {
        next();
        std::vector<std::string> names;
        while (peek().k == tk::ident && !is_keyword(peek().text))
          names.push_back(next().text);
        if (names.empty()) fail("expected binder name");
        expect(tk::colon, "':'");
        term ty = parse_term();
        expect(tk::rparen, "')'");
        for (auto& n : names) {
          binders.emplace_back(n, ty);
          scope.push_back(n);
          ty = shift(ty, 1); // subsequent same-group binders see one more var
        }
      }
      if (binders.empty()) fail("expected '('");
      if (head == "fun")
        expect(tk::arrow, "'=>'");
      else
        expect(tk::comma, "','");
      term body = parse_term();
      for (std::size_t i = binders.size(); i-- > 0;) {
        scope.pop_back();
        if (head == "fun")
          body = t_lam(binders[i].second, body);
        else if (head == "Pi")
          body = t_pi(binders[i].second, body);
        else
          body = t_sigma(binders[i].second, body);
      }
      return body;
    }
    term e = parse_atom();
    while (peek().k == tk::ident || peek().k == tk::lparen) {
      if (peek().k == tk::ident) {
        const std::string& s = peek().text;
        if (s == "def" || is_keyword(s)) {
          if (s == "def") break;
          // keyword-headed atoms may appear as arguments only in parens,
          // except nullary literals
          if (s == "zero" || s == "tt" || s == "Nat" || s == "Unit" ||
              (s[0] == 'U' && s.size() >= 2 &&
               std::isdigit((unsigned char)s[1])) ||
              s.rfind("ua", 0) == 0 || s.rfind("trunc", 0) == 0) {
            e = t_app(e, parse_atom());
            continue;
          }
          break;
        }
      }
      e = t_app(e, parse_atom());
    }
    return e;
  }
};

} // namespace

std::vector<decl> parse_file(const std::string& source) {
  lexer lx(source);
  lx.run();
  parser p;
  p.toks = std::move(lx.toks);
  std::vector<decl> out;
  while (p.peek().k != tk::eof) {
    p.keyword("def");
    if (p.peek().k != tk::ident || is_keyword(p.peek().text))
      p.fail("expected declaration name");
    std::string name = p.next().text;
    if (p.globals.count(name)) p.fail("duplicate name '" + name + "'");
    p.expect(tk::colon, "':'");
    term ty = p.parse_term();
    p.expect(tk::assign, "':='");
    term body = p.parse_term();
    out.push_back({name, ty, body});
    p.globals[name] = body;
  }
  return out;
}

term parse_term(const std::string& source) {
  lexer lx(source);
  lx.run();
  parser p;
  p.toks = std::move(lx.toks);
  term t = p.parse_term();
  if (p.peek().k != tk::eof) p.fail("trailing input");
  return t;
}

void check_decls(const checker& ck, const std::vector<decl>& ds) {
  context ctx;
  for (auto& d : ds) {
    ck.check_type(ctx, d.type);
    ck.check(ctx, d.body, d.type);
  }
}

std::string print_decl(const decl& d) {
  std::ostringstream o;
  o << "def " << d.name << " : " << show(d.type) << " := " << show(d.body);
  return o.str();
}

} // namespace fibcat
