#include "termweaver/parser.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace termweaver {

std::string to_string(const Diagnostic& d) {
  std::ostringstream os;
  os << d.line << ':' << d.col << ": " << d.message;
  return os.str();
}

namespace {

enum class Tok {
  Atom, Var, Int,
  LParen, RParen, LBracket, RBracket, Comma, Bar, Dot,
  Implies,   // :-
  Colon, Slash, Eq, Plus, Minus, Star,
  Lt, Le, Gt, Ge,
  Naf,       // \+
  End, Error
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  long long ivalue = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_space();
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) bump();
      tok_.kind = Tok::Int;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      tok_.ivalue = std::stoll(tok_.text);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        bump();
      tok_.text = std::string(src_.substr(start, pos_ - start));
      tok_.kind = (std::islower(static_cast<unsigned char>(c))) ? Tok::Atom : Tok::Var;
      return;
    }
    bump();
    switch (c) {
      case '(': tok_.kind = Tok::LParen; return;
      case ')': tok_.kind = Tok::RParen; return;
      case '[': tok_.kind = Tok::LBracket; return;
      case ']': tok_.kind = Tok::RBracket; return;
      case ',': tok_.kind = Tok::Comma; return;
      case '|': tok_.kind = Tok::Bar; return;
      case '.': tok_.kind = Tok::Dot; return;
      case '/': tok_.kind = Tok::Slash; return;
      case '=': tok_.kind = Tok::Eq; return;
      case '+': tok_.kind = Tok::Plus; return;
      case '-': tok_.kind = Tok::Minus; return;
      case '*': tok_.kind = Tok::Star; return;
      case ':':
        if (pos_ < src_.size() && src_[pos_] == '-') {
          bump();
          tok_.kind = Tok::Implies;
        } else {
          tok_.kind = Tok::Colon;
        }
        return;
      case '<':
        if (pos_ < src_.size() && src_[pos_] == '=') {
          bump();
          tok_.kind = Tok::Le;
        } else {
          tok_.kind = Tok::Lt;
        }
        return;
      case '>':
        if (pos_ < src_.size() && src_[pos_] == '=') {
          bump();
          tok_.kind = Tok::Ge;
        } else {
          tok_.kind = Tok::Gt;
        }
        return;
      case '\\':
        if (pos_ < src_.size() && src_[pos_] == '+') {
          bump();
          tok_.kind = Tok::Naf;
        } else {
          tok_.kind = Tok::Error;
          tok_.text = "\\";
        }
        return;
      default:
        tok_.kind = Tok::Error;
        tok_.text = std::string(1, c);
        return;
    }
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
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

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

struct ParseError {
  Diagnostic diag;
};

class Parser {
 public:
  Parser(std::string_view src, std::vector<Diagnostic>& diags)
      : lex_(src), diags_(diags) {}

  Program parse_program() {
    Program p;
    int next_id = 1;
    while (lex_.peek().kind != Tok::End) {
      try {
        if (lex_.peek().kind == Tok::Implies) {
          lex_.take();
          parse_directive(p);
        } else {
          Clause c = parse_clause();
          c.id = next_id++;
          p.clauses.push_back(std::move(c));
        }
      } catch (const ParseError& e) {
        diags_.push_back(e.diag);
        recover();
      }
    }
    resolve(p);
    return p;
  }

  Query parse_query() {
    Query q;
    try {
      if (lex_.peek().kind == Tok::Dot) {
        lex_.take();
        return q;
      }
      q.push_back(parse_literal());
      while (lex_.peek().kind == Tok::Comma) {
        lex_.take();
        q.push_back(parse_literal());
      }
      expect(Tok::Dot, "expected '.' at end of query");
      if (lex_.peek().kind != Tok::End)
        fail(lex_.peek(), "trailing input after query");
    } catch (const ParseError& e) {
      diags_.push_back(e.diag);
    }
    return q;
  }

 private:
  [[noreturn]] void fail(const Token& at, const std::string& msg) {
    throw ParseError{Diagnostic{at.line, at.col, msg}};
  }

  Token expect(Tok kind, const std::string& msg) {
    if (lex_.peek().kind != kind) fail(lex_.peek(), msg);
    return lex_.take();
  }

  void recover() {
    while (lex_.peek().kind != Tok::End) {
      if (lex_.take().kind == Tok::Dot) return;
    }
  }

  // ---- terms ----

  TermPtr parse_term() {  // comparison level
    TermPtr t = parse_add();
    Tok k = lex_.peek().kind;
    std::string op;
    if (k == Tok::Lt) op = "<";
    else if (k == Tok::Le) op = "<=";
    else if (k == Tok::Gt) op = ">";
    else if (k == Tok::Ge) op = ">=";
    else if (k == Tok::Atom && lex_.peek().text == "is") op = "is";
    else return t;
    lex_.take();
    TermPtr rhs = parse_add();
    return mk_fun(op, {t, rhs});
  }

  TermPtr parse_add() {
    TermPtr t = parse_mul();
    while (true) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Plus || k == Tok::Minus) {
        std::string op = k == Tok::Plus ? "+" : "-";
        lex_.take();
        t = mk_fun(op, {t, parse_mul()});
      } else {
        return t;
      }
    }
  }

  TermPtr parse_mul() {
    TermPtr t = parse_primary();
    while (lex_.peek().kind == Tok::Star) {
      lex_.take();
      t = mk_fun("*", {t, parse_primary()});
    }
    return t;
  }

  TermPtr parse_primary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Int: {
        Token tok = lex_.take();
        return mk_int(tok.ivalue);
      }
      case Tok::Minus: {
        Token minus = lex_.take();
        if (lex_.peek().kind != Tok::Int) fail(minus, "expected integer after '-'");
        Token tok = lex_.take();
        return mk_int(-tok.ivalue);
      }
      case Tok::Var: {
        Token tok = lex_.take();
        if (tok.text == "_")
          return mk_var("_A" + std::to_string(anon_counter_++));
        return mk_var(tok.text);
      }
      case Tok::Atom: {
        Token tok = lex_.take();
        if (lex_.peek().kind == Tok::LParen) {
          lex_.take();
          std::vector<TermPtr> args;
          args.push_back(parse_term());
          while (lex_.peek().kind == Tok::Comma) {
            lex_.take();
            args.push_back(parse_term());
          }
          expect(Tok::RParen, "expected ')' to close argument list");
          return mk_fun(tok.text, std::move(args));
        }
        return mk_fun(tok.text);
      }
      case Tok::LBracket: {
        lex_.take();
        if (lex_.peek().kind == Tok::RBracket) {
          lex_.take();
          return mk_nil();
        }
        std::vector<TermPtr> items;
        items.push_back(parse_term());
        while (lex_.peek().kind == Tok::Comma) {
          lex_.take();
          items.push_back(parse_term());
        }
        TermPtr tail = nullptr;
        if (lex_.peek().kind == Tok::Bar) {
          lex_.take();
          tail = parse_term();
        }
        expect(Tok::RBracket, "expected ']' to close list");
        return mk_list(items, tail);
      }
      case Tok::LParen: {
        lex_.take();
        TermPtr inner = parse_term();
        expect(Tok::RParen, "expected ')'");
        return inner;
      }
      default:
        fail(t, "expected a term");
    }
  }

  Literal parse_literal() {
    bool positive = true;
    if (lex_.peek().kind == Tok::Naf) {
      lex_.take();
      positive = false;
    }
    Token at = lex_.peek();
    TermPtr atom = parse_term();
    if (atom->kind != Term::Kind::Fun)
      fail(at, "literal must be an atom, not a variable");
    return Literal(positive, atom);
  }

  Clause parse_clause() {
    Token at = lex_.peek();
    Clause c;
    c.line = at.line;
    TermPtr head = parse_term();
    if (head->kind != Term::Kind::Fun)
      fail(at, "clause head must be an atom");
    c.head = Literal(true, head);
    if (lex_.peek().kind == Tok::Implies) {
      lex_.take();
      c.body.push_back(parse_literal());
      while (lex_.peek().kind == Tok::Comma) {
        lex_.take();
        c.body.push_back(parse_literal());
      }
    }
    expect(Tok::Dot, "expected '.' at end of clause");
    return c;
  }

  // ---- directives ----

  void parse_directive(Program& p) {
    Token kw = expect(Tok::Atom, "expected directive keyword after ':-'");
    if (kw.text == "mode") parse_mode(p);
    else if (kw.text == "type") parse_type(p);
    else if (kw.text == "typedef") parse_typedef(p);
    else if (kw.text == "module") parse_module(p);
    else if (kw.text == "levelmap") parse_levelmap(p);
    else if (kw.text == "model") parse_model(p);
    else fail(kw, "unknown directive '" + kw.text + "'");
  }

  void parse_mode(Program& p) {
    Token name = expect(Tok::Atom, "expected predicate name in mode directive");
    expect(Tok::LParen, "expected '(' in mode directive");
    Mode m;
    while (true) {
      Token t = lex_.take();
      if (t.kind == Tok::Plus) m.input.push_back(true);
      else if (t.kind == Tok::Minus) m.input.push_back(false);
      else fail(t, "expected '+' or '-' in mode directive");
      if (lex_.peek().kind != Tok::Comma) break;
      lex_.take();
    }
    expect(Tok::RParen, "expected ')' in mode directive");
    expect(Tok::Dot, "expected '.' after directive");
    PredKey key{intern(name.text), m.arity()};
    if (auto bm = builtin_mode(key)) {
      if (bm->input != m.input)
        diags_.push_back({name.line, name.col,
                          "mode for builtin " + pred_str(key) + " conflicts with its fixed mode"});
      return;  // builtin modes are implicit
    }
    if (p.modes.count(key))
      diags_.push_back({name.line, name.col, "duplicate mode declaration for " + pred_str(key)});
    else
      p.modes.emplace(key, std::move(m));
  }

  TypeExpr parse_type_expr() {
    Token t = expect(Tok::Atom, "expected a type expression");
    if (t.text == "any") return TypeExpr::any();
    if (t.text == "ground") return TypeExpr::ground();
    if (t.text == "nat") return TypeExpr::nat();
    if (t.text == "int") return TypeExpr::int_();
    if (t.text == "list") {
      expect(Tok::LParen, "expected '(' after list");
      TypeExpr elem = parse_type_expr();
      expect(Tok::RParen, "expected ')' after list element type");
      return TypeExpr::list(std::move(elem));
    }
    if (lex_.peek().kind == Tok::LParen)
      fail(t, "unknown type constructor '" + t.text + "'");
    return TypeExpr::ref(intern(t.text));
  }

  void parse_type(Program& p) {
    Token name = expect(Tok::Atom, "expected predicate name in type directive");
    expect(Tok::LParen, "expected '(' in type directive");
    TypedMode tm;
    while (true) {
      Token t = lex_.take();
      bool input;
      if (t.kind == Tok::Plus) input = true;
      else if (t.kind == Tok::Minus) input = false;
      else fail(t, "expected '+' or '-' in type directive");
      expect(Tok::Colon, "expected ':' between mode and type");
      tm.positions.emplace_back(input, parse_type_expr());
      if (lex_.peek().kind != Tok::Comma) break;
      lex_.take();
    }
    expect(Tok::RParen, "expected ')' in type directive");
    expect(Tok::Dot, "expected '.' after directive");
    PredKey key{intern(name.text), tm.arity()};
    if (is_builtin(key)) {
      diags_.push_back({name.line, name.col,
                        "builtin " + pred_str(key) + " has a fixed typed mode"});
      return;
    }
    if (p.typed_modes.count(key)) {
      diags_.push_back({name.line, name.col, "duplicate type declaration for " + pred_str(key)});
      return;
    }
    auto it = p.modes.find(key);
    if (it != p.modes.end() && it->second.input != tm.mode().input)
      diags_.push_back({name.line, name.col,
                        "type declaration for " + pred_str(key) + " disagrees with its mode"});
    p.typed_modes.emplace(key, std::move(tm));
  }

  void parse_typedef(Program& p) {
    Token name = expect(Tok::Atom, "expected typedef name");
    expect(Tok::Eq, "expected '=' in typedef");
    Typedef td;
    td.name = intern(name.text);
    while (true) {
      Token t = expect(Tok::Atom, "expected typedef alternative");
      TypedefAlt alt;
      if (t.text == "any" || t.text == "ground" || t.text == "nat" ||
          t.text == "int" || t.text == "list") {
        // re-parse as a type expression
        alt.is_ctor = false;
        if (t.text == "list") {
          expect(Tok::LParen, "expected '(' after list");
          TypeExpr elem = parse_type_expr();
          expect(Tok::RParen, "expected ')'");
          alt.type = TypeExpr::list(std::move(elem));
        } else if (t.text == "any") alt.type = TypeExpr::any();
        else if (t.text == "ground") alt.type = TypeExpr::ground();
        else if (t.text == "nat") alt.type = TypeExpr::nat();
        else alt.type = TypeExpr::int_();
      } else {
        alt.is_ctor = true;
        alt.ctor = intern(t.text);
        if (lex_.peek().kind == Tok::LParen) {
          lex_.take();
          alt.ctor_args.push_back(parse_type_expr());
          while (lex_.peek().kind == Tok::Comma) {
            lex_.take();
            alt.ctor_args.push_back(parse_type_expr());
          }
          expect(Tok::RParen, "expected ')' after constructor arguments");
        }
      }
      td.alts.push_back(std::move(alt));
      if (lex_.peek().kind != Tok::Bar) break;
      lex_.take();
    }
    expect(Tok::Dot, "expected '.' after directive");
    if (p.typedefs.count(td.name))
      diags_.push_back({name.line, name.col, "duplicate typedef '" + name.text + "'"});
    else
      p.typedefs.emplace(td.name, std::move(td));
  }

  void parse_module(Program& p) {
    Token name = expect(Tok::Atom, "expected module name");
    expect(Tok::Colon, "expected ':' after module name");
    ModuleDecl m;
    m.name = intern(name.text);
    m.line = name.line;
    while (true) {
      Token pn = expect(Tok::Atom, "expected predicate indicator");
      expect(Tok::Slash, "expected '/' in predicate indicator");
      Token ar = expect(Tok::Int, "expected arity");
      m.preds.push_back(PredKey{intern(pn.text), static_cast<int>(ar.ivalue)});
      if (lex_.peek().kind != Tok::Comma) break;
      lex_.take();
    }
    expect(Tok::Dot, "expected '.' after directive");
    for (const auto& existing : p.modules)
      if (existing.name == m.name)
        diags_.push_back({name.line, name.col, "duplicate module '" + name.text + "'"});
    p.modules.push_back(std::move(m));
  }

  void parse_levelmap(Program& p) {
    Token mod = expect(Tok::Atom, "expected module name in levelmap");
    expect(Tok::Colon, "expected ':' after module name");
    Token pn = expect(Tok::Atom, "expected predicate pattern");
    std::vector<Sym> argvars;
    if (lex_.peek().kind == Tok::LParen) {
      lex_.take();
      while (true) {
        Token v = expect(Tok::Var, "levelmap pattern arguments must be distinct variables");
        Sym s = intern(v.text);
        for (Sym seen : argvars)
          if (seen == s) fail(v, "repeated variable in levelmap pattern");
        argvars.push_back(s);
        if (lex_.peek().kind != Tok::Comma) break;
        lex_.take();
      }
      expect(Tok::RParen, "expected ')'");
    }
    expect(Tok::Eq, "expected '=' in levelmap");
    LevelMapDecl decl;
    decl.module = intern(mod.text);
    decl.pred = PredKey{intern(pn.text), static_cast<int>(argvars.size())};
    decl.line = mod.line;
    // linear expression: summands are INT, INT*norm(V) or norm(V)
    while (true) {
      Token t = lex_.take();
      if (t.kind == Tok::Int) {
        if (lex_.peek().kind == Tok::Star) {
          lex_.take();
          Token nt = expect(Tok::Atom, "expected norm after coefficient");
          decl.expr.terms.push_back(parse_norm_term(nt, argvars, t.ivalue));
        } else {
          decl.expr.constant += t.ivalue;
        }
      } else if (t.kind == Tok::Atom) {
        decl.expr.terms.push_back(parse_norm_term(t, argvars, 1));
      } else {
        fail(t, "expected norm application or constant in level expression");
      }
      if (lex_.peek().kind != Tok::Plus) break;
      lex_.take();
    }
    expect(Tok::Dot, "expected '.' after directive");
    p.levelmaps.push_back(std::move(decl));
  }

  LevelExpr::NormTerm parse_norm_term(const Token& nt, const std::vector<Sym>& argvars,
                                      long long coeff) {
    NormKind norm;
    if (nt.text == "len") norm = NormKind::Len;
    else if (nt.text == "size") norm = NormKind::Size;
    else fail(nt, "unknown norm '" + nt.text + "' (expected len or size)");
    expect(Tok::LParen, "expected '(' after norm");
    Token v = expect(Tok::Var, "norm argument must be a pattern variable");
    Sym s = intern(v.text);
    int arg = -1;
    for (size_t i = 0; i < argvars.size(); ++i)
      if (argvars[i] == s) arg = static_cast<int>(i);
    if (arg < 0) fail(v, "norm argument '" + v.text + "' is not a pattern variable");
    expect(Tok::RParen, "expected ')'");
    if (coeff < 0) fail(nt, "level expression coefficients must be nonnegative");
    return LevelExpr::NormTerm{norm, arg, coeff};
  }

  NormForm parse_norm_form() {
    NormForm f;
    while (true) {
      Token t = lex_.take();
      if (t.kind == Tok::Int) {
        if (lex_.peek().kind == Tok::Star) {
          lex_.take();
          Token nt = expect(Tok::Atom, "expected norm after coefficient");
          f.refs.push_back(parse_norm_ref(nt, t.ivalue));
        } else {
          f.constant += t.ivalue;
        }
      } else if (t.kind == Tok::Atom && (t.text == "len" || t.text == "size")) {
        f.refs.push_back(parse_norm_ref(t, 1));
      } else {
        fail(t, "expected norm application or constant");
      }
      if (lex_.peek().kind != Tok::Plus) break;
      lex_.take();
    }
    return f;
  }

  NormForm::NormRef parse_norm_ref(const Token& nt, long long coeff) {
    NormKind norm = nt.text == "len" ? NormKind::Len : NormKind::Size;
    expect(Tok::LParen, "expected '(' after norm");
    TermPtr arg = parse_term();
    expect(Tok::RParen, "expected ')'");
    return NormForm::NormRef{norm, arg, coeff};
  }

  void parse_model(Program& p) {
    Token at = lex_.peek();
    TermPtr pattern = parse_term();
    if (pattern->kind != Term::Kind::Fun)
      fail(at, "model pattern must be an atom");
    ModelPattern mp;
    mp.atom = pattern;
    mp.line = at.line;
    if (lex_.peek().kind == Tok::Atom && lex_.peek().text == "when") {
      lex_.take();
      while (true) {
        ModelConstraint c;
        if (lex_.peek().kind == Tok::Atom && lex_.peek().text == "ground") {
          lex_.take();
          expect(Tok::LParen, "expected '(' after ground");
          c.kind = ModelConstraint::Kind::Groundness;
          c.ground_arg = parse_term();
          expect(Tok::RParen, "expected ')'");
        } else {
          c.kind = ModelConstraint::Kind::Compare;
          c.lhs = parse_norm_form();
          Token op = lex_.take();
          switch (op.kind) {
            case Tok::Lt: c.op = CmpOp::Lt; break;
            case Tok::Le: c.op = CmpOp::Le; break;
            case Tok::Gt: c.op = CmpOp::Gt; break;
            case Tok::Ge: c.op = CmpOp::Ge; break;
            case Tok::Eq: c.op = CmpOp::Eq; break;
            default: fail(op, "expected comparison operator in model constraint");
          }
          c.rhs = parse_norm_form();
        }
        mp.constraints.push_back(std::move(c));
        if (lex_.peek().kind != Tok::Comma) break;
        lex_.take();
      }
    }
    expect(Tok::Dot, "expected '.' after directive");
    p.model_patterns.push_back(std::move(mp));
  }

  // ---- post-parse resolution ----

  void check_type_expr(const Program& p, const TypeExpr& t, int line) {
    if (t.tag == TypeTag::List) {
      check_type_expr(p, *t.elem, line);
    } else if (t.tag == TypeTag::Ref && !p.typedefs.count(t.name)) {
      diags_.push_back({line, 1, "unknown type '" + sym_name(t.name) + "'"});
    }
  }

  void resolve(Program& p) {
    // a bare typedef alternative naming another typedef is a reference
    for (auto& [name, td] : p.typedefs) {
      for (auto& alt : td.alts) {
        if (alt.is_ctor && alt.ctor_args.empty() && p.typedefs.count(alt.ctor)) {
          alt.is_ctor = false;
          alt.type = TypeExpr::ref(alt.ctor);
        }
      }
    }
    for (const auto& [pred, tm] : p.typed_modes)
      for (const auto& [in, ty] : tm.positions) check_type_expr(p, ty, 1);
    for (const auto& [name, td] : p.typedefs)
      for (const auto& alt : td.alts) {
        if (alt.is_ctor)
          for (const auto& ty : alt.ctor_args) check_type_expr(p, ty, 1);
        else
          check_type_expr(p, alt.type, 1);
      }

    std::set<PredKey> defined = p.defined_preds();
    std::set<PredKey> assigned;
    for (const auto& m : p.modules) {
      for (const auto& pk : m.preds) {
        if (!defined.count(pk))
          diags_.push_back({m.line, 1,
                            "module '" + sym_name(m.name) + "' assigns undefined predicate " +
                                pred_str(pk)});
        if (!assigned.insert(pk).second)
          diags_.push_back({m.line, 1,
                            "predicate " + pred_str(pk) + " assigned to more than one module"});
      }
    }
    std::set<Sym> module_names;
    for (const auto& m : p.modules) module_names.insert(m.name);
    for (const auto& lm : p.levelmaps) {
      if (!module_names.count(lm.module))
        diags_.push_back({lm.line, 1,
                          "level map references undeclared module '" + sym_name(lm.module) + "'"});
    }
  }

  Lexer lex_;
  std::vector<Diagnostic>& diags_;
  std::uint64_t anon_counter_ = 1;
};

}  // namespace

ParseResult parse_program(std::string_view text) {
  ParseResult r;
  Parser parser(text, r.diagnostics);
  Program p = parser.parse_program();
  if (r.diagnostics.empty()) r.program = std::move(p);
  return r;
}

QueryParseResult parse_query(std::string_view text) {
  QueryParseResult r;
  Parser parser(text, r.diagnostics);
  Query q = parser.parse_query();
  if (r.diagnostics.empty()) r.query = std::move(q);
  return r;
}

namespace {
[[noreturn]] void throw_diags(const std::vector<Diagnostic>& diags) {
  std::ostringstream os;
  os << "parse failed:";
  for (const auto& d : diags) os << "\n  " << to_string(d);
  throw std::runtime_error(os.str());
}
}  // namespace

Program parse_program_or_throw(std::string_view text) {
  ParseResult r = parse_program(text);
  if (!r.ok()) throw_diags(r.diagnostics);
  return std::move(*r.program);
}

Query parse_query_or_throw(std::string_view text) {
  QueryParseResult r = parse_query(text);
  if (!r.ok()) throw_diags(r.diagnostics);
  return std::move(*r.query);
}

}  // namespace termweaver
