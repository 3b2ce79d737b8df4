#include "termweaver/printer.hpp"

#include <sstream>

namespace termweaver {

namespace {

bool is_infix_functor(const std::string& n) {
  return n == "is" || n == "<" || n == "<=" || n == ">" || n == ">=" ||
         n == "+" || n == "-" || n == "*";
}

void print_term(std::ostream& os, const TermPtr& t) {
  if (t->kind == Term::Kind::Var) {
    os << sym_name(t->sym);
    return;
  }
  if (is_nil(t)) {
    os << "[]";
    return;
  }
  if (is_cons(t)) {
    os << '[';
    print_term(os, t->args[0]);
    TermPtr rest = t->args[1];
    while (is_cons(rest)) {
      os << ',';
      print_term(os, rest->args[0]);
      rest = rest->args[1];
    }
    if (!is_nil(rest)) {
      os << '|';
      print_term(os, rest);
    }
    os << ']';
    return;
  }
  const std::string& name = sym_name(t->sym);
  if (t->args.size() == 2 && is_infix_functor(name)) {
    bool arith = name == "+" || name == "-" || name == "*";
    if (arith) os << '(';
    print_term(os, t->args[0]);
    os << ' ' << name << ' ';
    print_term(os, t->args[1]);
    if (arith) os << ')';
    return;
  }
  os << name;
  if (!t->args.empty()) {
    os << '(';
    for (size_t i = 0; i < t->args.size(); ++i) {
      if (i) os << ',';
      print_term(os, t->args[i]);
    }
    os << ')';
  }
}

void print_literal(std::ostream& os, const Literal& l) {
  if (!l.positive) os << "\\+ ";
  print_term(os, l.atom);
}

void print_norm_form(std::ostream& os, const NormForm& f) {
  bool first = true;
  for (const auto& r : f.refs) {
    if (!first) os << " + ";
    first = false;
    if (r.coeff != 1) os << r.coeff << "*";
    os << norm_name(r.norm) << '(';
    print_term(os, r.arg);
    os << ')';
  }
  if (f.constant != 0 || first) {
    if (!first) os << " + ";
    os << f.constant;
  }
}

}  // namespace

std::string to_string(const TermPtr& t) {
  std::ostringstream os;
  print_term(os, t);
  return os.str();
}

std::string to_string(const Literal& l) {
  std::ostringstream os;
  print_literal(os, l);
  return os.str();
}

std::string to_string(const Clause& c) {
  std::ostringstream os;
  print_term(os, c.head.atom);
  if (!c.body.empty()) {
    os << " :- ";
    for (size_t i = 0; i < c.body.size(); ++i) {
      if (i) os << ", ";
      print_literal(os, c.body[i]);
    }
  }
  os << '.';
  return os.str();
}

std::string to_string(const Query& q) {
  std::ostringstream os;
  for (size_t i = 0; i < q.size(); ++i) {
    if (i) os << ", ";
    print_literal(os, q[i]);
  }
  os << '.';
  return os.str();
}

std::string to_string(const Subst& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [v, t] : s.bindings()) {
    if (!first) os << ", ";
    first = false;
    os << sym_name(v) << " -> ";
    print_term(os, t);
  }
  os << '}';
  return os.str();
}

std::string to_string(const LevelExpr& e, const TermPtr& head_pattern) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : e.terms) {
    if (!first) os << " + ";
    first = false;
    if (t.coeff != 1) os << t.coeff << "*";
    os << norm_name(t.norm) << '(';
    print_term(os, head_pattern->args.at(t.arg));
    os << ')';
  }
  if (e.constant != 0 || first) {
    if (!first) os << " + ";
    os << e.constant;
  }
  return os.str();
}

std::string to_string(const Program& p) {
  std::ostringstream os;
  for (const auto& [pred, mode] : p.modes) {
    os << ":- mode " << sym_name(pred.name) << '(';
    for (int i = 0; i < mode.arity(); ++i) {
      if (i) os << ',';
      os << (mode.is_input(i) ? '+' : '-');
    }
    os << ").\n";
  }
  for (const auto& [pred, tm] : p.typed_modes) {
    os << ":- type " << sym_name(pred.name) << '(';
    for (int i = 0; i < tm.arity(); ++i) {
      if (i) os << ',';
      os << (tm.is_input(i) ? '+' : '-') << ':' << type_str(tm.type(i));
    }
    os << ").\n";
  }
  for (const auto& [name, td] : p.typedefs) {
    os << ":- typedef " << sym_name(name) << " = ";
    for (size_t i = 0; i < td.alts.size(); ++i) {
      if (i) os << " | ";
      const TypedefAlt& alt = td.alts[i];
      if (alt.is_ctor) {
        os << sym_name(alt.ctor);
        if (!alt.ctor_args.empty()) {
          os << '(';
          for (size_t j = 0; j < alt.ctor_args.size(); ++j) {
            if (j) os << ',';
            os << type_str(alt.ctor_args[j]);
          }
          os << ')';
        }
      } else {
        os << type_str(alt.type);
      }
    }
    os << ".\n";
  }
  for (const auto& c : p.clauses) os << to_string(c) << '\n';
  for (const auto& m : p.modules) {
    os << ":- module " << sym_name(m.name) << ": ";
    for (size_t i = 0; i < m.preds.size(); ++i) {
      if (i) os << ", ";
      os << pred_str(m.preds[i]);
    }
    os << ".\n";
  }
  for (const auto& lm : p.levelmaps) {
    os << ":- levelmap " << sym_name(lm.module) << ": "
       << sym_name(lm.pred.name) << '(';
    std::vector<TermPtr> args;
    for (int i = 0; i < lm.pred.arity; ++i)
      args.push_back(mk_var("A" + std::to_string(i + 1)));
    TermPtr pattern = mk_fun(lm.pred.name, args);
    for (int i = 0; i < lm.pred.arity; ++i) {
      if (i) os << ',';
      os << "A" << (i + 1);
    }
    os << ") = " << to_string(lm.expr, pattern) << ".\n";
  }
  for (const auto& m : p.model_patterns) {
    os << ":- model ";
    print_term(os, m.atom);
    if (!m.constraints.empty()) {
      os << " when ";
      for (size_t i = 0; i < m.constraints.size(); ++i) {
        if (i) os << ", ";
        const ModelConstraint& c = m.constraints[i];
        if (c.kind == ModelConstraint::Kind::Groundness) {
          os << "ground(";
          print_term(os, c.ground_arg);
          os << ')';
        } else {
          print_norm_form(os, c.lhs);
          os << ' ' << cmp_str(c.op) << ' ';
          print_norm_form(os, c.rhs);
        }
      }
    }
    os << ".\n";
  }
  return os.str();
}

namespace {
void canon_term(std::ostream& os, const TermPtr& t, std::map<Sym, int>& ren) {
  if (t->kind == Term::Kind::Var) {
    auto [it, inserted] = ren.emplace(t->sym, static_cast<int>(ren.size() + 1));
    os << 'V' << it->second;
    return;
  }
  os << sym_name(t->sym);
  if (!t->args.empty()) {
    os << '(';
    for (size_t i = 0; i < t->args.size(); ++i) {
      if (i) os << ',';
      canon_term(os, t->args[i], ren);
    }
    os << ')';
  }
}
}  // namespace

std::string canonical_literal(const Literal& l) {
  std::ostringstream os;
  std::map<Sym, int> ren;
  if (!l.positive) os << "\\+ ";
  canon_term(os, l.atom, ren);
  return os.str();
}

std::string canonical_query(const Query& q) {
  std::ostringstream os;
  std::map<Sym, int> ren;
  for (size_t i = 0; i < q.size(); ++i) {
    if (i) os << ", ";
    if (!q[i].positive) os << "\\+ ";
    canon_term(os, q[i].atom, ren);
  }
  return os.str();
}

}  // namespace termweaver
