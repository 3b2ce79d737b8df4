#include "termweaver/program.hpp"

namespace termweaver {

bool type_eq(const TypeExpr& a, const TypeExpr& b) {
  if (a.tag != b.tag) return false;
  switch (a.tag) {
    case TypeTag::List: return type_eq(*a.elem, *b.elem);
    case TypeTag::Ref: return a.name == b.name;
    default: return true;
  }
}

std::string type_str(const TypeExpr& t) {
  switch (t.tag) {
    case TypeTag::Any: return "any";
    case TypeTag::Ground: return "ground";
    case TypeTag::Nat: return "nat";
    case TypeTag::Int: return "int";
    case TypeTag::List: return "list(" + type_str(*t.elem) + ")";
    case TypeTag::Ref: return sym_name(t.name);
  }
  return "?";
}

std::string norm_name(NormKind n) { return n == NormKind::Len ? "len" : "size"; }

std::string cmp_str(CmpOp op) {
  switch (op) {
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
    case CmpOp::Eq: return "=";
  }
  return "?";
}

std::set<PredKey> Program::defined_preds() const {
  std::set<PredKey> out;
  for (const auto& c : clauses) out.insert(rel(c.head));
  return out;
}

std::set<PredKey> Program::all_preds() const {
  std::set<PredKey> out;
  for (const auto& c : clauses) {
    out.insert(rel(c.head));
    for (const auto& l : c.body) out.insert(rel(l));
  }
  return out;
}

std::vector<const Clause*> Program::clauses_of(const PredKey& p) const {
  std::vector<const Clause*> out;
  for (const auto& c : clauses)
    if (rel(c.head) == p) out.push_back(&c);
  return out;
}

std::optional<Mode> Program::mode_of(const PredKey& p) const {
  auto it = modes.find(p);
  if (it != modes.end()) return it->second;
  auto jt = typed_modes.find(p);
  if (jt != typed_modes.end()) return jt->second.mode();
  return builtin_mode(p);
}

std::optional<TypedMode> Program::typed_mode_of(const PredKey& p) const {
  auto it = typed_modes.find(p);
  if (it != typed_modes.end()) return it->second;
  return builtin_typed_mode(p);
}

const Typedef* Program::find_typedef(Sym name) const {
  auto it = typedefs.find(name);
  return it == typedefs.end() ? nullptr : &it->second;
}

namespace {
void collect_functors(const TermPtr& t, std::map<Sym, std::set<int>>& out) {
  if (t->kind == Term::Kind::Var) return;
  out[t->sym].insert(static_cast<int>(t->args.size()));
  for (const auto& a : t->args) collect_functors(a, out);
}
}  // namespace

std::map<Sym, std::set<int>> Program::signature() const {
  std::map<Sym, std::set<int>> out;
  for (const auto& c : clauses) {
    for (const auto& a : c.head.atom->args) collect_functors(a, out);
    for (const auto& l : c.body)
      for (const auto& a : l.atom->args) collect_functors(a, out);
  }
  for (const auto& m : model_patterns)
    for (const auto& a : m.atom->args) collect_functors(a, out);
  return out;
}

bool is_builtin(const PredKey& p) {
  if (p.arity != 2) return false;
  const std::string& n = sym_name(p.name);
  return n == "is" || n == "<" || n == "<=" || n == ">";
}

std::optional<Mode> builtin_mode(const PredKey& p) {
  if (!is_builtin(p)) return std::nullopt;
  Mode m;
  if (sym_name(p.name) == "is")
    m.input = {false, true};
  else
    m.input = {true, true};
  return m;
}

std::optional<TypedMode> builtin_typed_mode(const PredKey& p) {
  if (!is_builtin(p)) return std::nullopt;
  TypedMode tm;
  if (sym_name(p.name) == "is") {
    // the right-hand side is an arithmetic expression; groundness is what
    // evaluation needs, int is what it produces
    tm.positions = {{false, TypeExpr::int_()}, {true, TypeExpr::ground()}};
  } else {
    tm.positions = {{true, TypeExpr::int_()}, {true, TypeExpr::int_()}};
  }
  return tm;
}

}  // namespace termweaver
