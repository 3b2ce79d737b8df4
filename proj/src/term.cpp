#include "termweaver/term.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace termweaver {

namespace {

struct SymbolTable {
  std::mutex mu;
  std::unordered_map<std::string_view, Sym> index;
  std::deque<std::string> names;  // deque keeps string_views stable

  Sym intern(std::string_view name) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    names.emplace_back(name);
    Sym id = static_cast<Sym>(names.size() - 1);
    index.emplace(names.back(), id);
    return id;
  }

  const std::string& name(Sym s) {
    std::lock_guard<std::mutex> lock(mu);
    return names.at(s);
  }
};

SymbolTable& table() {
  static SymbolTable t;
  return t;
}

}  // namespace

Sym intern(std::string_view name) { return table().intern(name); }
const std::string& sym_name(Sym s) { return table().name(s); }

Term::Term(Kind k, Sym s, std::vector<TermPtr> a)
    : kind(k), sym(s), args(std::move(a)) {
  if (kind == Kind::Var) {
    ground = false;
    depth = 1;
  } else {
    ground = true;
    depth = 1;
    for (const auto& arg : args) {
      ground = ground && arg->ground;
      depth = std::max(depth, arg->depth + 1);
    }
  }
}

TermPtr mk_var(Sym name) {
  return std::make_shared<Term>(Term::Kind::Var, name, std::vector<TermPtr>{});
}
TermPtr mk_var(std::string_view name) { return mk_var(intern(name)); }

TermPtr mk_fun(Sym functor, std::vector<TermPtr> args) {
  return std::make_shared<Term>(Term::Kind::Fun, functor, std::move(args));
}
TermPtr mk_fun(std::string_view functor, std::vector<TermPtr> args) {
  return mk_fun(intern(functor), std::move(args));
}

TermPtr mk_int(long long value) { return mk_fun(std::to_string(value)); }
TermPtr mk_nil() { return mk_fun("[]"); }
TermPtr mk_cons(TermPtr head, TermPtr tail) {
  return mk_fun(".", {std::move(head), std::move(tail)});
}

TermPtr mk_list(const std::vector<TermPtr>& items, TermPtr tail) {
  TermPtr t = tail ? tail : mk_nil();
  for (auto it = items.rbegin(); it != items.rend(); ++it) t = mk_cons(*it, t);
  return t;
}

bool is_var(const TermPtr& t) { return t->kind == Term::Kind::Var; }

bool is_fun(const TermPtr& t, std::string_view name, size_t arity) {
  return t->kind == Term::Kind::Fun && t->args.size() == arity &&
         sym_name(t->sym) == name;
}

bool is_nil(const TermPtr& t) { return is_fun(t, "[]", 0); }
bool is_cons(const TermPtr& t) { return is_fun(t, ".", 2); }

std::optional<long long> int_value(const TermPtr& t) {
  if (t->kind != Term::Kind::Fun || !t->args.empty()) return std::nullopt;
  const std::string& n = sym_name(t->sym);
  if (n.empty()) return std::nullopt;
  size_t start = (n[0] == '-') ? 1 : 0;
  if (start == n.size()) return std::nullopt;
  for (size_t i = start; i < n.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(n[i]))) return std::nullopt;
  long long v = 0;
  auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), v);
  if (ec != std::errc() || ptr != n.data() + n.size()) return std::nullopt;
  return v;
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind || a->sym != b->sym) return false;
  if (a->args.size() != b->args.size()) return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!term_eq(a->args[i], b->args[i])) return false;
  return true;
}

int term_cmp(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return a->kind == Term::Kind::Var ? -1 : 1;
  if (a->args.size() != b->args.size())
    return a->args.size() < b->args.size() ? -1 : 1;
  if (a->sym != b->sym) {
    int c = sym_name(a->sym).compare(sym_name(b->sym));
    if (c != 0) return c < 0 ? -1 : 1;
  }
  for (size_t i = 0; i < a->args.size(); ++i) {
    int c = term_cmp(a->args[i], b->args[i]);
    if (c != 0) return c;
  }
  return 0;
}

void collect_vars(const TermPtr& t, std::vector<Sym>& out) {
  if (t->kind == Term::Kind::Var) {
    if (std::find(out.begin(), out.end(), t->sym) == out.end())
      out.push_back(t->sym);
    return;
  }
  for (const auto& a : t->args) collect_vars(a, out);
}

std::vector<Sym> vars_of(const TermPtr& t) {
  std::vector<Sym> out;
  collect_vars(t, out);
  return out;
}

bool literal_eq(const Literal& a, const Literal& b) {
  return a.positive == b.positive && term_eq(a.atom, b.atom);
}

PredKey rel(const TermPtr& atom) {
  return PredKey{atom->sym, static_cast<int>(atom->args.size())};
}
PredKey rel(const Literal& l) { return rel(l.atom); }

std::string pred_str(const PredKey& p) {
  return sym_name(p.name) + "/" + std::to_string(p.arity);
}

namespace {
bool occurs(Sym v, const TermPtr& t) {
  if (t->kind == Term::Kind::Var) return t->sym == v;
  for (const auto& a : t->args)
    if (occurs(v, a)) return true;
  return false;
}
}  // namespace

bool Subst::bind(Sym v, const TermPtr& t) {
  TermPtr resolved = (*this)(t);
  if (resolved->kind == Term::Kind::Var && resolved->sym == v) return true;
  if (occurs(v, resolved)) return false;
  // substitute v inside existing ranges so the map stays idempotent
  Subst single;
  single.map_.emplace(v, resolved);
  for (auto& [key, val] : map_) val = single(val);
  map_[v] = resolved;
  return true;
}

TermPtr Subst::lookup(Sym v) const {
  auto it = map_.find(v);
  return it == map_.end() ? nullptr : it->second;
}

TermPtr Subst::operator()(const TermPtr& t) const {
  if (map_.empty() || t->ground) return t;
  if (t->kind == Term::Kind::Var) {
    auto it = map_.find(t->sym);
    return it == map_.end() ? t : it->second;
  }
  std::vector<TermPtr> args;
  args.reserve(t->args.size());
  bool changed = false;
  for (const auto& a : t->args) {
    TermPtr na = (*this)(a);
    changed = changed || na.get() != a.get();
    args.push_back(std::move(na));
  }
  if (!changed) return t;
  return mk_fun(t->sym, std::move(args));
}

Literal Subst::operator()(const Literal& l) const {
  return Literal(l.positive, (*this)(l.atom));
}

Query Subst::operator()(const Query& q) const {
  Query out;
  out.reserve(q.size());
  for (const auto& l : q) out.push_back((*this)(l));
  return out;
}

Clause Subst::operator()(const Clause& c) const {
  Clause out;
  out.head = (*this)(c.head);
  out.body = (*this)(c.body);
  out.id = c.id;
  out.line = c.line;
  return out;
}

Subst Subst::composed(const Subst& other) const {
  Subst out;
  for (const auto& [v, t] : map_) out.map_.emplace(v, other(t));
  for (const auto& [v, t] : other.map_)
    if (!out.map_.count(v)) out.map_.emplace(v, t);
  return out;
}

Subst Subst::restricted_to(const std::vector<Sym>& vars) const {
  Subst out;
  for (Sym v : vars) {
    auto it = map_.find(v);
    if (it != map_.end()) out.map_.emplace(v, it->second);
  }
  return out;
}

bool operator==(const Subst& a, const Subst& b) {
  if (a.map_.size() != b.map_.size()) return false;
  auto ia = a.map_.begin();
  auto ib = b.map_.begin();
  for (; ia != a.map_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !term_eq(ia->second, ib->second)) return false;
  }
  return true;
}

namespace {

bool unify_rec(const TermPtr& a, const TermPtr& b, Subst& s) {
  TermPtr ta = s(a);
  TermPtr tb = s(b);
  if (ta->kind == Term::Kind::Var) {
    if (tb->kind == Term::Kind::Var && ta->sym == tb->sym) return true;
    return s.bind(ta->sym, tb);
  }
  if (tb->kind == Term::Kind::Var) return s.bind(tb->sym, ta);
  if (ta->sym != tb->sym || ta->args.size() != tb->args.size()) return false;
  for (size_t i = 0; i < ta->args.size(); ++i)
    if (!unify_rec(ta->args[i], tb->args[i], s)) return false;
  return true;
}

bool match_rec(const TermPtr& pattern, const TermPtr& term, Subst& s) {
  if (pattern->kind == Term::Kind::Var) {
    TermPtr bound = s.lookup(pattern->sym);
    if (bound) return term_eq(bound, term);
    return s.bind(pattern->sym, term);
  }
  if (term->kind == Term::Kind::Var) return false;
  if (pattern->sym != term->sym || pattern->args.size() != term->args.size())
    return false;
  for (size_t i = 0; i < pattern->args.size(); ++i)
    if (!match_rec(pattern->args[i], term->args[i], s)) return false;
  return true;
}

}  // namespace

std::optional<Subst> mgu(const TermPtr& a, const TermPtr& b) {
  Subst s;
  if (!unify_rec(a, b, s)) return std::nullopt;
  return s;
}

std::optional<Subst> match(const TermPtr& pattern, const TermPtr& term) {
  Subst s;
  if (!match_rec(pattern, term, s)) return std::nullopt;
  return s;
}

TermPtr rename_apart(const TermPtr& t, std::uint64_t& counter) {
  Subst renaming;
  for (Sym v : vars_of(t))
    renaming.bind(v, mk_var("_G" + std::to_string(counter++)));
  return renaming(t);
}

Clause rename_apart(const Clause& c, std::uint64_t& counter) {
  std::vector<Sym> vs = vars_of(c.head.atom);
  for (const auto& l : c.body) collect_vars(l.atom, vs);
  Subst renaming;
  for (Sym v : vs) renaming.bind(v, mk_var("_G" + std::to_string(counter++)));
  return renaming(c);
}

}  // namespace termweaver
