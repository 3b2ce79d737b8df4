#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace termweaver {

/// Interned identifier. Functor names and variable names share one table.
using Sym = std::uint32_t;

Sym intern(std::string_view name);
const std::string& sym_name(Sym s);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// First-order term. Variables carry a name; everything else is a functor
/// applied to arguments (constants are 0-ary functors, integers included).
/// Terms are immutable and freely shared.
struct Term {
  enum class Kind : std::uint8_t { Var, Fun };

  Kind kind;
  Sym sym;
  std::vector<TermPtr> args;
  bool ground;  // cached at construction
  int depth;    // max functor nesting, constants have depth 1

  Term(Kind k, Sym s, std::vector<TermPtr> a);
};

TermPtr mk_var(Sym name);
TermPtr mk_var(std::string_view name);
TermPtr mk_fun(Sym functor, std::vector<TermPtr> args = {});
TermPtr mk_fun(std::string_view functor, std::vector<TermPtr> args = {});
TermPtr mk_int(long long value);
TermPtr mk_nil();
TermPtr mk_cons(TermPtr head, TermPtr tail);
TermPtr mk_list(const std::vector<TermPtr>& items, TermPtr tail = nullptr);

bool is_var(const TermPtr& t);
bool is_fun(const TermPtr& t, std::string_view name, size_t arity);
bool is_nil(const TermPtr& t);
bool is_cons(const TermPtr& t);
/// Integer constants are 0-ary functors whose name is a decimal numeral.
std::optional<long long> int_value(const TermPtr& t);

bool term_eq(const TermPtr& a, const TermPtr& b);
/// Total deterministic order: vars before functors, then by name, arity, args.
int term_cmp(const TermPtr& a, const TermPtr& b);

struct TermLess {
  bool operator()(const TermPtr& a, const TermPtr& b) const { return term_cmp(a, b) < 0; }
};

void collect_vars(const TermPtr& t, std::vector<Sym>& out);
std::vector<Sym> vars_of(const TermPtr& t);

/// A literal is an atom with a sign; negative literals never head clauses.
struct Literal {
  bool positive = true;
  TermPtr atom;  // always Kind::Fun

  Literal() = default;
  Literal(bool pos, TermPtr a) : positive(pos), atom(std::move(a)) {}
};

bool literal_eq(const Literal& a, const Literal& b);

/// functor/arity pair naming a predicate
struct PredKey {
  Sym name = 0;
  int arity = 0;

  friend bool operator==(const PredKey&, const PredKey&) = default;
  friend auto operator<=>(const PredKey&, const PredKey&) = default;
};

PredKey rel(const Literal& l);
PredKey rel(const TermPtr& atom);
std::string pred_str(const PredKey& p);

struct Clause {
  Literal head;  // positive
  std::vector<Literal> body;
  int id = 0;    // 1-based position in source
  int line = 0;
};

using Query = std::vector<Literal>;

/// Idempotent substitution: domain variables never occur in range terms.
class Subst {
public:
  Subst() = default;

  bool empty() const { return map_.empty(); }
  size_t size() const { return map_.size(); }
  const std::map<Sym, TermPtr>& bindings() const { return map_; }

  /// Binds v := t, composing with the existing mapping so the result stays
  /// idempotent. Returns false if it would violate the occurs check.
  bool bind(Sym v, const TermPtr& t);

  TermPtr lookup(Sym v) const;

  TermPtr operator()(const TermPtr& t) const;
  Literal operator()(const Literal& l) const;
  Query operator()(const Query& q) const;
  Clause operator()(const Clause& c) const;

  /// this then other
  Subst composed(const Subst& other) const;
  Subst restricted_to(const std::vector<Sym>& vars) const;

  friend bool operator==(const Subst& a, const Subst& b);

private:
  std::map<Sym, TermPtr> map_;
};

/// Most general unifier with occurs check; failure is nullopt.
std::optional<Subst> mgu(const TermPtr& a, const TermPtr& b);

/// One-way matching: only variables of `pattern` may be bound.
std::optional<Subst> match(const TermPtr& pattern, const TermPtr& term);

/// Renames every variable in the clause using the supplied fresh-name source.
Clause rename_apart(const Clause& c, std::uint64_t& counter);
TermPtr rename_apart(const TermPtr& t, std::uint64_t& counter);

}  // namespace termweaver
