#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "termweaver/term.hpp"

namespace termweaver {

// ---- modes and types --------------------------------------------------

/// Per-position dataflow tag: true = input (+), false = output (-).
struct Mode {
  std::vector<bool> input;

  int arity() const { return static_cast<int>(input.size()); }
  bool is_input(int pos) const { return input.at(pos); }  // 0-based
};

enum class TypeTag { Any, Ground, Nat, Int, List, Ref };

/// Type expressions: any | ground | nat | int | list(T) | typedef name.
/// All denote term sets closed under substitution.
struct TypeExpr {
  TypeTag tag = TypeTag::Any;
  std::shared_ptr<TypeExpr> elem;  // for List
  Sym name = 0;                    // for Ref

  static TypeExpr any() { return TypeExpr{TypeTag::Any, nullptr, 0}; }
  static TypeExpr ground() { return TypeExpr{TypeTag::Ground, nullptr, 0}; }
  static TypeExpr nat() { return TypeExpr{TypeTag::Nat, nullptr, 0}; }
  static TypeExpr int_() { return TypeExpr{TypeTag::Int, nullptr, 0}; }
  static TypeExpr list(TypeExpr e) {
    return TypeExpr{TypeTag::List, std::make_shared<TypeExpr>(std::move(e)), 0};
  }
  static TypeExpr ref(Sym n) { return TypeExpr{TypeTag::Ref, nullptr, n}; }
};

bool type_eq(const TypeExpr& a, const TypeExpr& b);
std::string type_str(const TypeExpr& t);

/// Mode plus a type per position, as in p(+:list(any), -:nat).
struct TypedMode {
  std::vector<std::pair<bool, TypeExpr>> positions;

  int arity() const { return static_cast<int>(positions.size()); }
  bool is_input(int pos) const { return positions.at(pos).first; }
  const TypeExpr& type(int pos) const { return positions.at(pos).second; }
  Mode mode() const {
    Mode m;
    for (const auto& [in, ty] : positions) m.input.push_back(in);
    return m;
  }
};

/// One alternative of a typedef: either a constructor pattern with typed
/// argument slots, or a plain type expression.
struct TypedefAlt {
  bool is_ctor = false;
  Sym ctor = 0;
  std::vector<TypeExpr> ctor_args;
  TypeExpr type;  // when !is_ctor
};

struct Typedef {
  Sym name = 0;
  std::vector<TypedefAlt> alts;
};

// ---- level mapping expressions ----------------------------------------

enum class NormKind { Len, Size };

std::string norm_name(NormKind n);

/// c0 + sum of coeff * norm(arg position); coefficients are nonnegative.
struct LevelExpr {
  struct NormTerm {
    NormKind norm;
    int arg;  // 0-based argument position
    long long coeff;
  };
  long long constant = 0;
  std::vector<NormTerm> terms;

  bool is_constant() const { return terms.empty(); }
};

struct LevelMapDecl {
  Sym module = 0;
  PredKey pred;
  LevelExpr expr;
  int line = 0;
};

// ---- model declarations ------------------------------------------------

/// Linear form over norm applications to (sub)terms of a model pattern.
struct NormForm {
  struct NormRef {
    NormKind norm;
    TermPtr arg;  // term over the pattern's variables
    long long coeff;
  };
  long long constant = 0;
  std::vector<NormRef> refs;
};

enum class CmpOp { Lt, Le, Gt, Ge, Eq };

std::string cmp_str(CmpOp op);

struct ModelConstraint {
  enum class Kind { Groundness, Compare };
  Kind kind = Kind::Compare;
  TermPtr ground_arg;  // Groundness
  NormForm lhs, rhs;   // Compare
  CmpOp op = CmpOp::Le;
};

struct ModelPattern {
  TermPtr atom;
  std::vector<ModelConstraint> constraints;
  int line = 0;
};

// ---- program -----------------------------------------------------------

struct ModuleDecl {
  Sym name = 0;
  std::vector<PredKey> preds;
  int line = 0;
};

struct Program {
  std::vector<Clause> clauses;
  std::map<PredKey, Mode> modes;            // explicit :- mode
  std::map<PredKey, TypedMode> typed_modes; // explicit :- type
  std::map<Sym, Typedef> typedefs;
  std::vector<ModuleDecl> modules;          // declaration order = bottom-up
  std::vector<LevelMapDecl> levelmaps;
  std::vector<ModelPattern> model_patterns;

  /// predicates with at least one clause head
  std::set<PredKey> defined_preds() const;
  /// every predicate occurring anywhere (heads and bodies)
  std::set<PredKey> all_preds() const;
  std::vector<const Clause*> clauses_of(const PredKey& p) const;

  /// effective mode: explicit, else projected from :- type, else builtin
  std::optional<Mode> mode_of(const PredKey& p) const;
  std::optional<TypedMode> typed_mode_of(const PredKey& p) const;
  const Typedef* find_typedef(Sym name) const;

  /// functor/arity pairs of every term in the program (clauses, patterns)
  std::map<Sym, std::set<int>> signature() const;
};

/// is/2, </2, <=/2, >/2 live in an implicit bottom module with no clauses.
bool is_builtin(const PredKey& p);
std::optional<Mode> builtin_mode(const PredKey& p);
std::optional<TypedMode> builtin_typed_mode(const PredKey& p);

}  // namespace termweaver
