#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lincat/normalize.hpp"

namespace lincat {

// DILL types are objects built from atoms, 1, tensor, bang and A -o B
// (stored as B % A^).
using DillType = Object;

bool is_dill_type(const Object& t);
bool is_lollipop(const Object& t);
// Pair (A, B) of A -o B.
std::pair<Object, Object> lollipop_parts(const Object& t);
std::string dill_type_str(const Object& t);
DillType parse_dill_type(const std::string& text);

class DillError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DillTermKind { Var, Sharp, Let, Lam, App };

// M{!x:=N} binds x in M; \x.M binds x in M.
class DillTerm {
 public:
  DillTerm() = default;
  static DillTerm var(const std::string& x);
  static DillTerm sharp(const DillTerm& m);
  static DillTerm let(const DillTerm& body, const std::string& x, const DillTerm& arg);
  static DillTerm lam(const std::string& x, const DillTerm& body);
  static DillTerm app(const DillTerm& f, const DillTerm& a);

  bool valid() const { return node_ != nullptr; }
  DillTermKind kind() const;
  const std::string& name() const;
  // Var/Sharp/Lam: first is the body; Let: first = body, second = arg;
  // App: first = function, second = argument.
  const DillTerm& first() const;
  const DillTerm& second() const;
  std::string str() const;

  friend bool operator==(const DillTerm& a, const DillTerm& b);
  friend bool operator!=(const DillTerm& a, const DillTerm& b) { return !(a == b); }

 private:
  struct Node;
  explicit DillTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

DillTerm parse_dill_term(const std::string& text);
std::vector<std::string> free_vars(const DillTerm& m);
bool occurs_free(const DillTerm& m, const std::string& x);
// Capture-avoiding M[n/x].
DillTerm subst(const DillTerm& m, const std::string& x, const DillTerm& n);

struct EnvEntry {
  std::string var;
  DillType type;
  bool sharp = false;
  friend bool operator==(const EnvEntry& a, const EnvEntry& b) {
    return a.var == b.var && a.type == b.type && a.sharp == b.sharp;
  }
};
using Env = std::vector<EnvEntry>;

struct Judgment {
  Env env;
  DillTerm term;
  DillType type;
  std::string str() const;
};

Judgment parse_judgment(const std::string& text);

enum class DillRule { Axiom, Lift, Weaken, Contract, Promote, Let, Lambda, Apply };
const char* dill_rule_name(DillRule r);

// One inference step. Arguments: Lift/Weaken/Let/Lambda name one
// variable; Contract names x, x', x''.
struct Derivation {
  DillRule rule = DillRule::Axiom;
  std::vector<std::string> args;
  Judgment concl;
  std::vector<Derivation> premises;
  int line = 0;
  std::string str(int indent = 0) const;
};

// Indented rule-per-line text; premises are indented deeper than their
// conclusion. Lines starting with '#' are comments.
Derivation parse_derivation(const std::string& text);
// A redex derivation, a line "=>", and a contractum derivation.
std::pair<Derivation, Derivation> parse_simulation(const std::string& text);

struct CheckResult {
  bool ok = true;
  int line = 0;
  std::string reason;
};

CheckResult check_derivation(const Derivation& d);

// Left-associated tensor of the environment, banged where sharp; 1 if empty.
Object env_object(const Env& env);

// Morphism env_object(concl.env) -> concl.type. Throws DillError when the
// derivation does not check.
MorphTerm elaborate(const Derivation& d);

enum class Schema {
  SharpBetaLifting,
  SharpBetaContraction,
  SharpBetaWeakening,
  SharpBetaPromotion,
  SharpEta,
  WeakenContractSimplification,
  PromoteContractInterchange,
  PromoteWeakenInterchange,
  LambdaBeta,
  LambdaEta,
};
const char* schema_name(Schema s);

struct SimulationReport {
  Schema schema = Schema::SharpBetaLifting;
  bool empty_delta = false;  // argument environment of a sharp beta is empty
  EqualResult equality;
  // Shortest rewrite path from the redex's morphism to one congruent to the
  // contractum's; ties follow the default strategy's preference.
  bool reached = false;
  std::vector<int> path;
  std::map<int, int> fired;          // rule id -> occurrences on `path`
  std::vector<int> rule_set() const;  // distinct ids on `path`, ascending
};

struct SimulationLimits {
  int max_depth = 8;
  int max_nodes = 4000;
};

// Identifies the term rule relating the two derivations and compares
// their elaborations. Throws DillError when no known rule relates them.
SimulationReport simulate(const Derivation& redex, const Derivation& contractum,
                          int budget = kDefaultBudget, const SimulationLimits& limits = {});

}  // namespace lincat
