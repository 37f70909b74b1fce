#include <set>

#include "lincat/dill.hpp"
#include "lincat/sugar.hpp"

namespace lincat {

namespace {

struct Failure {
  int line;
  std::string reason;
};

int index_of(const Env& env, const std::string& x) {
  for (std::size_t i = 0; i < env.size(); ++i)
    if (env[i].var == x) return static_cast<int>(i);
  return -1;
}

Env without(const Env& env, int i) {
  Env out = env;
  out.erase(out.begin() + i);
  return out;
}

void require(bool cond, const Derivation& d, const std::string& why) {
  if (!cond) throw Failure{d.line, std::string(dill_rule_name(d.rule)) + ": " + why};
}

void check_node(const Derivation& d) {
  for (const auto& p : d.premises) check_node(p);
  const Judgment& c = d.concl;
  std::set<std::string> names;
  for (const auto& e : c.env) require(names.insert(e.var).second, d, "variable " + e.var + " bound twice");

  switch (d.rule) {
    case DillRule::Axiom: {
      require(c.env.size() == 1 && !c.env[0].sharp, d, "the axiom has the shape x:A |- x : A");
      require(c.term == DillTerm::var(c.env[0].var), d, "the axiom's term is its variable");
      require(c.type == c.env[0].type, d, "the axiom's type is its variable's type");
      return;
    }
    case DillRule::Lift: {
      const Judgment& p = d.premises[0].concl;
      const std::string& x = d.args[0];
      int i = index_of(p.env, x);
      require(i >= 0 && !p.env[static_cast<std::size_t>(i)].sharp, d, "premise needs linear " + x);
      Env want = p.env;
      want[static_cast<std::size_t>(i)].sharp = true;
      require(c.env == want, d, "conclusion environment must mark " + x + " sharp in place");
      require(c.term == p.term && c.type == p.type, d, "term and type are unchanged");
      return;
    }
    case DillRule::Weaken: {
      const Judgment& p = d.premises[0].concl;
      const std::string& x = d.args[0];
      int i = index_of(c.env, x);
      require(i >= 0 && c.env[static_cast<std::size_t>(i)].sharp, d, "conclusion needs sharp " + x);
      require(without(c.env, i) == p.env, d, "conclusion environment is the premise's plus " + x);
      require(c.term == p.term && c.type == p.type, d, "term and type are unchanged");
      return;
    }
    case DillRule::Contract: {
      const Judgment& p = d.premises[0].concl;
      const std::string &x = d.args[0], &x1 = d.args[1], &x2 = d.args[2];
      require(x1 != x2, d, "contracted variables must differ");
      int i = index_of(p.env, x1), j = index_of(p.env, x2);
      require(i >= 0 && j >= 0, d, "premise needs " + x1 + " and " + x2);
      const EnvEntry &e1 = p.env[static_cast<std::size_t>(i)], &e2 = p.env[static_cast<std::size_t>(j)];
      require(e1.sharp && e2.sharp && e1.type == e2.type, d, x1 + " and " + x2 + " must be sharp of one type");
      Env want = p.env;
      want[static_cast<std::size_t>(i)].var = x;
      want.erase(want.begin() + j);
      require(c.env == want, d, "conclusion environment replaces " + x1 + " by " + x + " and drops " + x2);
      DillTerm m = subst(subst(p.term, x1, DillTerm::var(x)), x2, DillTerm::var(x));
      require(c.term == m, d, "term must be the premise's with " + x + " for " + x1 + " and " + x2);
      require(c.type == p.type, d, "type is unchanged");
      return;
    }
    case DillRule::Promote: {
      const Judgment& p = d.premises[0].concl;
      for (const auto& e : c.env) require(e.sharp, d, "every variable must be sharp, " + e.var + " is linear");
      require(c.env == p.env, d, "environment is unchanged");
      require(c.term == DillTerm::sharp(p.term), d, "term must be !M");
      require(c.type == Object::bang(p.type), d, "type must be !B");
      return;
    }
    case DillRule::Let: {
      const Judgment& p1 = d.premises[0].concl;
      const Judgment& p2 = d.premises[1].concl;
      const std::string& x = d.args[0];
      int i = index_of(p1.env, x);
      require(i >= 0 && p1.env[static_cast<std::size_t>(i)].sharp, d, "left premise needs sharp " + x);
      require(p2.type == Object::bang(p1.env[static_cast<std::size_t>(i)].type), d,
              "right premise must have type !" + dill_type_str(p1.env[static_cast<std::size_t>(i)].type));
      Env want(p1.env.begin(), p1.env.begin() + i);
      want.insert(want.end(), p2.env.begin(), p2.env.end());
      want.insert(want.end(), p1.env.begin() + i + 1, p1.env.end());
      require(c.env == want, d, "conclusion environment puts the right premise's in place of " + x);
      require(c.term == DillTerm::let(p1.term, x, p2.term), d, "term must be M{!" + x + ":=N}");
      require(c.type == p1.type, d, "type is the left premise's");
      return;
    }
    case DillRule::Lambda: {
      const Judgment& p = d.premises[0].concl;
      const std::string& x = d.args[0];
      int i = index_of(p.env, x);
      require(i >= 0 && !p.env[static_cast<std::size_t>(i)].sharp, d, "premise needs linear " + x);
      require(c.env == without(p.env, i), d, "conclusion environment drops " + x);
      require(c.term == DillTerm::lam(x, p.term), d, "term must be \\" + x + ".M");
      require(c.type == lollipop(p.env[static_cast<std::size_t>(i)].type, p.type), d, "type must be A -o B");
      return;
    }
    case DillRule::Apply: {
      const Judgment& p1 = d.premises[0].concl;
      const Judgment& p2 = d.premises[1].concl;
      require(is_lollipop(p1.type), d, "function premise needs a -o type");
      auto [a, b] = lollipop_parts(p1.type);
      require(p2.type == a, d, "argument type must be " + dill_type_str(a));
      Env want = p1.env;
      want.insert(want.end(), p2.env.begin(), p2.env.end());
      require(c.env == want, d, "conclusion environment joins both premises'");
      require(c.term == DillTerm::app(p1.term, p2.term), d, "term must be M N");
      require(c.type == b, d, "type must be " + dill_type_str(b));
      return;
    }
  }
}

}  // namespace

CheckResult check_derivation(const Derivation& d) {
  try {
    check_node(d);
  } catch (const Failure& f) {
    return {false, f.line, f.reason};
  }
  return {};
}

}  // namespace lincat
