#include <map>

#include "lincat/dill.hpp"
#include "lincat/sequentialize.hpp"
#include "lincat/sugar.hpp"

namespace lincat {

namespace {

// An operand of an environment fold and the leaf wires it carries.
struct Factor {
  Object obj;
  std::vector<int> wires;
};

Object entry_object(const EnvEntry& e) { return e.sharp ? Object::bang(e.type) : e.type; }

Factor fold(const std::vector<Factor>& fs) {
  if (fs.empty()) return {Object::one(), {}};
  Factor out = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) {
    out.obj = Object::tensor(out.obj, fs[i].obj);
    out.wires.insert(out.wires.end(), fs[i].wires.begin(), fs[i].wires.end());
  }
  return out;
}

MorphTerm id_of(const Object& o) { return MorphTerm::gen(GenKind::Id, {o}); }

class Elaborator {
 public:
  MorphTerm run(const Derivation& d) {
    const Judgment& c = d.concl;
    switch (d.rule) {
      case DillRule::Axiom:
        return id_of(c.type);
      case DillRule::Lift: {
        int i = index_of(c.env, d.args[0]);
        MorphTerm eps = MorphTerm::gen(GenKind::Eps, {c.env[static_cast<std::size_t>(i)].type});
        return MorphTerm::seq(whisker_at(objects(c.env), i, eps), run(d.premises[0]));
      }
      case DillRule::Weaken: {
        const Env& p = d.premises[0].concl.env;
        int i = index_of(c.env, d.args[0]);
        MorphTerm drop = MorphTerm::gen(GenKind::Drop, {c.env[static_cast<std::size_t>(i)].type});
        Wires w = wires_for(c.env);
        std::vector<Factor> src = factors(c.env, w);
        src[static_cast<std::size_t>(i)] = {Object::one(), {}};
        MorphTerm m = MorphTerm::seq(whisker_at(objects(c.env), i, drop), regroup(src, factors(p, w)));
        return MorphTerm::seq(m, run(d.premises[0]));
      }
      case DillRule::Contract: {
        const Env& p = d.premises[0].concl.env;
        const std::string &x = d.args[0], &x1 = d.args[1], &x2 = d.args[2];
        int i = index_of(c.env, x);
        const Object& a = c.env[static_cast<std::size_t>(i)].type;
        Wires w = wires_for(c.env);
        w.erase(x);
        Wires wp = wires_for(p, w);
        for (const auto& [k, v] : wp) w[k] = v;
        std::vector<Factor> src = factors(c.env, w, x);
        std::vector<int> both = w.at(x1);
        both.insert(both.end(), w.at(x2).begin(), w.at(x2).end());
        src[static_cast<std::size_t>(i)] = {Object::tensor(Object::bang(a), Object::bang(a)), both};
        MorphTerm dup = MorphTerm::gen(GenKind::Dup, {a});
        MorphTerm m = MorphTerm::seq(whisker_at(objects(c.env), i, dup), regroup(src, factors(p, w)));
        return MorphTerm::seq(m, run(d.premises[0]));
      }
      case DillRule::Promote:
        return MorphTerm::seq(promote_prefix(c.env), MorphTerm::bang(run(d.premises[0])));
      case DillRule::Let: {
        const Judgment& p1 = d.premises[0].concl;
        const Judgment& p2 = d.premises[1].concl;
        int i = index_of(p1.env, d.args[0]);
        Wires w = wires_for(c.env);
        std::vector<Factor> dst = factors(p1.env, w, d.args[0]);
        dst[static_cast<std::size_t>(i)] = fold(factors(p2.env, w));
        std::vector<Object> mid;
        for (const auto& f : dst) mid.push_back(f.obj);
        MorphTerm m = MorphTerm::seq(regroup(factors(c.env, w), dst), whisker_at(mid, i, run(d.premises[1])));
        return MorphTerm::seq(m, run(d.premises[0]));
      }
      case DillRule::Lambda: {
        const Env& p = d.premises[0].concl.env;
        const std::string& x = d.args[0];
        const Object& a = p[static_cast<std::size_t>(index_of(p, x))].type;
        Wires w = wires_for(p);
        Factor g = fold(factors(c.env, w));
        MorphTerm body = MorphTerm::seq(regroup({g, {a, w.at(x)}}, factors(p, w)), run(d.premises[0]));
        return MorphTerm::seq(expand_abs(g.obj, a), MorphTerm::par(body, id_of(Object::dual(a))));
      }
      case DillRule::Apply: {
        const Judgment& p1 = d.premises[0].concl;
        auto [a, b] = lollipop_parts(p1.type);
        Wires w = wires_for(c.env);
        std::vector<Factor> dst = {fold(factors(p1.env, w)), fold(factors(d.premises[1].concl.env, w))};
        MorphTerm m = MorphTerm::seq(regroup(factors(c.env, w), dst),
                                     MorphTerm::tensor(run(d.premises[0]), run(d.premises[1])));
        return MorphTerm::seq(m, expand_ev(b, a));
      }
    }
    throw DillError("unknown rule");
  }

 private:
  using Wires = std::map<std::string, std::vector<int>>;

  static int index_of(const Env& env, const std::string& x) {
    for (std::size_t i = 0; i < env.size(); ++i)
      if (env[i].var == x) return static_cast<int>(i);
    throw DillError("variable " + x + " not in the environment");
  }

  static std::vector<Object> objects(const Env& env) {
    std::vector<Object> out;
    for (const auto& e : env) out.push_back(entry_object(e));
    return out;
  }

  // Fresh wires for every entry not already in `known`.
  Wires wires_for(const Env& env, const Wires& known = {}) {
    Wires w;
    for (const auto& e : env) {
      if (known.count(e.var)) continue;
      std::vector<int>& v = w[e.var];
      for (std::size_t k = 0; k < wire_leaves(entry_object(e)).size(); ++k) v.push_back(next_++);
    }
    return w;
  }

  // `skip` marks an entry whose factor the caller replaces.
  static std::vector<Factor> factors(const Env& env, const Wires& w, const std::string& skip = "") {
    std::vector<Factor> out;
    for (const auto& e : env) {
      if (e.var == skip) out.push_back({entry_object(e), {}});
      else out.push_back({entry_object(e), w.at(e.var)});
    }
    return out;
  }

  static MorphTerm regroup(const std::vector<Factor>& src, const std::vector<Factor>& dst) {
    Factor a = fold(src), b = fold(dst);
    if (a.obj == b.obj && a.wires == b.wires) return id_of(a.obj);
    auto cells = rewire(a.obj, a.wires, b.obj, b.wires);
    if (!cells) throw DillError("cannot regroup " + a.obj.str() + " as " + b.obj.str());
    std::vector<MorphTerm> parts;
    for (const auto& cell : *cells) parts.push_back(cell_term(cell));
    return seq_all(parts, a.obj);
  }

  // g acting on operand i of the left-associated fold of `objs`.
  static MorphTerm whisker_at(const std::vector<Object>& objs, int i, const MorphTerm& g) {
    MorphTerm t = i == 0 ? g : id_of(objs[0]);
    for (std::size_t k = 1; k < objs.size(); ++k)
      t = MorphTerm::tensor(t, static_cast<int>(k) == i ? g : id_of(objs[k]));
    return t;
  }

  // !C1*...*!Cn -> !(!C1*...*!Cn): deltas then a left fold of phi.
  static MorphTerm promote_prefix(const Env& env) {
    if (env.empty()) return MorphTerm::gen(GenKind::Phi0, {});
    std::vector<Object> banged;
    MorphTerm t = MorphTerm::gen(GenKind::Delta, {env[0].type});
    for (std::size_t k = 1; k < env.size(); ++k)
      t = MorphTerm::tensor(t, MorphTerm::gen(GenKind::Delta, {env[k].type}));
    for (const auto& e : env) banged.push_back(Object::bang(e.type));
    Object acc = banged[0];
    for (std::size_t k = 1; k < env.size(); ++k) {
      MorphTerm step = MorphTerm::gen(GenKind::Phi, {acc, banged[k]});
      for (std::size_t m = k + 1; m < env.size(); ++m) step = MorphTerm::tensor(step, id_of(Object::bang(banged[m])));
      t = MorphTerm::seq(t, step);
      acc = Object::tensor(acc, banged[k]);
    }
    return t;
  }

  int next_ = 0;
};

}  // namespace

Object env_object(const Env& env) {
  std::vector<Factor> fs;
  for (const auto& e : env) fs.push_back({entry_object(e), {}});
  return fold(fs).obj;
}

MorphTerm elaborate(const Derivation& d) {
  CheckResult ok = check_derivation(d);
  if (!ok.ok) throw DillError("line " + std::to_string(ok.line) + ": " + ok.reason);
  MorphTerm m = Elaborator().run(d);
  Typing t = infer_type(m);
  if (t.dom != env_object(d.concl.env) || t.cod != d.concl.type)
    throw DillError("elaboration produced " + t.dom.str() + " -> " + t.cod.str());
  return m;
}

}  // namespace lincat
