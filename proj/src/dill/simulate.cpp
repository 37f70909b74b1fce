#include <set>

#include "lincat/dill.hpp"
#include "lincat/sequentialize.hpp"

namespace lincat {

const char* schema_name(Schema s) {
  switch (s) {
    case Schema::SharpBetaLifting: return "sharp-beta/lifting";
    case Schema::SharpBetaContraction: return "sharp-beta/contraction";
    case Schema::SharpBetaWeakening: return "sharp-beta/weakening";
    case Schema::SharpBetaPromotion: return "sharp-beta/promotion";
    case Schema::SharpEta: return "sharp-eta";
    case Schema::WeakenContractSimplification: return "weakening-contraction";
    case Schema::PromoteContractInterchange: return "promotion/contraction";
    case Schema::PromoteWeakenInterchange: return "promotion/weakening";
    case Schema::LambdaBeta: return "lambda-beta";
    default: return "lambda-eta";
  }
}

std::vector<int> SimulationReport::rule_set() const {
  std::vector<int> out;
  for (auto [rule, n] : fired) out.push_back(rule);
  return out;
}

namespace {

[[noreturn]] void unrelated(const std::string& why) { throw DillError("not a known term reduction: " + why); }

bool is_sharp_eta_left(const Derivation& p, const std::string& x) {
  if (p.rule != DillRule::Promote) return false;
  const Derivation& l = p.premises[0];
  return l.rule == DillRule::Lift && l.args[0] == x && l.premises[0].rule == DillRule::Axiom &&
         p.concl.env.size() == 1;
}

struct Expected {
  Schema schema;
  bool empty_delta = false;
  std::vector<DillTerm> terms;  // any of these is accepted
  DillRule contractum_root;
  bool check_root = false;
};

Expected classify(const Derivation& r) {
  const Judgment& j = r.concl;
  switch (r.rule) {
    case DillRule::Apply: {
      const Derivation& f = r.premises[0];
      if (f.rule != DillRule::Lambda) unrelated("application of a non-abstraction");
      DillTerm m = f.premises[0].concl.term;
      return {Schema::LambdaBeta, false, {subst(m, f.args[0], j.term.second())}, DillRule::Axiom};
    }
    case DillRule::Lambda: {
      const Derivation& a = r.premises[0];
      const std::string& x = r.args[0];
      if (a.rule != DillRule::Apply || a.premises[1].rule != DillRule::Axiom ||
          a.premises[1].concl.term != DillTerm::var(x))
        unrelated("abstraction body is not an application to the bound variable");
      return {Schema::LambdaEta, false, {a.premises[0].concl.term}, DillRule::Axiom};
    }
    case DillRule::Let: {
      const Derivation& p1 = r.premises[0];
      const Derivation& p2 = r.premises[1];
      const std::string& x = r.args[0];
      if (is_sharp_eta_left(p1, x)) return {Schema::SharpEta, false, {p2.concl.term}, DillRule::Axiom};
      if (p2.rule != DillRule::Promote) unrelated("let-bound argument is not a promotion");
      DillTerm k = p2.concl.term.first();
      bool empty = p2.concl.env.empty();
      switch (p1.rule) {
        case DillRule::Lift:
          if (p1.args[0] != x) break;
          return {Schema::SharpBetaLifting, empty, {subst(p1.concl.term, x, k)}, DillRule::Axiom};
        case DillRule::Weaken:
          if (p1.args[0] != x) break;
          return {Schema::SharpBetaWeakening, empty, {p1.concl.term}, DillRule::Axiom};
        case DillRule::Contract: {
          if (p1.args[0] != x) break;
          DillTerm m = p1.premises[0].concl.term;
          const std::string &a = p1.args[1], &b = p1.args[2];
          DillTerm bang = DillTerm::sharp(k);
          return {Schema::SharpBetaContraction,
                  empty,
                  {DillTerm::let(DillTerm::let(m, a, bang), b, bang), DillTerm::let(DillTerm::let(m, b, bang), a, bang)},
                  DillRule::Axiom};
        }
        case DillRule::Promote: {
          DillTerm m = p1.premises[0].concl.term;
          return {Schema::SharpBetaPromotion, empty, {DillTerm::sharp(DillTerm::let(m, x, DillTerm::sharp(k)))},
                  DillRule::Promote, true};
        }
        default:
          break;
      }
      unrelated("the left premise does not end with a rule on " + x);
    }
    case DillRule::Contract: {
      const Derivation& p = r.premises[0];
      if (p.rule != DillRule::Weaken || (p.args[0] != r.args[1] && p.args[0] != r.args[2]))
        unrelated("contraction of variables not introduced by weakening");
      return {Schema::WeakenContractSimplification, false, {j.term}, DillRule::Axiom};
    }
    case DillRule::Promote: {
      const Derivation& p = r.premises[0];
      if (p.rule == DillRule::Contract) return {Schema::PromoteContractInterchange, false, {j.term}, DillRule::Contract, true};
      if (p.rule == DillRule::Weaken) return {Schema::PromoteWeakenInterchange, false, {j.term}, DillRule::Weaken, true};
      unrelated("promotion over " + std::string(dill_rule_name(p.rule)));
    }
    default:
      unrelated(std::string("derivation ending in ") + dill_rule_name(r.rule));
  }
}

// Redex indices in the order the default strategy would try them.
std::vector<int> preference(const std::vector<Redex>& rs) {
  std::vector<int> order;
  std::vector<Redex> seen;
  for (int i; (i = select_redex(rs, seen)) >= 0;) {
    order.push_back(i);
    seen.push_back(rs[static_cast<std::size_t>(i)]);
  }
  return order;
}

struct SearchNode {
  CanonicalForm form;
  int parent;
  int rule;
};

// Breadth-first over irreversible steps until a form congruent to `goal`.
std::optional<std::vector<int>> shortest_path(const CanonicalForm& start, const CanonicalForm& goal, int budget,
                                              const SimulationLimits& limits) {
  std::vector<SearchNode> nodes{{tidy(start), -1, 0}};
  std::set<std::string> visited{nodes[0].form.dump()};
  auto path_to = [&](int k) {
    std::vector<int> p;
    for (; nodes[static_cast<std::size_t>(k)].parent >= 0; k = nodes[static_cast<std::size_t>(k)].parent)
      p.push_back(nodes[static_cast<std::size_t>(k)].rule);
    return std::vector<int>(p.rbegin(), p.rend());
  };
  if (congruent(nodes[0].form, goal, budget).verdict == Verdict::Yes) return std::vector<int>{};
  std::size_t level_begin = 0;
  for (int depth = 0; depth < limits.max_depth; ++depth) {
    std::size_t level_end = nodes.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      Net n = form_net(nodes[k].form);
      std::vector<Redex> rs = find_redexes(n);
      for (int i : preference(rs)) {
        const Redex& r = rs[static_cast<std::size_t>(i)];
        auto next = net_to_form(contract(n, r));
        if (!next || next->dom != start.dom || next->cod != start.cod) continue;
        if (!visited.insert(next->dump()).second) continue;
        nodes.push_back({*next, static_cast<int>(k), r.rule});
        if (congruent(*next, goal, budget).verdict == Verdict::Yes) return path_to(static_cast<int>(nodes.size()) - 1);
        if (static_cast<int>(nodes.size()) >= limits.max_nodes) return std::nullopt;
      }
    }
    level_begin = level_end;
    if (level_begin == nodes.size()) break;
  }
  return std::nullopt;
}

}  // namespace

SimulationReport simulate(const Derivation& redex, const Derivation& contractum, int budget,
                          const SimulationLimits& limits) {
  for (const Derivation* d : {&redex, &contractum}) {
    CheckResult ok = check_derivation(*d);
    if (!ok.ok) throw DillError("line " + std::to_string(ok.line) + ": " + ok.reason);
  }
  Expected e = classify(redex);
  const Judgment &a = redex.concl, &b = contractum.concl;
  if (a.env != b.env) unrelated("environments differ: " + a.str() + " vs " + b.str());
  if (a.type != b.type) unrelated("types differ: " + a.str() + " vs " + b.str());
  bool term_ok = false;
  for (const auto& t : e.terms) term_ok = term_ok || t == b.term;
  if (!term_ok) unrelated("expected contractum term " + e.terms[0].str() + ", found " + b.term.str());
  if (e.check_root && contractum.rule != e.contractum_root)
    unrelated(std::string("contractum must end with ") + dill_rule_name(e.contractum_root));

  SimulationReport rep;
  rep.schema = e.schema;
  rep.empty_delta = e.empty_delta;
  MorphTerm from = elaborate(redex);
  MorphTerm to = elaborate(contractum);
  rep.equality = equal(from, to, budget);
  if (auto p = shortest_path(canonicalize(from), canonicalize(to), budget, limits)) {
    rep.reached = true;
    rep.path = *p;
    for (int rule : rep.path) ++rep.fired[rule];
  }
  return rep;
}

}  // namespace lincat
