// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lincat/dill.hpp"
#include "lincat/measure.hpp"
#include "lincat/parser.hpp"
#include "lincat/surgery.hpp"
#include "random_terms.hpp"

using namespace lincat;
using lincat::testing::random_object;
using lincat::testing::random_walk;
using lincat::testing::WalkOptions;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Normal forms produced along the way, re-examined by the stability check.
std::vector<CanonicalForm> g_normal_forms;

Trace norm(const std::string& text, int first_rule = 0) {
  NormalizeOptions o;
  o.first_rule = first_rule;
  Trace t = normalize(parse_morphism(text), o);
  g_normal_forms.push_back(t.result);
  return t;
}

std::vector<int> rules_of(const Trace& t) {
  std::vector<int> out;
  for (const auto& s : t.steps) out.push_back(s.redex.rule);
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "{" + s + "}";
}

bool congruent_yes(const CanonicalForm& a, const CanonicalForm& b) {
  return congruent(a, b).verdict == Verdict::Yes;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int report(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << o.detail << ")"
            << std::endl;
  return o.pass ? 0 : 1;
}

Outcome criterion1() {
  auto t0 = Clock::now();
  CanonicalForm target = canonicalize(parse_morphism("phi0"));
  Trace a = norm("phi0;delta{1};eps{!1}", 2);
  Trace b = norm("phi0;delta{1};eps{!1}", 13);
  bool orders = !a.steps.empty() && a.steps[0].redex.rule == 2 && !b.steps.empty() && b.steps[0].redex.rule == 13;
  bool ok = orders && congruent_yes(a.result, target) && congruent_yes(b.result, target);
  EqualResult eq = equal(to_term(a.result), to_term(b.result));
  double s = seconds_since(t0);
  ok = ok && eq.verdict == Equality::Equal && s < 1.0;
  std::ostringstream d;
  d << "rule-2 order " << join(rules_of(a)) << ", rule-13 order " << join(rules_of(b)) << ", verdict "
    << equality_name(eq.verdict) << ", " << s << " s";
  return {ok, d.str()};
}

Outcome criterion2() {
  std::ostringstream d;
  bool ok = true;
  struct Pair {
    const char* term;
    int first;
    int second;
  };
  for (const Pair& p : {Pair{"delta{X};!dup{X};delta{!X*!X}", 18, 5}, Pair{"phi{A,B};delta{A*B};!dup{A*B}", 5, 9}}) {
    auto t0 = Clock::now();
    Trace a = norm(p.term, p.first);
    Trace b = norm(p.term, p.second);
    bool orders = !a.steps.empty() && !b.steps.empty() && a.steps[0].redex.rule == p.first &&
                  b.steps[0].redex.rule == p.second;
    CongruenceResult c = congruent(a.result, b.result, kDefaultBudget);
    double s = seconds_since(t0);
    bool here = orders && c.verdict == Verdict::Yes && !a.fuel_exhausted && !b.fuel_exhausted && s < 5.0;
    ok = ok && here;
    d << p.term << ": " << join(rules_of(a)) << " vs " << join(rules_of(b)) << " -> " << verdict_name(c.verdict)
      << " in " << s << " s; ";
  }
  return {ok, d.str()};
}

// Closed forms of the four labels, evaluated by plain integer arithmetic.
std::vector<unsigned long> example_chain_oracle(unsigned long x) {
  return {1UL << (2 * x + 4), (1UL << x) + (1UL << 2), (1UL << x) + 2, 1UL << x};
}

Outcome criterion3() {
  const std::vector<std::string> chain = {
      "delta{X};dup{!X};(id{!!X} * !drop{X})",
      "dup{X};(delta{X}*delta{X});(id{!!X} * !drop{X})",
      "dup{X};(delta{X}*drop{X});(id{!!X} * phi0)",
      "delta{X};rho~{!!X};(id{!!X}*phi0)",
  };
  std::vector<unsigned long> expect = example_chain_oracle(2);
  std::ostringstream d;
  bool ok = true;
  std::vector<CanonicalForm> forms;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    CanonicalForm c = flatten(parse_morphism(chain[i]));
    forms.push_back(canonicalize(parse_morphism(chain[i])));
    OccLabeling dom = measure(c, {c.cod, {Nat(2)}});
    bool match = dom.labels.size() == 1 && dom.labels[0] == Nat(expect[i]);
    ok = ok && match;
    d << (i ? " > " : "") << (dom.labels.empty() ? std::string("?") : dom.labels[0].str());
  }
  // Each morphism reaches the next in one rewrite step.
  for (std::size_t i = 0; i + 1 < forms.size(); ++i) {
    bool linked = false;
    for (const Redex& r : find_redexes(forms[i])) {
      if (r.reversible) continue;
      auto next = step(forms[i], r);
      if (next && congruent_yes(*next, forms[i + 1])) {
        linked = true;
        d << (i ? "," : "; steps via rules ") << r.rule;
        break;
      }
    }
    ok = ok && linked;
    if (!linked) d << "; no single step from morphism " << (i + 1);
  }
  return {ok, d.str()};
}

Outcome criterion4() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(20261016);
  WalkOptions w;
  w.kinds = lincat::testing::strict_kinds();
  w.max_cells = 8;
  w.min_cells = 2;
  int morphisms = 0, steps = 0, decreased = 0, violations = 0, unchanged = 0, attempts = 0;
  std::string first_bad;
  while (morphisms < 1000 && attempts < 200000) {
    ++attempts;
    Object start = Object::bang(random_object(rng, 2, 2, false));
    if (rng() % 2) start = Object::tensor(start, Object::bang(random_object(rng, 2, 1, false)));
    MorphTerm m = random_walk(start, w, rng);
    CanonicalForm c = canonicalize(m);
    if (c.cells.empty() || c.cells.size() > 8 || classify(c) != MorphClass::StrictCompositeAlgebraic) continue;
    Net n = form_net(c);
    std::vector<Redex> rs = find_redexes(n);
    bool restricted_only = true;
    for (const Redex& r : rs)
      if (r.cls() == RuleClass::Naturality && !is_restricted_naturality(n, r)) restricted_only = false;
    if (!restricted_only) continue;
    std::vector<Nat> labels;
    for (std::size_t i = 0; i < occurrences(c.cod); ++i) labels.emplace_back(2 + rng() % 4);
    int here = 0;
    for (const Redex& r : rs) {
      if (r.reversible) continue;
      if (r.cls() != RuleClass::Algebraic && !is_restricted_naturality(n, r)) continue;
      auto after = step(c, r);
      if (!after) continue;
      Decrease v = check_decrease(c, *after, r, {c.cod, labels});
      ++here;
      if (v == Decrease::Decreased) ++decreased;
      else if (v == Decrease::Unchanged) ++unchanged;
      else ++violations;
      if (v != Decrease::Decreased && first_bad.empty()) first_bad = pretty(m) + " rule " + std::to_string(r.rule);
    }
    if (here == 0) continue;
    ++morphisms;
    steps += here;
  }
  double s = seconds_since(t0);
  std::ostringstream d;
  d << morphisms << " morphisms, " << steps << " steps, " << decreased << " decreased, " << unchanged
    << " unchanged, " << violations << " violations, " << s << " s";
  if (!first_bad.empty()) d << "; first non-decrease: " << first_bad;
  return {morphisms >= 1000 && decreased == steps && violations == 0 && s < 60.0, d.str()};
}

Outcome criterion5() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(5000);
  WalkOptions w;
  w.kinds = lincat::testing::all_kinds();
  w.max_cells = 12;
  int terms = 0, exhausted = 0, total_steps = 0;
  std::string first_bad;
  while (terms < 5000) {
    int atoms = 1 + static_cast<int>(rng() % 3);
    MorphTerm m = random_walk(random_object(rng, atoms, 3, true), w, rng);
    CanonicalForm c = canonicalize(m);
    if (c.cells.empty()) continue;
    NormalizeOptions o;
    o.fuel = 100000;
    Trace t = normalize(c, o);
    ++terms;
    total_steps += static_cast<int>(t.steps.size());
    if (t.fuel_exhausted) {
      ++exhausted;
      if (first_bad.empty()) first_bad = pretty(m);
    } else {
      g_normal_forms.push_back(t.result);
    }
  }
  std::ostringstream d;
  d << terms << " terms, " << total_steps << " steps, " << exhausted << " fuel exhaustions, " << seconds_since(t0)
    << " s";
  if (!first_bad.empty()) d << "; first: " << first_bad;
  return {terms >= 5000 && exhausted == 0, d.str()};
}

Outcome criterion6() {
  std::mt19937_64 rng(606);
  std::set<GenKind> kinds = lincat::testing::all_kinds();
  std::set<std::string> seen;
  int equal_count = 0, attempts = 0;
  std::string first_bad;
  while (static_cast<int>(seen.size()) < 200 && attempts < 100000) {
    ++attempts;
    Object a = random_object(rng, 2, 2, true);
    auto fs = lincat::testing::generators_on(a, kinds, rng);
    if (fs.empty()) continue;
    Generator f = fs[rng() % fs.size()];
    auto gs = lincat::testing::generators_on(f.cod(), kinds, rng);
    if (gs.empty()) continue;
    Generator g = gs[rng() % gs.size()];
    std::string fs_text = f.str(), gs_text = g.str();
    if (!seen.insert(fs_text + ";" + gs_text).second) continue;
    MorphTerm lhs = parse_morphism("(" + gs_text + "^);(" + fs_text + "^)");
    MorphTerm rhs = parse_morphism("((" + fs_text + ";" + gs_text + ")^)");
    EqualResult r = equal(lhs, rhs);
    if (r.verdict == Equality::Equal) {
      ++equal_count;
      g_normal_forms.push_back(r.left.result);
      g_normal_forms.push_back(r.right.result);
    } else if (std::getenv("LINCAT_VERBOSE")) {
      std::cerr << fs_text << " ; " << gs_text << " : " << equality_name(r.verdict) << " " << r.reason << "\n";
    }
    if (r.verdict != Equality::Equal && first_bad.empty()) {
      first_bad = fs_text + ", " + gs_text + ": " + equality_name(r.verdict) + " " + r.reason;
    }
  }
  std::ostringstream d;
  d << equal_count << "/" << seen.size() << " pairs Equal";
  if (!first_bad.empty()) d << "; first failure: " << first_bad;
  return {seen.size() >= 200 && equal_count == static_cast<int>(seen.size()), d.str()};
}

Outcome criterion7() {
  Trace beta = norm("(abs{A,B}*id{B});ev{A*B,B}");
  Trace eta = norm("abs{A%B^,B};(ev{A,B}%id{B^})");
  bool beta_ok = beta.result.cells.empty() && beta.result.dom == beta.result.cod;
  bool eta_ok = eta.result.cells.empty() && eta.result.dom == eta.result.cod;
  std::ostringstream d;
  d << "beta " << join(rules_of(beta)) << " -> " << (beta_ok ? "identity" : "not identity") << ", eta "
    << join(rules_of(eta)) << " -> " << (eta_ok ? "identity" : "not identity");
  return {beta_ok && eta_ok, d.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome criterion8() {
  struct Case {
    const char* file;
    std::set<int> rules;
  };
  const std::vector<Case> cases = {
      {"lifting", {2, 10, 19}},
      {"lifting_empty", {14, 19}},
      {"contraction", {4, 11, 20}},
      {"contraction_empty", {15, 20}},
      {"weakening", {6, 12, 21}},
      {"weakening_empty", {16, 21}},
      {"promotion", {1, 9, 18}},
      {"promotion_empty", {13, 17, 18}},
      {"sharp_eta", {3}},
      {"simplification", {8}},
      {"interchange_contraction", {5}},
      {"interchange_weakening", {7, 17}},
      {"lambda_beta", {22}},
      {"lambda_eta", {23}},
  };
  std::map<std::string, std::set<int>> got;
  std::ostringstream d;
  bool ok = true;
  for (const Case& c : cases) {
    auto [redex, contractum] = parse_simulation(read_file(std::string(LINCAT_DATA_DIR) + "/dill/" + c.file + ".dill"));
    SimulationReport r = simulate(redex, contractum);
    g_normal_forms.push_back(r.equality.left.result);
    g_normal_forms.push_back(r.equality.right.result);
    std::vector<int> rs = r.rule_set();
    got[c.file] = std::set<int>(rs.begin(), rs.end());
    bool here = r.equality.verdict == Equality::Equal && r.reached && got[c.file] == c.rules;
    if (!here) d << c.file << " " << equality_name(r.equality.verdict) << " " << join(rs) << "; ";
    ok = ok && here;
  }
  auto unite = [&](const char* a, const char* b) {
    std::set<int> u = got[a];
    u.insert(got[b].begin(), got[b].end());
    return u;
  };
  // The lists as stated for each schema.
  bool lists = got["lifting"] == std::set<int>{2, 10, 19} &&
               unite("contraction", "contraction_empty") == std::set<int>{4, 11, 15, 20} &&
               unite("weakening", "weakening_empty") == std::set<int>{6, 12, 16, 21} &&
               unite("promotion", "promotion_empty") == std::set<int>{1, 9, 13, 17, 18} &&
               got["promotion_empty"].count(17) && !got["promotion"].count(17) &&
               got["sharp_eta"] == std::set<int>{3} && got["simplification"] == std::set<int>{8} &&
               got["interchange_contraction"] == std::set<int>{5} &&
               got["interchange_weakening"] == std::set<int>{7, 17} && got["lambda_beta"] == std::set<int>{22} &&
               got["lambda_eta"] == std::set<int>{23};
  ok = ok && lists;
  d << cases.size() << " instances Equal with matching rule sets" << (lists ? "" : "; stated lists differ");
  return {ok, d.str()};
}

Outcome criterion9() {
  int bad = 0;
  std::string first;
  for (const auto& c : g_normal_forms) {
    if (is_normal(c)) continue;
    ++bad;
    if (first.empty()) first = pretty(to_term(c));
  }
  std::ostringstream d;
  d << g_normal_forms.size() << " normal forms, " << bad << " with irreversible redexes";
  if (!first.empty()) d << "; first: " << first;
  return {bad == 0 && !g_normal_forms.empty(), d.str()};
}

}  // namespace

int main() {
  int failures = 0;
  failures += report(1, "critical pair phi0;delta;eps joins at phi0", criterion1);
  failures += report(2, "critical pairs delta;!d;delta and phi;delta;!d join", criterion2);
  failures += report(3, "measure chain 256 > 8 > 6 > 4", criterion3);
  failures += report(4, "decrease on strict composite algebraic morphisms", criterion4);
  failures += report(5, "termination on random terms", criterion5);
  failures += report(6, "dual reverses composition", criterion6);
  failures += report(7, "encoded beta and eta reach the identity", criterion7);
  failures += report(8, "term reductions are simulated with the stated rules", criterion8);
  failures += report(9, "normal forms carry only reversible redexes", criterion9);
  return failures == 0 ? 0 : 1;
}
