#include "lincat/normalize.hpp"

#include <algorithm>

#include "lincat/sequentialize.hpp"

namespace lincat {

namespace {

bool listed(const std::vector<Redex>& v, const Redex& r) { return std::find(v.begin(), v.end(), r) != v.end(); }

// Greatest start index, ties to the lowest rule number.
int rightmost(const std::vector<Redex>& rs, const std::vector<Redex>& skip, bool (*keep)(const Redex&)) {
  int best = -1;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const Redex& r = rs[i];
    if (r.reversible || listed(skip, r) || !keep(r)) continue;
    if (best < 0) {
      best = static_cast<int>(i);
      continue;
    }
    const Redex& b = rs[static_cast<std::size_t>(best)];
    if (r.start > b.start || (r.start == b.start && r.rule < b.rule)) best = static_cast<int>(i);
  }
  return best;
}

}  // namespace

int select_redex(const std::vector<Redex>& rs, const std::vector<Redex>& skip) {
  int i = rightmost(rs, skip, [](const Redex& r) { return r.rule == 22 || r.rule == 23; });
  if (i >= 0) return i;
  i = rightmost(rs, skip, [](const Redex& r) { return r.cls() == RuleClass::Naturality; });
  if (i >= 0) return i;
  return rightmost(rs, skip, [](const Redex&) { return true; });
}

Trace normalize(const CanonicalForm& c, const NormalizeOptions& opts) {
  Trace t;
  t.input = to_term(c);
  CanonicalForm cur = tidy(c);
  int first_rule = opts.first_rule;
  std::vector<Redex> rs;
  for (;;) {
    Net n = form_net(cur);
    rs = find_redexes(n);
    std::vector<Redex> skip;
    bool stepped = false;
    for (;;) {
      int i;
      if (first_rule) {
        const int want = first_rule;
        i = -1;
        for (std::size_t k = 0; k < rs.size(); ++k) {
          const Redex& r = rs[k];
          if (r.rule != want || r.reversible || listed(skip, r)) continue;
          if (i < 0 || r.start > rs[static_cast<std::size_t>(i)].start) i = static_cast<int>(k);
        }
        if (i < 0) i = select_redex(rs, skip);
      } else {
        i = select_redex(rs, skip);
      }
      if (i < 0) break;
      if (static_cast<int>(t.steps.size()) >= opts.fuel) {
        t.fuel_exhausted = true;
        break;
      }
      const Redex& r = rs[static_cast<std::size_t>(i)];
      auto next = net_to_form(contract(n, r));
      if (!next || next->dom != cur.dom || next->cod != cur.cod) {
        skip.push_back(r);
        continue;
      }
      t.steps.push_back({r, cur, *next});
      cur = std::move(*next);
      stepped = true;
      break;
    }
    first_rule = 0;
    if (!stepped && !t.fuel_exhausted) t.stuck = static_cast<int>(skip.size());
    if (!stepped || t.fuel_exhausted) break;
  }
  t.result = cur;
  t.skipped_reversible = static_cast<int>(std::count_if(rs.begin(), rs.end(), [](const Redex& r) { return r.reversible; }));
  return t;
}

Trace normalize(const MorphTerm& m, const NormalizeOptions& opts) {
  Trace t = normalize(canonicalize(m), opts);
  t.input = m;
  return t;
}

bool is_normal(const CanonicalForm& c) {
  for (const auto& r : find_redexes(c))
    if (!r.reversible) return false;
  return true;
}

const char* equality_name(Equality e) {
  switch (e) {
    case Equality::Equal: return "Equal";
    case Equality::Distinct: return "Distinct";
    default: return "Unknown";
  }
}

EqualResult equal(const MorphTerm& a, const MorphTerm& b, int budget, const NormalizeOptions& opts) {
  EqualResult r;
  Typing ta = infer_type(a);
  Typing tb = infer_type(b);
  if (ta.dom != tb.dom || ta.cod != tb.cod) {
    r.verdict = Equality::Distinct;
    r.reason = "type mismatch: " + ta.dom.str() + " -> " + ta.cod.str() + " vs " + tb.dom.str() + " -> " +
               tb.cod.str();
    return r;
  }
  r.left = normalize(a, opts);
  r.right = normalize(b, opts);
  CongruenceResult c = congruent(r.left.result, r.right.result, budget);
  r.reason = c.reason;
  if (r.left.fuel_exhausted || r.right.fuel_exhausted) {
    r.verdict = c.verdict == Verdict::Yes ? Equality::Equal : Equality::Unknown;
    r.reason += " (fuel exhausted)";
    return r;
  }
  r.verdict = c.verdict == Verdict::Yes ? Equality::Equal
              : c.verdict == Verdict::No ? Equality::Distinct
                                         : Equality::Unknown;
  if (r.verdict == Equality::Distinct && (r.left.stuck || r.right.stuck)) {
    r.verdict = Equality::Unknown;
    r.reason += " (a normal form keeps an uncontracted irreversible redex)";
  }
  return r;
}

}  // namespace lincat
