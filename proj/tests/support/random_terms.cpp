#include "random_terms.hpp"

namespace lincat::testing {

namespace {

Object atom_at(int i) {
  static const char* names[] = {"X", "Y", "Z"};
  return Object::atom(names[i % 3]);
}

bool binary(const Object& o) { return o.valid() && (o.kind() == ObjKind::Tensor || o.kind() == ObjKind::Par); }
bool unary(const Object& o) { return o.valid() && (o.kind() == ObjKind::Bang || o.kind() == ObjKind::Dual); }

void positions(const Object& o, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (binary(o)) {
    cur.push_back(0);
    positions(o.left(), cur, out);
    cur.back() = 1;
    positions(o.right(), cur, out);
    cur.pop_back();
  } else if (o.kind() == ObjKind::Bang) {
    cur.push_back(2);
    positions(o.inner(), cur, out);
    cur.pop_back();
  }
}

Object at(const Object& o, const std::vector<int>& path) {
  Object cur = o;
  for (int d : path) cur = d == 0 ? cur.left() : d == 1 ? cur.right() : cur.inner();
  return cur;
}

}  // namespace

std::vector<Generator> generators_on(const Object& s, const std::set<GenKind>& kinds, std::mt19937_64& rng) {
  std::vector<std::vector<Object>> subs1 = {{s}};
  std::vector<std::vector<Object>> subs2, subs3;
  if (unary(s)) subs1.push_back({s.inner()});
  if (binary(s)) {
    const Object &l = s.left(), &r = s.right();
    subs1.push_back({l});
    subs1.push_back({r});
    subs2.push_back({l, r});
    subs2.push_back({r, l});
    if (unary(l) && unary(r)) subs2.push_back({l.inner(), r.inner()});
    if (binary(l)) subs3.push_back({l.left(), l.right(), r});
    if (binary(r)) subs3.push_back({l, r.left(), r.right()});
  }
  subs1.push_back({random_object(rng, 2, 1, false)});
  std::vector<Generator> out;
  for (GenKind k : kinds) {
    int n = gen_arity(k);
    const auto& pool = n == 0 ? std::vector<std::vector<Object>>{{}} : n == 1 ? subs1 : n == 2 ? subs2 : subs3;
    for (const auto& sub : pool) {
      try {
        Generator g(k, sub);
        if (g.dom() == s) {
          out.push_back(g);
          break;
        }
      } catch (const TypeError&) {
      }
    }
  }
  return out;
}

MorphTerm whisker_term(const Object& whole, const std::vector<int>& path, const MorphTerm& g) {
  std::vector<Object> chain{whole};
  for (int d : path) chain.push_back(d == 0 ? chain.back().left() : d == 1 ? chain.back().right() : chain.back().inner());
  MorphTerm t = g;
  for (std::size_t i = path.size(); i-- > 0;) {
    const Object& o = chain[i];
    int d = path[i];
    if (d == 2) {
      t = MorphTerm::bang(t);
      continue;
    }
    MorphTerm other = MorphTerm::gen(GenKind::Id, {d == 0 ? o.right() : o.left()});
    bool par = o.kind() == ObjKind::Par;
    MorphTerm l = d == 0 ? t : other, r = d == 0 ? other : t;
    t = par ? MorphTerm::par(l, r) : MorphTerm::tensor(l, r);
  }
  return t;
}

MorphTerm random_walk(const Object& start, const WalkOptions& opts, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len_dist(opts.min_cells, opts.max_cells);
  int len = len_dist(rng);
  Object cur = start;
  std::vector<MorphTerm> parts;
  for (int i = 0; i < len; ++i) {
    std::vector<std::vector<int>> ps;
    std::vector<int> tmp;
    positions(cur, tmp, ps);
    std::vector<std::pair<std::vector<int>, Generator>> moves;
    for (const auto& p : ps)
      for (const auto& g : generators_on(at(cur, p), opts.kinds, rng)) moves.emplace_back(p, g);
    if (moves.empty()) break;
    auto& [p, g] = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    MorphTerm cell = whisker_term(cur, p, MorphTerm::gen(g));
    parts.push_back(cell);
    cur = infer_type(cell).cod;
  }
  return seq_all(parts, start);
}

Object random_object(std::mt19937_64& rng, int atoms, int depth, bool units_and_duals) {
  std::uniform_int_distribution<int> pick(0, 9);
  int c = pick(rng);
  if (depth <= 0 || c < 3) {
    if (units_and_duals && c == 0) return std::uniform_int_distribution<int>(0, 1)(rng) ? Object::one() : Object::bot();
    return atom_at(std::uniform_int_distribution<int>(0, atoms - 1)(rng));
  }
  if (c < 6) return Object::bang(random_object(rng, atoms, depth - 1, units_and_duals));
  if (units_and_duals && c == 6) return Object::dual(random_object(rng, atoms, depth - 1, units_and_duals));
  if (units_and_duals && c == 7)
    return Object::par(random_object(rng, atoms, depth - 1, units_and_duals),
                       random_object(rng, atoms, depth - 1, units_and_duals));
  return Object::tensor(random_object(rng, atoms, depth - 1, units_and_duals),
                        random_object(rng, atoms, depth - 1, units_and_duals));
}

std::set<GenKind> strict_kinds() {
  return {GenKind::Alpha, GenKind::AlphaInv, GenKind::Sig, GenKind::SigInv, GenKind::Phi,
          GenKind::Delta, GenKind::Eps,      GenKind::Dup, GenKind::Drop};
}

std::set<GenKind> all_kinds() {
  std::set<GenKind> out;
  for (int k = 1; k < kGenKindCount; ++k) out.insert(static_cast<GenKind>(k));
  return out;
}

}  // namespace lincat::testing
