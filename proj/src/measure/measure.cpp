#include "lincat/measure.hpp"

#include <algorithm>

namespace lincat {

const char* morph_class_name(MorphClass c) {
  switch (c) {
    case MorphClass::StrictCompositeAlgebraic: return "strict composite algebraic";
    case MorphClass::CompositeAlgebraic: return "composite algebraic";
    default: return "other";
  }
}

const char* decrease_name(Decrease d) {
  switch (d) {
    case Decrease::Decreased: return "Decreased";
    case Decrease::Unchanged: return "Unchanged";
    default: return "Violation";
  }
}

namespace {

// Class A objects use atoms, tensor and bang; class B also admits 1.
bool in_class(const Object& o, bool allow_one) {
  switch (o.kind()) {
    case ObjKind::Atom: return true;
    case ObjKind::One: return allow_one;
    case ObjKind::Tensor: return in_class(o.left(), allow_one) && in_class(o.right(), allow_one);
    case ObjKind::Bang: return in_class(o.inner(), allow_one);
    default: return false;
  }
}

bool strict_kind(GenKind k) {
  switch (k) {
    case GenKind::Id:
    case GenKind::Phi:
    case GenKind::Delta:
    case GenKind::Eps:
    case GenKind::Dup:
    case GenKind::Drop:
    case GenKind::Alpha:
    case GenKind::AlphaInv:
    case GenKind::Sig:
    case GenKind::SigInv:
      return true;
    default:
      return false;
  }
}

bool composite_kind(GenKind k) {
  switch (k) {
    case GenKind::Phi0:
    case GenKind::Lam:
    case GenKind::LamInv:
    case GenKind::Rho:
    case GenKind::RhoInv:
      return true;
    default:
      return strict_kind(k);
  }
}

Nat nat_pow2(const Nat& e, std::size_t guard) {
  Nat r = Nat::pow2(e);
  if (r.depth() > guard) throw MeasureError("tower depth guard tripped");
  return r;
}

struct NatOps {
  std::size_t guard;
  Nat constant(unsigned long k) const { return Nat(k); }
  Nat add(const Nat& a, const Nat& b) const { return a + b; }
  Nat twice(const Nat& a) const { return a.twice(); }
  Nat pow2(const Nat& a) const { return nat_pow2(a, guard); }
};

struct ExprOps {
  Expr constant(unsigned long k) const { return Expr::constant(k); }
  Expr add(const Expr& a, const Expr& b) const { return a + b; }
  Expr twice(const Expr& a) const { return a.times(2); }
  Expr pow2(const Expr& a) const { return Expr::pow2(a); }
};

template <class V, class Ops>
V theta_t(const Object& a, std::size_t occ, const V& x, const Ops& ops) {
  switch (a.kind()) {
    case ObjKind::Atom:
      if (occ != 0) throw MeasureError("occurrence not found");
      return x;
    case ObjKind::Bang:
      return ops.twice(theta_t(a.inner(), occ, x, ops));
    case ObjKind::Tensor: {
      std::size_t nl = occurrences(a.left());
      if (occ < nl) return ops.add(ops.constant(occurrences(a.right())), theta_t(a.left(), occ, x, ops));
      return ops.add(ops.constant(nl), theta_t(a.right(), occ - nl, x, ops));
    }
    default:
      throw MeasureError("occurrence not found in " + a.str());
  }
}

std::size_t hole_offset(const ContextPath& p) {
  std::size_t off = 0;
  for (const Frame& f : p) {
    switch (f.kind) {
      case FrameKind::TensorRight: off += occurrences(f.passive); break;
      case FrameKind::TensorLeft:
      case FrameKind::Bang: break;
      default: throw MeasureError("par context outside the measured class");
    }
  }
  return off;
}

// Dom occurrence feeding each cod occurrence of a structural generator.
std::vector<int> structural_perm(const Generator& g) {
  int next = 0;
  STreePtr t = stree_from_object(g.dom(), true, next);
  apply_glue(t, {}, g.kind);
  std::vector<int> out;
  stree_wires(t.get(), out);
  return out;
}

template <class V, class Ops>
std::vector<V> back_through(const Cell& cell, const std::vector<V>& cod, const Ops& ops) {
  const Generator& g = cell.gen;
  std::size_t off = hole_offset(cell.path);
  std::size_t n_out = occurrences(g.cod());
  std::size_t n_in = occurrences(g.dom());
  if (off + n_out > cod.size()) throw MeasureError("labeling does not match the codomain");
  std::vector<V> xs(cod.begin() + static_cast<long>(off), cod.begin() + static_cast<long>(off + n_out));
  std::vector<V> ys;
  switch (g.kind) {
    case GenKind::Id:
    case GenKind::Phi:
    case GenKind::Phi0:
      ys = xs;
      break;
    case GenKind::Delta:
      for (std::size_t i = 0; i < n_in; ++i) ys.push_back(ops.pow2(theta_t(g.subs[0], i, xs[i], ops)));
      break;
    case GenKind::Eps:
      for (std::size_t i = 0; i < n_in; ++i) ys.push_back(theta_t(g.subs[0], i, xs[i], ops));
      break;
    case GenKind::Dup:
      for (std::size_t i = 0; i < n_in; ++i)
        ys.push_back(ops.add(theta_t(g.subs[0], i, xs[i], ops), theta_t(g.subs[0], i, xs[n_in + i], ops)));
      break;
    case GenKind::Drop:
      for (std::size_t i = 0; i < n_in; ++i) ys.push_back(theta_t(g.subs[0], i, ops.constant(2), ops));
      break;
    case GenKind::Alpha:
    case GenKind::AlphaInv:
    case GenKind::Sig:
    case GenKind::SigInv:
    case GenKind::Lam:
    case GenKind::LamInv:
    case GenKind::Rho:
    case GenKind::RhoInv: {
      std::vector<int> perm = structural_perm(g);
      ys.resize(n_in, ops.constant(0));
      for (std::size_t j = 0; j < perm.size(); ++j) ys[static_cast<std::size_t>(perm[j])] = xs[j];
      break;
    }
    default:
      throw MeasureError(std::string("generator ") + gen_name(g.kind) + " is outside the measured class");
  }
  std::vector<V> r(cod.begin(), cod.begin() + static_cast<long>(off));
  r.insert(r.end(), ys.begin(), ys.end());
  r.insert(r.end(), cod.begin() + static_cast<long>(off + n_out), cod.end());
  return r;
}

template <class V, class Ops>
std::vector<V> propagate(const CanonicalForm& s, std::vector<V> labels, const Ops& ops) {
  if (classify(s) == MorphClass::Other) throw MeasureError("not a composite algebraic morphism");
  if (labels.size() != occurrences(s.cod)) throw MeasureError("unlabeled occurrence");
  for (auto it = s.cells.rbegin(); it != s.cells.rend(); ++it) labels = back_through(*it, labels, ops);
  return labels;
}

bool restricted_net(const Net& n) {
  for (const auto& nd : n.nodes) {
    if (!nd.alive) continue;
    if (nd.kind == NetNode::Box) {
      if (!restricted_net(*nd.inner)) return false;
    } else if (nd.gen.kind != GenKind::Delta && nd.gen.kind != GenKind::Phi) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::size_t occurrences(const Object& a) {
  switch (a.kind()) {
    case ObjKind::Atom: return 1;
    case ObjKind::Tensor:
    case ObjKind::Par: return occurrences(a.left()) + occurrences(a.right());
    case ObjKind::Bang:
    case ObjKind::Dual: return occurrences(a.inner());
    default: return 0;
  }
}

MorphClass classify(const CanonicalForm& c) {
  bool strict = true;
  for (const auto& cell : c.cells) {
    GenKind k = cell.gen.kind;
    if (!composite_kind(k)) return MorphClass::Other;
    for (const auto& s : cell.gen.subs) {
      if (!in_class(s, true)) return MorphClass::Other;
      if (!in_class(s, false)) strict = false;
    }
    for (const auto& f : cell.path) {
      if (f.kind == FrameKind::ParLeft || f.kind == FrameKind::ParRight) return MorphClass::Other;
      if (f.kind != FrameKind::Bang && !in_class(f.passive, true)) return MorphClass::Other;
    }
    if (!strict_kind(k)) strict = false;
  }
  if (!in_class(c.dom, true) || !in_class(c.cod, true)) return MorphClass::Other;
  return strict ? MorphClass::StrictCompositeAlgebraic : MorphClass::CompositeAlgebraic;
}

MorphClass classify(const MorphTerm& m) { return classify(flatten(m)); }

Nat theta(const Object& a, std::size_t occ, const Nat& x) { return theta_t(a, occ, x, NatOps{64}); }
Expr theta(const Object& a, std::size_t occ, const Expr& x) { return theta_t(a, occ, x, ExprOps{}); }

OccLabeling measure(const CanonicalForm& s, const OccLabeling& cod, std::size_t depth_guard) {
  if (cod.object.valid() && cod.object != s.cod) throw MeasureError("labeling is for a different object");
  for (const Nat& x : cod.labels)
    if (x < Nat(2)) throw MeasureError("labels must be at least 2");
  return {s.dom, propagate(s, cod.labels, NatOps{depth_guard})};
}

OccLabeling measure(const MorphTerm& s, const OccLabeling& cod, std::size_t depth_guard) {
  return measure(flatten(s), cod, depth_guard);
}

std::vector<Expr> measure_exprs(const CanonicalForm& s) {
  std::vector<Expr> xs;
  for (std::size_t i = 0; i < occurrences(s.cod); ++i) xs.push_back(Expr::var(static_cast<int>(i) + 1));
  return propagate(s, xs, ExprOps{});
}

bool is_restricted_naturality(const Net& top, const Redex& r) {
  if (r.cls() != RuleClass::Naturality) return false;
  const Net* t = &top;
  for (int b : r.boxes) t = t->nodes.at(static_cast<std::size_t>(b)).inner.get();
  return restricted_net(*t->nodes.at(static_cast<std::size_t>(r.nodes.at(0))).inner);
}

bool is_restricted_naturality(const CanonicalForm& c, const Redex& r) {
  return is_restricted_naturality(form_net(c), r);
}

Decrease check_decrease(const CanonicalForm& before, const CanonicalForm& after, const Redex& r,
                        const OccLabeling& labels, std::size_t depth_guard) {
  OccLabeling a = measure(before, labels, depth_guard);
  OccLabeling b = measure(after, labels, depth_guard);
  Nat sa, sb;
  for (const Nat& x : a.labels) sa = sa + x;
  for (const Nat& x : b.labels) sb = sb + x;
  if (sb < sa) return Decrease::Decreased;
  if (sb == sa && r.rule >= 13 && r.rule <= 17) return Decrease::Unchanged;
  return Decrease::Violation;
}

}  // namespace lincat
