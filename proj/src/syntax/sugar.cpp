#include "lincat/sugar.hpp"

namespace lincat {

namespace {

MorphTerm G(GenKind k, std::vector<Object> subs) { return MorphTerm::gen(k, std::move(subs)); }
MorphTerm id(const Object& a) { return G(GenKind::Id, {a}); }

}  // namespace

Object lollipop(const Object& a, const Object& b) { return Object::par(b, Object::dual(a)); }

MorphTerm expand_abs(const Object& a, const Object& b) {
  Object bd = Object::dual(b);
  return MorphTerm::seq(
      MorphTerm::seq(G(GenKind::RhoInv, {a}), MorphTerm::tensor(id(a), G(GenKind::Tau, {b}))),
      G(GenKind::Dist, {a, b, bd}));
}

MorphTerm expand_ev(const Object& a, const Object& b) {
  Object bd = Object::dual(b);
  return MorphTerm::seq(
      MorphTerm::seq(G(GenKind::DistP, {a, bd, b}), MorphTerm::par(id(a), G(GenKind::Gamma, {b}))),
      G(GenKind::BRho, {a}));
}

MorphTerm expand_dual(const MorphTerm& f) {
  Typing t = infer_type(f);
  const Object& a = t.dom;
  const Object& b = t.cod;
  Object ad = Object::dual(a);
  Object bd = Object::dual(b);
  std::vector<MorphTerm> cells = {
      G(GenKind::RhoInv, {bd}),
      MorphTerm::tensor(id(bd), G(GenKind::Tau, {a})),
      MorphTerm::tensor(id(bd), MorphTerm::par(f, id(ad))),
      G(GenKind::Dist, {bd, b, ad}),
      MorphTerm::par(G(GenKind::Gamma, {b}), id(ad)),
      G(GenKind::BLam, {ad}),
  };
  return seq_all(cells, bd);
}

MorphTerm expand_sugar(const MorphTerm& m) {
  switch (m.kind()) {
    case TermKind::Gen:
      return m;
    case TermKind::Seq:
      return MorphTerm::seq(expand_sugar(m.first()), expand_sugar(m.second()));
    case TermKind::Tensor:
      return MorphTerm::tensor(expand_sugar(m.first()), expand_sugar(m.second()));
    case TermKind::Par:
      return MorphTerm::par(expand_sugar(m.first()), expand_sugar(m.second()));
    case TermKind::Bang:
      return MorphTerm::bang(expand_sugar(m.inner()));
    case TermKind::Dualize:
      return expand_dual(expand_sugar(m.inner()));
    case TermKind::Abs:
      return expand_abs(m.obj_a(), m.obj_b());
    case TermKind::Ev:
      return expand_ev(m.obj_a(), m.obj_b());
  }
  return m;
}

}  // namespace lincat
