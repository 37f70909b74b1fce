#include "lincat/term.hpp"

#include <sstream>

namespace lincat {

struct MorphTerm::Node {
  TermKind kind;
  Generator gen;
  MorphTerm a;
  MorphTerm b;
  Object oa;
  Object ob;
};

MorphTerm MorphTerm::gen(const Generator& g) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Gen;
  n->gen = g;
  return MorphTerm(n);
}

MorphTerm MorphTerm::gen(GenKind k, std::vector<Object> subs) {
  return gen(Generator(k, std::move(subs)));
}

MorphTerm MorphTerm::seq(const MorphTerm& f, const MorphTerm& g) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Seq;
  n->a = f;
  n->b = g;
  return MorphTerm(n);
}

MorphTerm MorphTerm::tensor(const MorphTerm& f, const MorphTerm& g) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Tensor;
  n->a = f;
  n->b = g;
  return MorphTerm(n);
}

MorphTerm MorphTerm::par(const MorphTerm& f, const MorphTerm& g) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Par;
  n->a = f;
  n->b = g;
  return MorphTerm(n);
}

MorphTerm MorphTerm::bang(const MorphTerm& f) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Bang;
  n->a = f;
  return MorphTerm(n);
}

MorphTerm MorphTerm::dualize(const MorphTerm& f) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Dualize;
  n->a = f;
  return MorphTerm(n);
}

MorphTerm MorphTerm::abs(const Object& a, const Object& b) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Abs;
  n->oa = a;
  n->ob = b;
  return MorphTerm(n);
}

MorphTerm MorphTerm::ev(const Object& a, const Object& b) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Ev;
  n->oa = a;
  n->ob = b;
  return MorphTerm(n);
}

TermKind MorphTerm::kind() const { return node_->kind; }
const Generator& MorphTerm::generator() const { return node_->gen; }
const MorphTerm& MorphTerm::first() const { return node_->a; }
const MorphTerm& MorphTerm::second() const { return node_->b; }
const MorphTerm& MorphTerm::inner() const { return node_->a; }
const Object& MorphTerm::obj_a() const { return node_->oa; }
const Object& MorphTerm::obj_b() const { return node_->ob; }

bool operator==(const MorphTerm& x, const MorphTerm& y) {
  if (x.node_ == y.node_) return true;
  if (!x.node_ || !y.node_) return false;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case TermKind::Gen:
      return x.generator() == y.generator();
    case TermKind::Seq:
    case TermKind::Tensor:
    case TermKind::Par:
      return x.first() == y.first() && x.second() == y.second();
    case TermKind::Bang:
    case TermKind::Dualize:
      return x.inner() == y.inner();
    case TermKind::Abs:
    case TermKind::Ev:
      return x.obj_a() == y.obj_a() && x.obj_b() == y.obj_b();
  }
  return false;
}

Typing infer_type(const MorphTerm& m) {
  switch (m.kind()) {
    case TermKind::Gen:
      return {m.generator().dom(), m.generator().cod()};
    case TermKind::Seq: {
      Typing f = infer_type(m.first());
      Typing g = infer_type(m.second());
      if (f.cod != g.dom) {
        std::ostringstream msg;
        msg << "composition mismatch in '" << pretty(m) << "': left codomain " << f.cod
            << " but right domain " << g.dom;
        throw TypeError(msg.str());
      }
      return {f.dom, g.cod};
    }
    case TermKind::Tensor: {
      Typing f = infer_type(m.first());
      Typing g = infer_type(m.second());
      return {Object::tensor(f.dom, g.dom), Object::tensor(f.cod, g.cod)};
    }
    case TermKind::Par: {
      Typing f = infer_type(m.first());
      Typing g = infer_type(m.second());
      return {Object::par(f.dom, g.dom), Object::par(f.cod, g.cod)};
    }
    case TermKind::Bang: {
      Typing f = infer_type(m.inner());
      return {Object::bang(f.dom), Object::bang(f.cod)};
    }
    case TermKind::Dualize: {
      Typing f = infer_type(m.inner());
      return {Object::dual(f.cod), Object::dual(f.dom)};
    }
    case TermKind::Abs:
      return {m.obj_a(),
              Object::par(Object::tensor(m.obj_a(), m.obj_b()), Object::dual(m.obj_b()))};
    case TermKind::Ev:
      return {Object::tensor(Object::par(m.obj_a(), Object::dual(m.obj_b())), m.obj_b()),
              m.obj_a()};
  }
  throw TypeError("unreachable term kind");
}

namespace {

// seq 1, par 2, tensor 3, bang 4, postfix dual 5, atomic 6.
int strength(TermKind k) {
  switch (k) {
    case TermKind::Seq: return 1;
    case TermKind::Par: return 2;
    case TermKind::Tensor: return 3;
    case TermKind::Bang: return 4;
    case TermKind::Dualize: return 5;
    default: return 6;
  }
}

std::string render(const MorphTerm& m, int need);

std::string body(const MorphTerm& m) {
  switch (m.kind()) {
    case TermKind::Gen:
      return m.generator().str();
    case TermKind::Seq:
      return render(m.first(), 1) + " ; " + render(m.second(), 2);
    case TermKind::Par:
      return render(m.first(), 2) + " % " + render(m.second(), 3);
    case TermKind::Tensor:
      return render(m.first(), 3) + " * " + render(m.second(), 4);
    case TermKind::Bang:
      return "!" + render(m.inner(), 4);
    case TermKind::Dualize:
      return render(m.inner(), 5) + "^";
    case TermKind::Abs:
      return "abs{" + m.obj_a().str() + "," + m.obj_b().str() + "}";
    case TermKind::Ev:
      return "ev{" + m.obj_a().str() + "," + m.obj_b().str() + "}";
  }
  return "";
}

std::string render(const MorphTerm& m, int need) {
  std::string s = body(m);
  if (strength(m.kind()) < need) return "(" + s + ")";
  return s;
}

}  // namespace

std::string pretty(const MorphTerm& m) { return render(m, 0); }

MorphTerm seq_all(const std::vector<MorphTerm>& parts, const Object& dom) {
  if (parts.empty()) return MorphTerm::gen(GenKind::Id, {dom});
  MorphTerm acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = MorphTerm::seq(acc, parts[i]);
  return acc;
}

}  // namespace lincat
