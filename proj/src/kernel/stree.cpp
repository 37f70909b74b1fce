#include "lincat/stree.hpp"

#include <string>

namespace lincat {

Object STree::object() const {
  switch (kind) {
    case Leaf: return obj;
    case One: return Object::one();
    case Bot: return Object::bot();
    case Tensor: return Object::tensor(l->object(), r->object());
    case Par: return Object::par(l->object(), r->object());
    case Bang: return Object::bang(l->object());
  }
  return {};
}

STreePtr STree::clone() const {
  auto t = std::make_unique<STree>();
  t->kind = kind;
  t->wire = wire;
  t->obj = obj;
  t->frozen = frozen;
  t->tag = tag;
  if (l) t->l = l->clone();
  if (r) t->r = r->clone();
  return t;
}

namespace {

STreePtr node(STree::Kind k, STreePtr l = nullptr, STreePtr r = nullptr) {
  auto t = std::make_unique<STree>();
  t->kind = k;
  t->l = std::move(l);
  t->r = std::move(r);
  return t;
}

STreePtr build(const Object& o, bool open_bang, const std::vector<int>* given, std::size_t& gi,
               int& next_wire, std::vector<int>* wires) {
  switch (o.kind()) {
    case ObjKind::One: return node(STree::One);
    case ObjKind::Bot: return node(STree::Bot);
    case ObjKind::Tensor:
    case ObjKind::Par: {
      auto l = build(o.left(), open_bang, given, gi, next_wire, wires);
      auto r = build(o.right(), open_bang, given, gi, next_wire, wires);
      return node(o.kind() == ObjKind::Tensor ? STree::Tensor : STree::Par, std::move(l),
                  std::move(r));
    }
    case ObjKind::Bang:
      if (open_bang) return node(STree::Bang, build(o.inner(), open_bang, given, gi, next_wire, wires));
      [[fallthrough]];
    default: {
      auto t = node(STree::Leaf);
      t->obj = o;
      if (given) {
        if (gi >= given->size()) throw TypeError("wire list shorter than object leaves");
        t->wire = (*given)[gi++];
      } else {
        t->wire = next_wire++;
      }
      if (wires) wires->push_back(t->wire);
      return t;
    }
  }
}

[[noreturn]] void shape_error(GenKind k, const STree& t) {
  throw TypeError(std::string("cannot apply ") + gen_name(k) + " to " + t.object().str());
}

}  // namespace

STreePtr stree_from_object(const Object& o, bool open_bang, int& next_wire,
                           std::vector<int>* wires) {
  std::size_t gi = 0;
  return build(o, open_bang, nullptr, gi, next_wire, wires);
}

STreePtr stree_with_wires(const Object& o, const std::vector<int>& wires) {
  std::size_t gi = 0;
  int dummy = 0;
  auto t = build(o, false, &wires, gi, dummy, nullptr);
  if (gi != wires.size()) throw TypeError("wire list longer than object leaves");
  return t;
}

STree* stree_at(STree* root, const DirPath& p) {
  STree* t = root;
  for (Dir d : p) {
    if (!t) return nullptr;
    if (d == Dir::B) {
      if (t->kind != STree::Bang) return nullptr;
      t = t->l.get();
    } else {
      if (t->kind != STree::Tensor && t->kind != STree::Par) return nullptr;
      t = d == Dir::L ? t->l.get() : t->r.get();
    }
  }
  return t;
}

STreePtr& stree_slot(STreePtr& root, const DirPath& p) {
  STreePtr* s = &root;
  for (Dir d : p) {
    STree* t = s->get();
    if (d == Dir::B) {
      if (t->kind != STree::Bang) throw TypeError("path enters a non-bang node");
      s = &t->l;
    } else {
      if (t->kind != STree::Tensor && t->kind != STree::Par)
        throw TypeError("path enters a leaf");
      s = d == Dir::L ? &t->l : &t->r;
    }
  }
  return *s;
}

void stree_wires(const STree* t, std::vector<int>& out) {
  if (!t) return;
  if (t->kind == STree::Leaf) {
    out.push_back(t->wire);
    return;
  }
  stree_wires(t->l.get(), out);
  stree_wires(t->r.get(), out);
}

bool stree_find(const STree* t, int wire, DirPath& out) {
  if (!t) return false;
  if (t->kind == STree::Leaf) return t->wire == wire;
  if (t->kind == STree::Bang) {
    out.push_back(Dir::B);
    if (stree_find(t->l.get(), wire, out)) return true;
    out.pop_back();
    return false;
  }
  out.push_back(Dir::L);
  if (stree_find(t->l.get(), wire, out)) return true;
  out.back() = Dir::R;
  if (stree_find(t->r.get(), wire, out)) return true;
  out.pop_back();
  return false;
}

void apply_glue(STreePtr& root, const DirPath& p, GenKind k) {
  STreePtr& s = stree_slot(root, p);
  STree& t = *s;
  auto is = [](const STreePtr& x, STree::Kind kind) { return x && x->kind == kind; };
  const STree::Kind T = STree::Tensor;
  const STree::Kind P = STree::Par;
  switch (k) {
    case GenKind::Alpha:
    case GenKind::BAlpha: {
      STree::Kind c = k == GenKind::Alpha ? T : P;
      if (t.kind != c || !is(t.l, c)) shape_error(k, t);
      STreePtr ab = std::move(t.l);
      STreePtr cc = std::move(t.r);
      s = node(c, std::move(ab->l), node(c, std::move(ab->r), std::move(cc)));
      return;
    }
    case GenKind::AlphaInv:
    case GenKind::BAlphaInv: {
      STree::Kind c = k == GenKind::AlphaInv ? T : P;
      if (t.kind != c || !is(t.r, c)) shape_error(k, t);
      STreePtr a = std::move(t.l);
      STreePtr bc = std::move(t.r);
      s = node(c, node(c, std::move(a), std::move(bc->l)), std::move(bc->r));
      return;
    }
    case GenKind::Lam:
    case GenKind::BLam: {
      STree::Kind c = k == GenKind::Lam ? T : P;
      STree::Kind u = k == GenKind::Lam ? STree::One : STree::Bot;
      if (t.kind != c || !is(t.l, u)) shape_error(k, t);
      STreePtr a = std::move(t.r);
      s = std::move(a);
      return;
    }
    case GenKind::Rho:
    case GenKind::BRho: {
      STree::Kind c = k == GenKind::Rho ? T : P;
      STree::Kind u = k == GenKind::Rho ? STree::One : STree::Bot;
      if (t.kind != c || !is(t.r, u)) shape_error(k, t);
      STreePtr a = std::move(t.l);
      s = std::move(a);
      return;
    }
    case GenKind::LamInv:
    case GenKind::BLamInv: {
      STree::Kind c = k == GenKind::LamInv ? T : P;
      STree::Kind u = k == GenKind::LamInv ? STree::One : STree::Bot;
      STreePtr a = std::move(s);
      s = node(c, node(u), std::move(a));
      return;
    }
    case GenKind::RhoInv:
    case GenKind::BRhoInv: {
      STree::Kind c = k == GenKind::RhoInv ? T : P;
      STree::Kind u = k == GenKind::RhoInv ? STree::One : STree::Bot;
      STreePtr a = std::move(s);
      s = node(c, std::move(a), node(u));
      return;
    }
    case GenKind::Sig:
    case GenKind::SigInv:
    case GenKind::BSig:
    case GenKind::BSigInv: {
      STree::Kind c = (k == GenKind::Sig || k == GenKind::SigInv) ? T : P;
      if (t.kind != c) shape_error(k, t);
      std::swap(t.l, t.r);
      return;
    }
    case GenKind::Dist: {
      if (t.kind != T || !is(t.r, P)) shape_error(k, t);
      STreePtr a = std::move(t.l);
      STreePtr bc = std::move(t.r);
      s = node(P, node(T, std::move(a), std::move(bc->l)), std::move(bc->r));
      return;
    }
    case GenKind::DistP: {
      if (t.kind != T || !is(t.l, P)) shape_error(k, t);
      STreePtr ab = std::move(t.l);
      STreePtr c = std::move(t.r);
      s = node(P, std::move(ab->l), node(T, std::move(ab->r), std::move(c)));
      return;
    }
    default:
      throw TypeError(std::string(gen_name(k)) + " is not a wiring generator");
  }
}

}  // namespace lincat
