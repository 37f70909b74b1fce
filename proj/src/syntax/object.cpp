#include "lincat/object.hpp"

#include <functional>
#include <stdexcept>

namespace lincat {

struct Object::Node {
  ObjKind kind;
  std::string name;
  Object left;
  Object right;
  std::string text;
  std::size_t hash = 0;
  std::size_t size = 1;
};

namespace {

// Binding strength: par 1, tensor 2, prefix bang 3, postfix dual 4, atoms 5.
int strength(ObjKind k) {
  switch (k) {
    case ObjKind::Par: return 1;
    case ObjKind::Tensor: return 2;
    case ObjKind::Bang: return 3;
    case ObjKind::Dual: return 4;
    default: return 5;
  }
}

std::string wrap(const Object& o, int need) {
  if (strength(o.kind()) < need) return "(" + o.str() + ")";
  return o.str();
}

}  // namespace

Object Object::atom(const std::string& name) {
  auto n = std::make_shared<Node>();
  n->kind = ObjKind::Atom;
  n->name = name;
  n->text = name;
  n->hash = std::hash<std::string>{}(n->text);
  return Object(n);
}

Object Object::one() {
  static const Object kOne = [] {
    auto n = std::make_shared<Node>();
    n->kind = ObjKind::One;
    n->text = "1";
    n->hash = std::hash<std::string>{}(n->text);
    return Object(n);
  }();
  return kOne;
}

Object Object::bot() {
  static const Object kBot = [] {
    auto n = std::make_shared<Node>();
    n->kind = ObjKind::Bot;
    n->text = "bot";
    n->hash = std::hash<std::string>{}(n->text);
    return Object(n);
  }();
  return kBot;
}

Object Object::tensor(const Object& l, const Object& r) {
  auto n = std::make_shared<Node>();
  n->kind = ObjKind::Tensor;
  n->left = l;
  n->right = r;
  n->text = wrap(l, 2) + "*" + wrap(r, 3);
  n->hash = std::hash<std::string>{}(n->text);
  n->size = 1 + l.size() + r.size();
  return Object(n);
}

Object Object::par(const Object& l, const Object& r) {
  auto n = std::make_shared<Node>();
  n->kind = ObjKind::Par;
  n->left = l;
  n->right = r;
  n->text = wrap(l, 1) + "%" + wrap(r, 2);
  n->hash = std::hash<std::string>{}(n->text);
  n->size = 1 + l.size() + r.size();
  return Object(n);
}

Object Object::dual(const Object& a) {
  auto n = std::make_shared<Node>();
  n->kind = ObjKind::Dual;
  n->left = a;
  n->text = wrap(a, 4) + "^";
  n->hash = std::hash<std::string>{}(n->text);
  n->size = 1 + a.size();
  return Object(n);
}

Object Object::bang(const Object& a) {
  auto n = std::make_shared<Node>();
  n->kind = ObjKind::Bang;
  n->left = a;
  n->text = "!" + wrap(a, 3);
  n->hash = std::hash<std::string>{}(n->text);
  n->size = 1 + a.size();
  return Object(n);
}

ObjKind Object::kind() const { return node_->kind; }
const std::string& Object::name() const { return node_->name; }
const Object& Object::left() const { return node_->left; }
const Object& Object::right() const { return node_->right; }
const Object& Object::inner() const { return node_->left; }
const std::string& Object::str() const {
  static const std::string kNull = "<null>";
  return node_ ? node_->text : kNull;
}
std::size_t Object::hash() const { return node_ ? node_->hash : 0; }
std::size_t Object::size() const { return node_ ? node_->size : 0; }

bool Object::is_unit() const {
  return node_ && (node_->kind == ObjKind::One || node_->kind == ObjKind::Bot);
}
bool Object::is_binary() const {
  return node_ && (node_->kind == ObjKind::Tensor || node_->kind == ObjKind::Par);
}

bool operator==(const Object& a, const Object& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  return a.node_->hash == b.node_->hash && a.node_->text == b.node_->text;
}

bool operator<(const Object& a, const Object& b) { return a.str() < b.str(); }

std::ostream& operator<<(std::ostream& os, const Object& o) { return os << o.str(); }

std::vector<Object> wire_leaves(const Object& o) {
  std::vector<Object> out;
  std::function<void(const Object&)> go = [&](const Object& x) {
    switch (x.kind()) {
      case ObjKind::One:
      case ObjKind::Bot:
        return;
      case ObjKind::Tensor:
      case ObjKind::Par:
        go(x.left());
        go(x.right());
        return;
      default:
        out.push_back(x);
    }
  };
  go(o);
  return out;
}

std::size_t deep_leaf_count(const Object& o) {
  switch (o.kind()) {
    case ObjKind::Atom:
    case ObjKind::Dual:
      return 1;
    case ObjKind::One:
    case ObjKind::Bot:
      return 0;
    case ObjKind::Bang:
      return deep_leaf_count(o.inner());
    default:
      return deep_leaf_count(o.left()) + deep_leaf_count(o.right());
  }
}

}  // namespace lincat
