#pragma once

#include <cstddef>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace lincat {

enum class ObjKind { Atom, One, Bot, Tensor, Par, Dual, Bang };

// Immutable object expression. Equality is syntactic; A^^ and A differ.
class Object {
 public:
  Object() = default;

  static Object atom(const std::string& name);
  static Object one();
  static Object bot();
  static Object tensor(const Object& l, const Object& r);
  static Object par(const Object& l, const Object& r);
  static Object dual(const Object& a);
  static Object bang(const Object& a);

  bool valid() const { return node_ != nullptr; }
  ObjKind kind() const;
  const std::string& name() const;
  const Object& left() const;
  const Object& right() const;
  const Object& inner() const;

  // Minimal-parenthesis ASCII rendering; doubles as the identity key.
  const std::string& str() const;
  std::size_t hash() const;
  std::size_t size() const;

  bool is_unit() const;
  bool is_binary() const;

  friend bool operator==(const Object& a, const Object& b);
  friend bool operator!=(const Object& a, const Object& b) { return !(a == b); }
  friend bool operator<(const Object& a, const Object& b);

 private:
  struct Node;
  explicit Object(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Object& o);

// Leaves that a wiring diagram treats as opaque: atoms, duals and banged
// objects, read left to right through tensor and par. Units are skipped.
std::vector<Object> wire_leaves(const Object& o);

// Atom and dual leaves, descending through tensor, par and bang.
std::size_t deep_leaf_count(const Object& o);

struct ObjectHash {
  std::size_t operator()(const Object& o) const { return o.hash(); }
};

}  // namespace lincat
