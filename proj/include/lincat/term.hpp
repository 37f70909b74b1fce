#pragma once

#include <memory>
#include <string>
#include <utility>

#include "lincat/generator.hpp"

namespace lincat {

enum class TermKind { Gen, Seq, Tensor, Par, Bang, Dualize, Abs, Ev };

// Morphism term. Dualize/Abs/Ev only occur when parsing without expansion.
class MorphTerm {
 public:
  MorphTerm() = default;

  static MorphTerm gen(const Generator& g);
  static MorphTerm gen(GenKind k, std::vector<Object> subs);
  static MorphTerm seq(const MorphTerm& f, const MorphTerm& g);
  static MorphTerm tensor(const MorphTerm& f, const MorphTerm& g);
  static MorphTerm par(const MorphTerm& f, const MorphTerm& g);
  static MorphTerm bang(const MorphTerm& f);
  static MorphTerm dualize(const MorphTerm& f);
  static MorphTerm abs(const Object& a, const Object& b);
  static MorphTerm ev(const Object& a, const Object& b);

  bool valid() const { return node_ != nullptr; }
  TermKind kind() const;
  const Generator& generator() const;
  const MorphTerm& first() const;
  const MorphTerm& second() const;
  const MorphTerm& inner() const;
  const Object& obj_a() const;
  const Object& obj_b() const;

  friend bool operator==(const MorphTerm& a, const MorphTerm& b);
  friend bool operator!=(const MorphTerm& a, const MorphTerm& b) { return !(a == b); }

 private:
  struct Node;
  explicit MorphTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Typing {
  Object dom;
  Object cod;
};

// Throws TypeError naming the offending composition and both objects.
Typing infer_type(const MorphTerm& m);

std::string pretty(const MorphTerm& m);

// Folds a list with ";" (empty list gives id{dom}).
MorphTerm seq_all(const std::vector<MorphTerm>& parts, const Object& dom);

}  // namespace lincat
