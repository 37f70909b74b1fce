#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lincat/nat.hpp"

namespace lincat {

// Closed-form label expression: a sum of c*x_i, c*2^(e) and a constant,
// over codomain labels x_1..x_n.
class Expr {
 public:
  Expr() = default;
  static Expr constant(unsigned long c);
  static Expr var(int index);  // 1-based
  static Expr pow2(const Expr& e);

  friend Expr operator+(const Expr& a, const Expr& b);
  Expr times(unsigned long k) const;

  Nat eval(const std::vector<Nat>& xs, std::size_t depth_guard = 64) const;
  std::string str() const;

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator<(const Expr& a, const Expr& b);

 private:
  struct Term {
    int kind = 0;  // 0: power of two, 1: variable, 2: constant
    int var = 0;
    std::shared_ptr<const Expr> exp;
    unsigned long coef = 0;
  };
  static int compare_terms(const Term& a, const Term& b);
  static int compare(const Expr& a, const Expr& b);
  void add_term(const Term& t);

  std::vector<Term> terms_;  // sorted, no duplicates, nonzero coefficients
};

}  // namespace lincat
