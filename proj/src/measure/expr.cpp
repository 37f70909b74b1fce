#include "lincat/expr.hpp"

namespace lincat {

int Expr::compare_terms(const Term& a, const Term& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (a.kind == 1 && a.var != b.var) return a.var < b.var ? -1 : 1;
  if (a.kind == 0) return compare(*a.exp, *b.exp);
  return 0;
}

int Expr::compare(const Expr& a, const Expr& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare_terms(a.terms_[i], b.terms_[i]);
    if (c) return c;
    if (a.terms_[i].coef != b.terms_[i].coef) return a.terms_[i].coef < b.terms_[i].coef ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

bool operator==(const Expr& a, const Expr& b) { return Expr::compare(a, b) == 0; }
bool operator<(const Expr& a, const Expr& b) { return Expr::compare(a, b) < 0; }

void Expr::add_term(const Term& t) {
  if (t.coef == 0) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    int c = compare_terms(t, *it);
    if (c == 0) {
      it->coef += t.coef;
      return;
    }
    if (c < 0) {
      terms_.insert(it, t);
      return;
    }
  }
  terms_.push_back(t);
}

Expr Expr::constant(unsigned long c) {
  Expr e;
  e.add_term({2, 0, nullptr, c});
  return e;
}

Expr Expr::var(int index) {
  Expr e;
  e.add_term({1, index, nullptr, 1});
  return e;
}

Expr Expr::pow2(const Expr& x) {
  if (x.terms_.empty()) return constant(1);
  if (x.terms_.size() == 1 && x.terms_[0].kind == 2 && x.terms_[0].coef < 32)
    return constant(1ul << x.terms_[0].coef);
  Expr e;
  e.add_term({0, 0, std::make_shared<const Expr>(x), 1});
  return e;
}

Expr operator+(const Expr& a, const Expr& b) {
  Expr r = a;
  for (const auto& t : b.terms_) r.add_term(t);
  return r;
}

Expr Expr::times(unsigned long k) const {
  Expr r;
  for (auto t : terms_) {
    t.coef *= k;
    r.add_term(t);
  }
  return r;
}

Nat Expr::eval(const std::vector<Nat>& xs, std::size_t depth_guard) const {
  Nat r;
  for (const auto& t : terms_) {
    Nat v;
    if (t.kind == 0) {
      v = Nat::pow2(t.exp->eval(xs, depth_guard));
      if (v.depth() > depth_guard) throw MeasureError("tower depth guard tripped");
    } else if (t.kind == 1) {
      if (t.var < 1 || static_cast<std::size_t>(t.var) > xs.size()) throw MeasureError("unlabeled occurrence");
      v = xs[static_cast<std::size_t>(t.var - 1)];
    } else {
      v = Nat(1);
    }
    r = r + v.times(t.coef);
  }
  return r;
}

std::string Expr::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += "+";
    std::string body;
    if (t.kind == 2) {
      s += std::to_string(t.coef);
      continue;
    }
    if (t.kind == 1) body = "x" + std::to_string(t.var);
    else {
      std::string inner = t.exp->str();
      bool atomic = t.exp->terms_.size() == 1 && t.exp->terms_[0].coef == 1 && t.exp->terms_[0].kind != 0;
      body = atomic ? "2^" + inner : "2^(" + inner + ")";
    }
    s += t.coef == 1 ? body : std::to_string(t.coef) + "*" + body;
  }
  return s;
}

}  // namespace lincat
