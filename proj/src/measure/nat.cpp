#include "lincat/nat.hpp"

#include <algorithm>

namespace lincat {

namespace {

const mpz_class& low_limit() {
  static const mpz_class limit = [] {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, Nat::kLowBits);
    return v;
  }();
  return limit;
}

}  // namespace

Nat::Nat(const mpz_class& v) : low_(v) {
  if (v < 0) throw MeasureError("negative natural");
  if (v >= low_limit()) {
    low_ = 0;
    std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > kLowBits;)
      if (mpz_tstbit(v.get_mpz_t(), i)) high_.push_back(Nat(static_cast<unsigned long>(i)));
    mpz_class rest = v;
    mpz_tdiv_r_2exp(rest.get_mpz_t(), v.get_mpz_t(), kLowBits);
    low_ = rest;
  }
}

Nat Nat::pow2(const Nat& e) {
  Nat r;
  if (e.is_small() && e.low_ < kLowBits) {
    mpz_ui_pow_ui(r.low_.get_mpz_t(), 2, e.low_.get_ui());
    return r;
  }
  r.high_.push_back(e);
  return r;
}

void Nat::carry_low() {
  if (low_ >= low_limit()) {
    low_ -= low_limit();
    add_power(Nat(kLowBits));
  }
}

void Nat::add_power(const Nat& e0) {
  Nat e = e0;
  for (;;) {
    auto it = std::find(high_.begin(), high_.end(), e);
    if (it == high_.end()) {
      auto pos = std::find_if(high_.begin(), high_.end(), [&](const Nat& x) { return x < e; });
      high_.insert(pos, e);
      return;
    }
    high_.erase(it);
    e = e + Nat(1);
  }
}

Nat operator+(const Nat& a, const Nat& b) {
  Nat r = a;
  r.low_ += b.low_;
  r.carry_low();
  for (const Nat& e : b.high_) r.add_power(e);
  return r;
}

Nat Nat::twice() const {
  Nat r;
  r.low_ = low_ * 2;
  for (const Nat& e : high_) r.high_.push_back(e + Nat(1));
  r.carry_low();
  return r;
}

Nat Nat::times(unsigned long k) const {
  Nat acc;
  Nat base = *this;
  while (k) {
    if (k & 1) acc = acc + base;
    k >>= 1;
    if (k) base = base.twice();
  }
  return acc;
}

std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
  std::size_t n = std::min(a.high_.size(), b.high_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = a.high_[i] <=> b.high_[i];
    if (c != 0) return c;
  }
  if (a.high_.size() != b.high_.size()) return a.high_.size() <=> b.high_.size();
  int c = cmp(a.low_, b.low_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::size_t Nat::depth() const {
  std::size_t d = 0;
  for (const Nat& e : high_) d = std::max(d, e.depth() + 1);
  return d;
}

std::string Nat::str() const {
  if (is_small()) return low_.get_str();
  std::string s;
  for (const Nat& e : high_) {
    if (!s.empty()) s += "+";
    s += "2^(" + e.str() + ")";
  }
  if (low_ != 0) s += "+" + low_.get_str();
  return s;
}

}  // namespace lincat
