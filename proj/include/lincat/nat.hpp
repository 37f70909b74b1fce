#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lincat {

class MeasureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact natural number in hereditary binary form: a GMP integer below
// 2^kLowBits plus distinct powers 2^E whose exponents E >= kLowBits are
// themselves Nats. Towers like 2^2^2^x stay small and comparable.
class Nat {
 public:
  static constexpr unsigned long kLowBits = 4096;

  Nat() = default;
  Nat(unsigned long v) : low_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Nat(const mpz_class& v);

  static Nat pow2(const Nat& e);

  friend Nat operator+(const Nat& a, const Nat& b);
  Nat twice() const;
  Nat times(unsigned long k) const;

  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b);
  friend bool operator==(const Nat& a, const Nat& b) { return (a <=> b) == 0; }

  bool is_small() const { return high_.empty(); }
  const mpz_class& low() const { return low_; }
  // Height of the exponent tower (0 for plain integers).
  std::size_t depth() const;
  // Decimal when small, otherwise nested "2^(...)" sums.
  std::string str() const;

 private:
  void carry_low();
  void add_power(const Nat& e);

  mpz_class low_;
  std::vector<Nat> high_;  // strictly descending
};

}  // namespace lincat
