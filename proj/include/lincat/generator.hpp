#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lincat/object.hpp"

namespace lincat {

enum class GenKind {
  Id,
  Alpha, AlphaInv, Lam, LamInv, Rho, RhoInv, Sig, SigInv,
  BAlpha, BAlphaInv, BLam, BLamInv, BRho, BRhoInv, BSig, BSigInv,
  Dist, DistP,
  Tau, Gamma,
  Phi, Phi0, Delta, Eps, Dup, Drop,
};

inline constexpr int kGenKindCount = static_cast<int>(GenKind::Drop) + 1;

// Concrete-syntax name, with "~" for inverses (e.g. "alpha~", "dist'").
const char* gen_name(GenKind k);
std::optional<GenKind> gen_from_name(const std::string& base, bool inverse);
int gen_arity(GenKind k);

// Coherence isomorphisms of either monoidal structure (not id, not dist).
bool is_structural(GenKind k);
// Maps that only rearrange wires: structural isos plus dist and dist'.
bool is_glue(GenKind k);
bool is_inverse_kind(GenKind k);
std::optional<GenKind> inverse_kind(GenKind k);

class TypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Generator {
  GenKind kind = GenKind::Id;
  std::vector<Object> subs;

  Generator() = default;
  Generator(GenKind k, std::vector<Object> s);

  Object dom() const;
  Object cod() const;
  std::string str() const;

  // The generator g' with g;g' = id under the inverse laws (sig and bsig are
  // their own inverses after swapping subscripts), if any.
  std::optional<Generator> inverse() const;

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.kind == b.kind && a.subs == b.subs;
  }
  friend bool operator!=(const Generator& a, const Generator& b) { return !(a == b); }
};

}  // namespace lincat
