#include "lincat/generator.hpp"

#include <array>

namespace lincat {

namespace {

struct KindInfo {
  GenKind kind;
  const char* name;
  int arity;
};

constexpr std::array<KindInfo, kGenKindCount> kKinds = {{
    {GenKind::Id, "id", 1},
    {GenKind::Alpha, "alpha", 3},
    {GenKind::AlphaInv, "alpha~", 3},
    {GenKind::Lam, "lam", 1},
    {GenKind::LamInv, "lam~", 1},
    {GenKind::Rho, "rho", 1},
    {GenKind::RhoInv, "rho~", 1},
    {GenKind::Sig, "sig", 2},
    {GenKind::SigInv, "sig~", 2},
    {GenKind::BAlpha, "balpha", 3},
    {GenKind::BAlphaInv, "balpha~", 3},
    {GenKind::BLam, "blam", 1},
    {GenKind::BLamInv, "blam~", 1},
    {GenKind::BRho, "brho", 1},
    {GenKind::BRhoInv, "brho~", 1},
    {GenKind::BSig, "bsig", 2},
    {GenKind::BSigInv, "bsig~", 2},
    {GenKind::Dist, "dist", 3},
    {GenKind::DistP, "dist'", 3},
    {GenKind::Tau, "tau", 1},
    {GenKind::Gamma, "gamma", 1},
    {GenKind::Phi, "phi", 2},
    {GenKind::Phi0, "phi0", 0},
    {GenKind::Delta, "delta", 1},
    {GenKind::Eps, "eps", 1},
    {GenKind::Dup, "dup", 1},
    {GenKind::Drop, "drop", 1},
}};

const KindInfo& info(GenKind k) { return kKinds[static_cast<int>(k)]; }

Object T(const Object& a, const Object& b) { return Object::tensor(a, b); }
Object P(const Object& a, const Object& b) { return Object::par(a, b); }

}  // namespace

const char* gen_name(GenKind k) { return info(k).name; }
int gen_arity(GenKind k) { return info(k).arity; }

std::optional<GenKind> gen_from_name(const std::string& base, bool inverse) {
  std::string full = inverse ? base + "~" : base;
  for (const auto& ki : kKinds)
    if (full == ki.name) return ki.kind;
  return std::nullopt;
}

bool is_structural(GenKind k) {
  switch (k) {
    case GenKind::Alpha: case GenKind::AlphaInv: case GenKind::Lam: case GenKind::LamInv:
    case GenKind::Rho: case GenKind::RhoInv: case GenKind::Sig: case GenKind::SigInv:
    case GenKind::BAlpha: case GenKind::BAlphaInv: case GenKind::BLam: case GenKind::BLamInv:
    case GenKind::BRho: case GenKind::BRhoInv: case GenKind::BSig: case GenKind::BSigInv:
      return true;
    default:
      return false;
  }
}

bool is_glue(GenKind k) {
  return is_structural(k) || k == GenKind::Dist || k == GenKind::DistP;
}

bool is_inverse_kind(GenKind k) {
  switch (k) {
    case GenKind::AlphaInv: case GenKind::LamInv: case GenKind::RhoInv: case GenKind::SigInv:
    case GenKind::BAlphaInv: case GenKind::BLamInv: case GenKind::BRhoInv: case GenKind::BSigInv:
      return true;
    default:
      return false;
  }
}

std::optional<GenKind> inverse_kind(GenKind k) {
  switch (k) {
    case GenKind::Alpha: return GenKind::AlphaInv;
    case GenKind::AlphaInv: return GenKind::Alpha;
    case GenKind::Lam: return GenKind::LamInv;
    case GenKind::LamInv: return GenKind::Lam;
    case GenKind::Rho: return GenKind::RhoInv;
    case GenKind::RhoInv: return GenKind::Rho;
    case GenKind::Sig: return GenKind::SigInv;
    case GenKind::SigInv: return GenKind::Sig;
    case GenKind::BAlpha: return GenKind::BAlphaInv;
    case GenKind::BAlphaInv: return GenKind::BAlpha;
    case GenKind::BLam: return GenKind::BLamInv;
    case GenKind::BLamInv: return GenKind::BLam;
    case GenKind::BRho: return GenKind::BRhoInv;
    case GenKind::BRhoInv: return GenKind::BRho;
    case GenKind::BSig: return GenKind::BSigInv;
    case GenKind::BSigInv: return GenKind::BSig;
    default: return std::nullopt;
  }
}

Generator::Generator(GenKind k, std::vector<Object> s) : kind(k), subs(std::move(s)) {
  if (static_cast<int>(subs.size()) != gen_arity(k))
    throw TypeError(std::string(gen_name(k)) + " expects " + std::to_string(gen_arity(k)) +
                    " subscript(s), got " + std::to_string(subs.size()));
  for (const auto& o : subs)
    if (!o.valid()) throw TypeError(std::string(gen_name(k)) + ": missing subscript object");
}

Object Generator::dom() const {
  const auto& s = subs;
  switch (kind) {
    case GenKind::Id: return s[0];
    case GenKind::Alpha: return T(T(s[0], s[1]), s[2]);
    case GenKind::AlphaInv: return T(s[0], T(s[1], s[2]));
    case GenKind::Lam: return T(Object::one(), s[0]);
    case GenKind::LamInv: return s[0];
    case GenKind::Rho: return T(s[0], Object::one());
    case GenKind::RhoInv: return s[0];
    case GenKind::Sig: return T(s[0], s[1]);
    case GenKind::SigInv: return T(s[1], s[0]);
    case GenKind::BAlpha: return P(P(s[0], s[1]), s[2]);
    case GenKind::BAlphaInv: return P(s[0], P(s[1], s[2]));
    case GenKind::BLam: return P(Object::bot(), s[0]);
    case GenKind::BLamInv: return s[0];
    case GenKind::BRho: return P(s[0], Object::bot());
    case GenKind::BRhoInv: return s[0];
    case GenKind::BSig: return P(s[0], s[1]);
    case GenKind::BSigInv: return P(s[1], s[0]);
    case GenKind::Dist: return T(s[0], P(s[1], s[2]));
    case GenKind::DistP: return T(P(s[0], s[1]), s[2]);
    case GenKind::Tau: return Object::one();
    case GenKind::Gamma: return T(Object::dual(s[0]), s[0]);
    case GenKind::Phi: return T(Object::bang(s[0]), Object::bang(s[1]));
    case GenKind::Phi0: return Object::one();
    case GenKind::Delta: return Object::bang(s[0]);
    case GenKind::Eps: return Object::bang(s[0]);
    case GenKind::Dup: return Object::bang(s[0]);
    case GenKind::Drop: return Object::bang(s[0]);
  }
  return {};
}

Object Generator::cod() const {
  const auto& s = subs;
  switch (kind) {
    case GenKind::Id: return s[0];
    case GenKind::Alpha: return T(s[0], T(s[1], s[2]));
    case GenKind::AlphaInv: return T(T(s[0], s[1]), s[2]);
    case GenKind::Lam: return s[0];
    case GenKind::LamInv: return T(Object::one(), s[0]);
    case GenKind::Rho: return s[0];
    case GenKind::RhoInv: return T(s[0], Object::one());
    case GenKind::Sig: return T(s[1], s[0]);
    case GenKind::SigInv: return T(s[0], s[1]);
    case GenKind::BAlpha: return P(s[0], P(s[1], s[2]));
    case GenKind::BAlphaInv: return P(P(s[0], s[1]), s[2]);
    case GenKind::BLam: return s[0];
    case GenKind::BLamInv: return P(Object::bot(), s[0]);
    case GenKind::BRho: return s[0];
    case GenKind::BRhoInv: return P(s[0], Object::bot());
    case GenKind::BSig: return P(s[1], s[0]);
    case GenKind::BSigInv: return P(s[0], s[1]);
    case GenKind::Dist: return P(T(s[0], s[1]), s[2]);
    case GenKind::DistP: return P(s[0], T(s[1], s[2]));
    case GenKind::Tau: return P(s[0], Object::dual(s[0]));
    case GenKind::Gamma: return Object::bot();
    case GenKind::Phi: return Object::bang(T(s[0], s[1]));
    case GenKind::Phi0: return Object::bang(Object::one());
    case GenKind::Delta: return Object::bang(Object::bang(s[0]));
    case GenKind::Eps: return s[0];
    case GenKind::Dup: return T(Object::bang(s[0]), Object::bang(s[0]));
    case GenKind::Drop: return Object::one();
  }
  return {};
}

std::string Generator::str() const {
  std::string out = gen_name(kind);
  if (subs.empty()) return out;
  out += "{";
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (i) out += ",";
    out += subs[i].str();
  }
  out += "}";
  return out;
}

std::optional<Generator> Generator::inverse() const {
  if (kind == GenKind::Sig) return Generator(GenKind::Sig, {subs[1], subs[0]});
  if (kind == GenKind::BSig) return Generator(GenKind::BSig, {subs[1], subs[0]});
  auto ik = inverse_kind(kind);
  if (!ik) return std::nullopt;
  return Generator(*ik, subs);
}

}  // namespace lincat
