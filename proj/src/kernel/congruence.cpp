#include "lincat/congruence.hpp"

#include <array>

#include "lincat/canon.hpp"
#include "lincat/net.hpp"
#include "lincat/structural.hpp"

namespace lincat {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    default: return "Unknown";
  }
}

namespace {

std::array<int, kGenKindCount> kind_counts(const CanonicalForm& c) {
  std::array<int, kGenKindCount> k{};
  for (const auto& cell : c.cells)
    if (!is_glue(cell.gen.kind) && cell.gen.kind != GenKind::Id) ++k[static_cast<std::size_t>(cell.gen.kind)];
  return k;
}

}  // namespace

CongruenceResult congruent(const CanonicalForm& a0, const CanonicalForm& b0, int budget) {
  if (a0.dom != b0.dom || a0.cod != b0.cod)
    return {Verdict::No, "type mismatch: " + a0.dom.str() + " -> " + a0.cod.str() + " vs " + b0.dom.str() +
                             " -> " + b0.cod.str()};
  CanonicalForm a = tidy(a0);
  CanonicalForm b = tidy(b0);
  if (a == b) return {Verdict::Yes, "equal canonical traces"};

  auto sa = structural_semantics(a);
  auto sb = structural_semantics(b);
  if (sa && sb) {
    if (sa->image == sb->image) return {Verdict::Yes, "equal structural leaf maps"};
    return {Verdict::No, "different structural leaf maps"};
  }

  Net na = build_net(a);
  Net nb = build_net(b);
  normalize_net(na);
  normalize_net(nb);
  NetCertificate ca = net_certificate(na);
  NetCertificate cb = net_certificate(nb);
  if (ca.text == cb.text) return {Verdict::Yes, "isomorphic wiring diagrams"};

  if (kind_counts(a) != kind_counts(b)) return {Verdict::No, "different generator multisets"};

  if (!ca.exact || !cb.exact) {
    ca = net_certificate(na, budget);
    cb = net_certificate(nb, budget);
    if (ca.text == cb.text) return {Verdict::Yes, "isomorphic wiring diagrams"};
    if (!ca.exact || !cb.exact) return {Verdict::Unknown, "search budget exhausted"};
  }
  return {Verdict::Unknown, "wiring diagrams differ"};
}

CongruenceResult congruent(const MorphTerm& a, const MorphTerm& b, int budget) {
  return congruent(canonicalize(a), canonicalize(b), budget);
}

}  // namespace lincat
