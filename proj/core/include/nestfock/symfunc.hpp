#pragma once

#include <compare>

#include "nestfock/fock.hpp"
#include "nestfock/partition.hpp"

namespace nestfock {

// Symmetric function in the power-sum basis: key ν means p_ν.
using SymFunc = FockVector<Partition>;
// Same container read in the monomial basis: key λ means m_λ.
using MonomialExpansion = FockVector<Partition>;

// p_ν ⊗ v^v in Λ ⊗ C[v].
struct PolyVKey {
  Partition nu;
  int v = 0;

  int degree() const { return nu.size() + v; }
  friend bool operator==(const PolyVKey&, const PolyVKey&) = default;
  friend auto operator<=>(const PolyVKey&, const PolyVKey&) = default;
};

using PolyV = FockVector<PolyVKey>;

// p_ν in the monomial basis, by counting assignments of parts to variables.
MonomialExpansion p_in_m(const Partition& nu);
// m_λ in the power-sum basis (inverse of the p_in_m table of its degree).
SymFunc m_in_p(const Partition& lambda);

// χ^λ_ν by the Murnaghan–Nakayama rule.
Integer character(const Partition& lambda, const Partition& nu);
// s_λ = Σ_ν χ^λ_ν / z_ν p_ν.
SymFunc schur_in_p(const Partition& lambda);

// ⟨p_λ, p_μ⟩ = z_λ δ.
Scalar hall_pairing(const SymFunc& a, const SymFunc& b);
// Product in Λ.
SymFunc multiply(const SymFunc& a, const SymFunc& b);

SymFunc phi(const HilbPVector& v);
HilbPVector phi_inverse(const SymFunc& f);
PolyV phi_tilde(const B2Vector& v);
B2Vector phi_tilde_inverse(const PolyV& f);

// Φ̃(Φ̃^{-1}(x) ⋆̃ Φ̃^{-1}(y)). DomainError unless x and y are homogeneous of
// the same total degree.
PolyV induced_product(const PolyV& x, const PolyV& y);

}  // namespace nestfock
