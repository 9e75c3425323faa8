#pragma once

#include "nestfock/fock.hpp"
#include "nestfock/incidence.hpp"

namespace nestfock {

// Componentwise in the fixed-point basis: eigenvalue (-1)^{n+1} h(λ,μ).
// DomainError if a key is not of degree n.
B1Vector star_b1(const B1Vector& v, const B1Vector& w, int n);

// ⋆̃ on homogeneous B̃₂ vectors of equal degree, through the B̃₁ basis.
B2Vector star_tilde(const B2Vector& v, const B2Vector& w);

// Componentwise on fixed-point classes: eigenvalue (-1)^n h(λ)^2.
HilbFixedVector star_hilb(const HilbFixedVector& v, const HilbFixedVector& w, int n);

// Class in the ordinary cohomology of the incidence scheme of n and n+1
// points. The key (i, ν) has ordinary degree 2(n - ℓ(ν)).
struct OrdinaryClass {
  int n = 0;
  B2Vector vec;

  friend bool operator==(const OrdinaryClass&, const OrdinaryClass&) = default;
};

// DomainError unless every key has degree n.
OrdinaryClass make_ordinary(int n, B2Vector vec);
// Real degree 2(n - ℓ(ν)) of a key.
int ordinary_degree(int n, const B2Key& key);

// Cup product. For keys of lengths ℓ1, ℓ2 the ⋆̃ product is truncated to
// keys with ℓ(ρ) = ℓ1 + ℓ2 - n and multiplied by (-1)^{n+1}. Terms with
// ℓ(ρ) < ℓ1 + ℓ2 - n signal an inconsistency and throw.
OrdinaryClass ordinary_cup(const OrdinaryClass& a, const OrdinaryClass& b);

struct OrdinaryUnit {
  OrdinaryClass unit;
  // unit = ord(ã_{-(1^n)}|0⟩) / u_n.
  Scalar u_n;
};

// Solves ord(ã_{-(1^n)}|0⟩) ∪ x = u_n x over the whole basis.
// ConsistencyError if no such scalar exists.
OrdinaryUnit ordinary_unit(int n);

// t ∪ f^*[λ] = -Σ_μ h(λ)^2/h(λ,μ) [λ,μ], λ ⊢ n.
B1Vector pullback_f(const HilbFixedVector& v);
// g^*[μ] = Σ_λ h(μ)^2/h(λ,μ) [λ,μ], μ ⊢ n+1.
B1Vector pullback_g(const HilbFixedVector& v);

}  // namespace nestfock
