#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nestfock/curve_classes.hpp"
#include "nestfock/fock.hpp"
#include "nestfock/incidence.hpp"
#include "nestfock/matrix.hpp"

namespace nestfock {

// b1: fixed-point classes [λ,μ]; b2: (t̃)^i ã_{-ν}|0⟩; b3: [L̃^{λ,μ} C].
enum class Basis { b1, b2, b3 };

std::string_view basis_name(Basis b);
std::optional<Basis> parse_basis(std::string_view name);

using BasisKey = std::variant<IncidencePair, B2Key>;

// b1 and b3 use enumerate_incidence_pairs(n); b2 uses b2_keys(n).
std::vector<BasisKey> basis_keys(Basis b, int n);

// Row r holds the expansion of the r-th source key in the target basis.
struct TransitionMatrix {
  int degree = 0;
  Basis source = Basis::b1;
  Basis target = Basis::b1;
  RatMatrix entries;
  // Partial order bounding the support, empty when none is claimed.
  std::string triangularity;

  friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;
};

// Which common part of λ and μ the inductive step of b3_in_b2 peels off.
enum class CommonPartRule { largest, smallest };

// Memoized; safe to call from several threads.
B2Vector b3_in_b2(const IncidencePair& p, CommonPartRule rule = CommonPartRule::largest);

// G[p][q] = ⟨b3_in_b2(p), b3_in_b2(q)⟩ in enumeration order.
RatMatrix gram_b3(int n);

// Triangular with M[p][p] = 1/h_+(p); support in the product dominance
// order. Off-diagonal entries come from G = M D M^T, D = diag h(λ,μ),
// solved along the lexicographically increasing order of (λ, μ), which
// refines dominance. ConsistencyError if G is not reproduced.
TransitionMatrix b3_in_b1(int n);

TransitionMatrix b2_in_b1(int n);
TransitionMatrix b1_in_b2(int n);

// Any pair of bases; same basis gives the identity.
TransitionMatrix transition(Basis from, Basis to, int n);

// Vector conversions, applied degree by degree.
B1Vector b2_to_b1(const B2Vector& v);
B2Vector b1_to_b2(const B1Vector& v);
B1Vector b3_to_b1(const B3Vector& v);
B2Vector b3_to_b2(const B3Vector& v);
B3Vector b1_to_b3(const B1Vector& v);

// Operators in the fixed-point basis, as matrices acting on row vectors over
// enumerate_incidence_pairs(d). Creation and translation are transported
// from create_b3 and translate_b3; annihilation and cotranslation are their
// adjoints for pair_b1.
RatMatrix b1_creation(int m, int d);       // degree d -> d+m
RatMatrix b1_annihilation(int m, int d);   // degree d -> d-m
RatMatrix b1_translation(int d);           // degree d -> d+1
RatMatrix b1_cotranslation(int d);         // degree d -> d-1
// ã_p: creation for p < 0, annihilation for p > 0, zero for p = 0.
RatMatrix b1_heisenberg(int p, int d);

// Seeds the in-memory memo with a matrix obtained elsewhere (for example
// from a MatrixCache), so later conversions reuse it.
void prime_transition(const TransitionMatrix& m);

// Forgets all memoized results (b3_in_b2 and per-degree matrices).
void clear_basis_memo();

// Hilbert side.

// [L^λ C] in the a_{-ν}|0⟩ basis, from the triangular nakajima_L recursion.
HilbPVector hilb_L_in_p(const Partition& lambda);

// Rows: [λ] for λ ⊢ n in enumeration order; columns: a_{-ν}|0⟩ likewise.
RatMatrix hilb_fixed_in_p(int n);

HilbPVector hilb_fixed_to_p(const HilbFixedVector& v);
HilbFixedVector hilb_p_to_fixed(const HilbPVector& v);

}  // namespace nestfock
