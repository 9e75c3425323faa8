#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "nestfock/partition.hpp"
#include "nestfock/rational.hpp"

namespace nestfock {

// (λ, μ) with D_μ = D_λ plus one addable corner.
//
// Ordering is by λ then μ in partition order; within a degree this equals
// the enumeration order (λ reverse-lex, then corner index ascending).
struct IncidencePair {
  Partition lambda;
  Partition mu;

  int degree() const { return lambda.size(); }
  // Value of the part of λ that μ increments; 0 when μ appends a part 1.
  int distinguished() const;

  friend bool operator==(const IncidencePair&, const IncidencePair&) = default;
  friend std::strong_ordering operator<=>(const IncidencePair& a, const IncidencePair& b) {
    if (auto c = a.lambda <=> b.lambda; c != 0) return c;
    return a.mu <=> b.mu;
  }
};

// Validates the covering relation; DomainError otherwise.
IncidencePair make_incidence_pair(Partition lambda, Partition mu);
// λ = μ^{(i)}: one part i of μ lowered to i-1 (dropped when i = 1).
Partition derive_lambda(const Partition& mu, int i);

std::vector<IncidencePair> enumerate_incidence_pairs(int n);

int k_index(const IncidencePair& p);

struct MarkedCells {
  int k = 0;
  int m = 0;
  // Indexed by j in 0..m; entry k is unused.
  std::vector<Cell> sq;
  std::vector<Cell> sqp;
};

MarkedCells marked_cells(const IncidencePair& p);

// h(λ)^2 Π_{j≠k} (1+h(□_j))/h(□'_j). ConsistencyError if not a positive integer.
Integer h_pair(const IncidencePair& p);
// h(λ) Π_{j>k} (1+h(□_j))/h(□'_j).
Integer h_plus(const IncidencePair& p);

struct EulerClass {
  int sign = 1;
  Integer magnitude;
  int t_exponent = 0;

  friend bool operator==(const EulerClass&, const EulerClass&) = default;
};

EulerClass euler_class(const IncidencePair& p);

// Sorted ascending. Each entry is the t-coefficient of one torus weight.
using WeightMultiset = std::vector<std::int64_t>;

WeightMultiset tangent_weights_hilbert(const Partition& lambda);

// Tangent weights at ξ_{λ,μ}, assembled case by case from the weights of
// Hom(I_λ, R/I_λ), the kernel of ψ, and the images of φ that cancel.
// Undefined gaps q_0 and p_m are treated as infinite.
WeightMultiset tangent_weights_incidence(const IncidencePair& p);

enum class TangentCase { case1a, case1b, case2, case3 };
TangentCase tangent_case(const IncidencePair& p);

// table[n][k] = b_{2k} of the incidence Hilbert scheme of n and n+1 points
// of the plane, for n = 0..max_n.
std::vector<std::vector<std::int64_t>> betti_series(int max_n);
std::vector<std::int64_t> betti_from_fixed_points(int n);

}  // namespace nestfock
