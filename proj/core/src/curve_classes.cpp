#include "nestfock/curve_classes.hpp"

#include <set>

namespace nestfock {

Partition add_part(const Partition& lambda, int part, int m) {
  if (m <= 0) throw DomainError("add_part needs a positive increment");
  if (part < 0) throw DomainError("negative part");
  Partition base = part == 0 ? lambda : lambda.without_part(part);
  return base.with_part(part + m);
}

namespace {

// Distinct values of {0} ∪ parts(λ), ascending.
std::set<int> part_values_with_zero(const Partition& lambda) {
  std::set<int> vals(lambda.parts().begin(), lambda.parts().end());
  vals.insert(0);
  return vals;
}

}  // namespace

HilbLVector nakajima_L(int m, const HilbLVector& v) {
  if (m <= 0) throw DomainError("creation index must be positive");
  HilbLVector out;
  for (const auto& [key, c] : v) {
    for (int value : part_values_with_zero(key.lambda)) {
      Partition next = add_part(key.lambda, value, m);
      out.add(HilbLKey{next}, c * next.multiplicity(value + m));
    }
  }
  return out;
}

B3Key translate_b3(const B3Key& key) {
  const auto& p = key.pair;
  int i = p.distinguished();
  return B3Key{IncidencePair{p.mu, add_part(p.mu, i + 1, 1)}};
}

B3Vector translate_b3(const B3Vector& v) {
  B3Vector out;
  for (const auto& [k, c] : v) out.add(translate_b3(k), c);
  return out;
}

B3Vector create_b3(int m, const B3Vector& v, CreateRule rule) {
  if (m <= 0) throw DomainError("creation index must be positive");
  B3Vector out;
  for (const auto& [key, c] : v) {
    const Partition& lambda = key.pair.lambda;
    const Partition& mu = key.pair.mu;
    const int i = key.pair.distinguished();
    auto emit = [&](Partition l2, Partition mu2, long coeff) {
      if (coeff != 0) out.add(B3Key{IncidencePair{std::move(l2), std::move(mu2)}}, c * coeff);
    };
    for (int value : part_values_with_zero(lambda)) {
      if (value == i) continue;
      Partition l2 = add_part(lambda, value, m);
      long coeff = l2.multiplicity(value + m);
      if (rule == CreateRule::corrected && value + m == i) --coeff;
      emit(l2, add_part(mu, value, m), coeff);
    }
    // A free copy of i survives in μ: always for i = 0, else iff m_i(λ) >= 2.
    Partition li = add_part(lambda, i, m);
    if (i == 0 || lambda.multiplicity(i) >= 2) {
      emit(li, add_part(mu, i, m), li.multiplicity(i + m));
    }
    // The distinguished cluster itself absorbs m.
    emit(li, add_part(mu, i + 1, m), 1);
  }
  return out;
}

}  // namespace nestfock
