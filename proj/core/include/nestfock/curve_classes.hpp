#pragma once

#include <compare>

#include "nestfock/fock.hpp"
#include "nestfock/incidence.hpp"

namespace nestfock {

// [L̃^{λ,μ} C].
struct B3Key {
  IncidencePair pair;
  friend bool operator==(const B3Key&, const B3Key&) = default;
  friend auto operator<=>(const B3Key&, const B3Key&) = default;
};

using B3Vector = FockVector<B3Key>;

// λ(part, m): one copy of `part` replaced by part+m (part 0 appends m).
Partition add_part(const Partition& lambda, int part, int m);

HilbLVector nakajima_L(int m, const HilbLVector& v);

B3Key translate_b3(const B3Key& key);
B3Vector translate_b3(const B3Vector& v);

// How the coefficient of a new free cluster of value i is counted in
// create_b3. `corrected` subtracts the distinguished cluster; `literal`
// does not and is kept only to demonstrate that it breaks [t̃, ã] = 0.
enum class CreateRule { corrected, literal };

B3Vector create_b3(int m, const B3Vector& v, CreateRule rule = CreateRule::corrected);

}  // namespace nestfock
