#include "nestfock/fock.hpp"

namespace nestfock {

std::vector<B2Key> b2_keys(int n) {
  if (n < 0) throw DomainError("negative degree");
  std::vector<B2Key> out;
  for (int i = 0; i <= n; ++i) {
    for (auto& nu : enumerate_partitions(n - i)) out.push_back(B2Key{i, std::move(nu)});
  }
  return out;
}

B2Vector creation(int n, const B2Vector& v) {
  if (n <= 0) throw DomainError("creation index must be positive");
  B2Vector out;
  for (const auto& [k, c] : v) out.add(B2Key{k.i, k.nu.with_part(n)}, c);
  return out;
}

B2Vector annihilation(int n, const B2Vector& v) {
  if (n <= 0) throw DomainError("annihilation index must be positive");
  B2Vector out;
  for (const auto& [k, c] : v) {
    int mult = k.nu.multiplicity(n);
    if (mult > 0) out.add(B2Key{k.i, k.nu.without_part(n)}, c * n * mult);
  }
  return out;
}

B2Vector translate(const B2Vector& v, int times) {
  B2Vector out;
  for (const auto& [k, c] : v) out.add(B2Key{k.i + times, k.nu}, c);
  return out;
}

B2Vector cotranslate(const B2Vector& v, int times) {
  B2Vector out;
  for (const auto& [k, c] : v) {
    if (k.i >= times) out.add(B2Key{k.i - times, k.nu}, c);
  }
  return out;
}

B2Vector loop_action(int j, int n, const B2Vector& v) {
  if (j < 0) throw DomainError("loop exponent must be nonnegative");
  if (n == 0) return {};
  return translate(n < 0 ? creation(-n, v) : annihilation(n, v), j);
}

namespace {

template <class K, class W>
Scalar diagonal_pairing(const FockVector<K>& v, const FockVector<K>& w, W weight) {
  Scalar s = 0;
  const auto& small = v.size() <= w.size() ? v : w;
  const auto& large = v.size() <= w.size() ? w : v;
  for (const auto& [k, c] : small) {
    auto it = large.terms().find(k);
    if (it != large.end()) s += c * it->second * Scalar(weight(k));
  }
  return s;
}

}  // namespace

Scalar pair_b2(const B2Vector& v, const B2Vector& w) {
  return diagonal_pairing(v, w, [](const B2Key& k) { return z_factor(k.nu); });
}

Scalar pair_b1(const B1Vector& v, const B1Vector& w) {
  return diagonal_pairing(v, w, [](const IncidencePair& p) { return h_pair(p); });
}

HilbPVector hilb_creation(int n, const HilbPVector& v) {
  if (n <= 0) throw DomainError("creation index must be positive");
  HilbPVector out;
  for (const auto& [k, c] : v) out.add(HilbPKey{k.nu.with_part(n)}, c);
  return out;
}

HilbPVector hilb_annihilation(int n, const HilbPVector& v) {
  if (n <= 0) throw DomainError("annihilation index must be positive");
  HilbPVector out;
  for (const auto& [k, c] : v) {
    int mult = k.nu.multiplicity(n);
    if (mult > 0) out.add(HilbPKey{k.nu.without_part(n)}, c * n * mult);
  }
  return out;
}

Scalar pair_hilb_p(const HilbPVector& v, const HilbPVector& w) {
  return diagonal_pairing(v, w, [](const HilbPKey& k) { return z_factor(k.nu); });
}

Scalar pair_hilb_fixed(const HilbFixedVector& v, const HilbFixedVector& w) {
  return diagonal_pairing(v, w, [](const HilbFixedKey& k) {
    Integer h = hook_product(k.lambda);
    return Integer(h * h);
  });
}

}  // namespace nestfock
