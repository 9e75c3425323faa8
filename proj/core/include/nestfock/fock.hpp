#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "nestfock/errors.hpp"
#include "nestfock/incidence.hpp"
#include "nestfock/partition.hpp"
#include "nestfock/rational.hpp"

namespace nestfock {

// Finite linear combination of keys with nonzero rational coefficients.
template <class K>
class FockVector {
 public:
  using key_type = K;
  using map_type = std::map<K, Scalar>;
  using const_iterator = typename map_type::const_iterator;

  FockVector() = default;
  FockVector(const K& key, Scalar coeff = Scalar(1)) { add(key, std::move(coeff)); }

  void add(const K& key, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const FockVector& other, const Scalar& scale = Scalar(1)) {
    if (scale == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  Scalar coeff(const K& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  FockVector& operator+=(const FockVector& o) {
    add(o);
    return *this;
  }
  FockVector& operator-=(const FockVector& o) {
    add(o, Scalar(-1));
    return *this;
  }
  FockVector& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= s;
    }
    return *this;
  }

  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Scalar& s, FockVector a) { return a *= s; }
  friend FockVector operator-(FockVector a) { return a *= Scalar(-1); }
  friend bool operator==(const FockVector&, const FockVector&) = default;

  // Applies a key-to-vector map linearly.
  template <class Out, class F>
  FockVector<Out> apply(F&& f) const {
    FockVector<Out> out;
    for (const auto& [k, c] : terms_) out.add(f(k), c);
    return out;
  }

 private:
  map_type terms_;
};

// Degree of every key if they all agree, -1 for mixed, 0 for the zero vector.
template <class K, class DegreeFn>
int homogeneous_degree(const FockVector<K>& v, DegreeFn deg) {
  int d = -2;
  for (const auto& [k, c] : v) {
    int e = deg(k);
    if (d == -2) {
      d = e;
    } else if (d != e) {
      return -1;
    }
  }
  return d == -2 ? 0 : d;
}

// (t̃)^i ã_{-ν}|0⟩.
struct B2Key {
  int i = 0;
  Partition nu;

  int degree() const { return i + nu.size(); }
  friend bool operator==(const B2Key&, const B2Key&) = default;
  friend auto operator<=>(const B2Key&, const B2Key&) = default;
};

using B2Vector = FockVector<B2Key>;
using B1Vector = FockVector<IncidencePair>;

inline B2Vector vacuum() { return B2Vector(B2Key{0, Partition{}}); }

// Keys of degree n: i = 0..n, then ν ⊢ n-i in reverse-lex order.
std::vector<B2Key> b2_keys(int n);

B2Vector creation(int n, const B2Vector& v);
B2Vector annihilation(int n, const B2Vector& v);
B2Vector translate(const B2Vector& v, int times = 1);
B2Vector cotranslate(const B2Vector& v, int times = 1);
// (t̃)^j ã_n; negative n creates, positive n annihilates, n = 0 gives 0.
B2Vector loop_action(int j, int n, const B2Vector& v);

Scalar pair_b2(const B2Vector& v, const B2Vector& w);
Scalar pair_b1(const B1Vector& v, const B1Vector& w);

// Hilbert scheme of points of the plane. Three bases of the same space,
// kept apart by key type: a_{-ν}|0⟩, the fixed-point classes [λ], and the
// curve classes [L^λ C].
struct HilbPKey {
  Partition nu;
  friend bool operator==(const HilbPKey&, const HilbPKey&) = default;
  friend auto operator<=>(const HilbPKey&, const HilbPKey&) = default;
};
struct HilbFixedKey {
  Partition lambda;
  friend bool operator==(const HilbFixedKey&, const HilbFixedKey&) = default;
  friend auto operator<=>(const HilbFixedKey&, const HilbFixedKey&) = default;
};
struct HilbLKey {
  Partition lambda;
  friend bool operator==(const HilbLKey&, const HilbLKey&) = default;
  friend auto operator<=>(const HilbLKey&, const HilbLKey&) = default;
};

using HilbPVector = FockVector<HilbPKey>;
using HilbFixedVector = FockVector<HilbFixedKey>;
using HilbLVector = FockVector<HilbLKey>;

HilbPVector hilb_creation(int n, const HilbPVector& v);
HilbPVector hilb_annihilation(int n, const HilbPVector& v);

// Weights z_λ.
Scalar pair_hilb_p(const HilbPVector& v, const HilbPVector& w);
// Weights h(λ)^2.
Scalar pair_hilb_fixed(const HilbFixedVector& v, const HilbFixedVector& w);

}  // namespace nestfock
