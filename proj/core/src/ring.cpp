#include "nestfock/ring.hpp"

#include <optional>
#include <set>

#include "nestfock/basis_change.hpp"
#include "nestfock/errors.hpp"

namespace nestfock {

namespace {

Scalar sign_pow(int e) { return Scalar(e % 2 == 0 ? 1 : -1); }

}  // namespace

B1Vector star_b1(const B1Vector& v, const B1Vector& w, int n) {
  for (const auto* x : {&v, &w}) {
    for (const auto& [k, c] : *x) {
      if (k.degree() != n) throw DomainError("star_b1: key of degree " + std::to_string(k.degree()) + " in degree " + std::to_string(n));
    }
  }
  B1Vector out;
  const Scalar s = sign_pow(n + 1);
  for (const auto& [k, c] : v) {
    Scalar d = w.coeff(k);
    if (d != 0) out.add(k, c * d * s * Scalar(h_pair(k)));
  }
  return out;
}

B2Vector star_tilde(const B2Vector& v, const B2Vector& w) {
  auto deg = [](const B2Key& k) { return k.degree(); };
  if (v.empty() || w.empty()) return {};
  int dv = homogeneous_degree(v, deg);
  int dw = homogeneous_degree(w, deg);
  if (dv < 0 || dw < 0 || dv != dw) throw DomainError("star_tilde needs homogeneous factors of one degree");
  return b1_to_b2(star_b1(b2_to_b1(v), b2_to_b1(w), dv));
}

HilbFixedVector star_hilb(const HilbFixedVector& v, const HilbFixedVector& w, int n) {
  for (const auto* x : {&v, &w}) {
    for (const auto& [k, c] : *x) {
      if (k.lambda.size() != n) throw DomainError("star_hilb: degree mismatch");
    }
  }
  HilbFixedVector out;
  const Scalar s = sign_pow(n);
  for (const auto& [k, c] : v) {
    Scalar d = w.coeff(k);
    if (d == 0) continue;
    Integer h = hook_product(k.lambda);
    out.add(k, c * d * s * Scalar(h * h));
  }
  return out;
}

OrdinaryClass make_ordinary(int n, B2Vector vec) {
  for (const auto& [k, c] : vec) {
    if (k.degree() != n) throw DomainError("ordinary class key of wrong degree");
  }
  return OrdinaryClass{n, std::move(vec)};
}

int ordinary_degree(int n, const B2Key& key) { return 2 * (n - key.nu.length()); }

OrdinaryClass ordinary_cup(const OrdinaryClass& a, const OrdinaryClass& b) {
  if (a.n != b.n) throw DomainError("ordinary_cup: classes live on different spaces");
  const int n = a.n;
  const Scalar sign = sign_pow(n + 1);
  B2Vector out;
  for (const auto& [k1, c1] : a.vec) {
    for (const auto& [k2, c2] : b.vec) {
      const int l1 = k1.nu.length();
      const int l2 = k2.nu.length();
      for (const auto& [k, c] : star_tilde(B2Vector(k1), B2Vector(k2))) {
        // Power of t left over after stripping (-t)^{-ℓ-1} from each factor.
        const int excess = n - l1 - l2 + k.nu.length();
        if (excess < 0) throw ConsistencyError("ordinary_cup: negative power of t");
        if (excess == 0) out.add(k, c * c1 * c2 * sign);
      }
    }
  }
  return OrdinaryClass{n, std::move(out)};
}

OrdinaryUnit ordinary_unit(int n) {
  if (n < 0) throw DomainError("negative degree");
  const B2Key ones{0, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))};
  const OrdinaryClass raw{n, B2Vector(ones)};
  std::optional<Scalar> u;
  for (const auto& k : b2_keys(n)) {
    OrdinaryClass r = ordinary_cup(raw, OrdinaryClass{n, B2Vector(k)});
    Scalar c = r.vec.coeff(k);
    if (r.vec.size() != 1 || c == 0 || (u && *u != c)) {
      throw ConsistencyError("ordinary_unit: no scalar multiple of the top power of ã_{-1} acts as the unit");
    }
    u = c;
  }
  OrdinaryClass unit = raw;
  unit.vec *= 1 / *u;
  return OrdinaryUnit{unit, *u};
}

B1Vector pullback_f(const HilbFixedVector& v) {
  B1Vector out;
  for (const auto& [k, c] : v) {
    Integer h = hook_product(k.lambda);
    for (const auto& corner : canonical_generators(k.lambda)) {
      IncidencePair p{k.lambda, add_cell(k.lambda, corner.cell)};
      out.add(p, -c * Scalar(h * h) / Scalar(h_pair(p)));
    }
  }
  return out;
}

B1Vector pullback_g(const HilbFixedVector& v) {
  B1Vector out;
  for (const auto& [k, c] : v) {
    if (k.lambda.empty()) continue;
    Integer h = hook_product(k.lambda);
    std::set<int> values(k.lambda.parts().begin(), k.lambda.parts().end());
    for (int i : values) {
      IncidencePair p{derive_lambda(k.lambda, i), k.lambda};
      out.add(p, c * Scalar(h * h) / Scalar(h_pair(p)));
    }
  }
  return out;
}

}  // namespace nestfock
