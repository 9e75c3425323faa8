#include "nestfock/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>

#include "memo.hpp"
#include "nestfock/errors.hpp"
#include "nestfock/matrix.hpp"
#include "nestfock/ring.hpp"

namespace nestfock {

namespace {

// Number of ways to distribute the parts of ν over variables so that
// variable v receives total exponent λ_v.
std::int64_t count_assignments(const std::vector<int>& nu, std::size_t j, std::vector<int>& remaining,
                               std::map<std::pair<std::size_t, std::vector<int>>, std::int64_t>& memo) {
  if (j == nu.size()) {
    return std::all_of(remaining.begin(), remaining.end(), [](int r) { return r == 0; }) ? 1 : 0;
  }
  auto key = std::make_pair(j, remaining);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::int64_t total = 0;
  for (auto& r : remaining) {
    if (r >= nu[j]) {
      r -= nu[j];
      total += count_assignments(nu, j + 1, remaining, memo);
      r += nu[j];
    }
  }
  memo.emplace(std::move(key), total);
  return total;
}

using MatrixPtr = std::shared_ptr<const RatMatrix>;

detail::WriteOnceMap<int, MatrixPtr>& m_in_p_memo() {
  static detail::WriteOnceMap<int, MatrixPtr> memo;
  return memo;
}

}  // namespace

MonomialExpansion p_in_m(const Partition& nu) {
  MonomialExpansion out;
  for (const auto& lambda : enumerate_partitions(nu.size())) {
    std::vector<int> remaining = lambda.parts();
    std::map<std::pair<std::size_t, std::vector<int>>, std::int64_t> memo;
    std::int64_t c = count_assignments(nu.parts(), 0, remaining, memo);
    out.add(lambda, Scalar(static_cast<long>(c)));
  }
  return out;
}

SymFunc m_in_p(const Partition& lambda) {
  const int n = lambda.size();
  auto parts = enumerate_partitions(n);
  MatrixPtr inv = m_in_p_memo().get_or_compute(n, [&] {
    RatMatrix p(parts.size(), parts.size());
    for (std::size_t r = 0; r < parts.size(); ++r) {
      MonomialExpansion e = p_in_m(parts[r]);
      for (std::size_t c = 0; c < parts.size(); ++c) p(r, c) = e.coeff(parts[c]);
    }
    return std::make_shared<const RatMatrix>(inverse(p));
  });
  std::size_t row = static_cast<std::size_t>(std::find(parts.begin(), parts.end(), lambda) - parts.begin());
  SymFunc out;
  for (std::size_t c = 0; c < parts.size(); ++c) out.add(parts[c], (*inv)(row, c));
  return out;
}

namespace {

Integer mn_character(const Partition& lambda, const std::vector<int>& nu, std::size_t from,
                     std::map<std::pair<Partition, std::size_t>, Integer>& memo) {
  if (from == nu.size()) return lambda.empty() ? Integer(1) : Integer(0);
  auto key = std::make_pair(lambda, from);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = nu[from];
  const int l = lambda.length();
  // First-column hook lengths (beta numbers).
  std::vector<int> beta(static_cast<std::size_t>(l));
  for (int j = 0; j < l; ++j) beta[static_cast<std::size_t>(j)] = lambda.part(j) + (l - 1 - j);
  std::set<int> bset(beta.begin(), beta.end());
  Integer total = 0;
  for (int b : beta) {
    int nb = b - r;
    if (nb < 0 || bset.count(nb)) continue;
    // Leg length of the removed border strip.
    int height = 0;
    for (int x : beta) {
      if (x > nb && x < b) ++height;
    }
    std::vector<int> nbeta;
    for (int x : beta) nbeta.push_back(x == b ? nb : x);
    std::sort(nbeta.begin(), nbeta.end(), std::greater<>());
    std::vector<int> parts;
    for (int j = 0; j < l; ++j) parts.push_back(nbeta[static_cast<std::size_t>(j)] - (l - 1 - j));
    Integer sub = mn_character(Partition::from_multiset(parts), nu, from + 1, memo);
    if (height % 2) {
      total -= sub;
    } else {
      total += sub;
    }
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer character(const Partition& lambda, const Partition& nu) {
  if (lambda.size() != nu.size()) throw DomainError("character needs partitions of one size");
  std::map<std::pair<Partition, std::size_t>, Integer> memo;
  return mn_character(lambda, nu.parts(), 0, memo);
}

SymFunc schur_in_p(const Partition& lambda) {
  SymFunc out;
  for (const auto& nu : enumerate_partitions(lambda.size())) {
    out.add(nu, Scalar(character(lambda, nu)) / Scalar(z_factor(nu)));
  }
  return out;
}

Scalar hall_pairing(const SymFunc& a, const SymFunc& b) {
  Scalar s = 0;
  for (const auto& [k, c] : a) {
    Scalar d = b.coeff(k);
    if (d != 0) s += c * d * Scalar(z_factor(k));
  }
  return s;
}

SymFunc multiply(const SymFunc& a, const SymFunc& b) {
  SymFunc out;
  for (const auto& [k1, c1] : a) {
    for (const auto& [k2, c2] : b) {
      auto v = k1.parts();
      v.insert(v.end(), k2.parts().begin(), k2.parts().end());
      out.add(Partition::from_multiset(std::move(v)), c1 * c2);
    }
  }
  return out;
}

SymFunc phi(const HilbPVector& v) {
  SymFunc out;
  for (const auto& [k, c] : v) out.add(k.nu, c);
  return out;
}

HilbPVector phi_inverse(const SymFunc& f) {
  HilbPVector out;
  for (const auto& [k, c] : f) out.add(HilbPKey{k}, c);
  return out;
}

PolyV phi_tilde(const B2Vector& v) {
  PolyV out;
  for (const auto& [k, c] : v) out.add(PolyVKey{k.nu, k.i}, c);
  return out;
}

B2Vector phi_tilde_inverse(const PolyV& f) {
  B2Vector out;
  for (const auto& [k, c] : f) {
    if (k.v < 0) throw DomainError("negative power of v");
    out.add(B2Key{k.v, k.nu}, c);
  }
  return out;
}

PolyV induced_product(const PolyV& x, const PolyV& y) {
  auto deg = [](const PolyVKey& k) { return k.degree(); };
  if (x.empty() || y.empty()) return {};
  int dx = homogeneous_degree(x, deg);
  int dy = homogeneous_degree(y, deg);
  if (dx < 0 || dy < 0 || dx != dy) {
    throw DomainError(
        "induced_product: the product is graded by total degree |ν| + j; both factors must be homogeneous of the "
        "same total degree");
  }
  return phi_tilde(star_tilde(phi_tilde_inverse(x), phi_tilde_inverse(y)));
}

}  // namespace nestfock
