#include <doctest.h>

#include <numeric>

#include "nestfock/errors.hpp"
#include "nestfock/fock.hpp"
#include "nestfock/incidence.hpp"
#include "oracles.hpp"

using namespace nestfock;
using oracle::P;

namespace {

IncidencePair pr(std::initializer_list<int> l, std::initializer_list<int> m) {
  return make_incidence_pair(Partition(l), Partition(m));
}

}  // namespace

TEST_CASE("enumeration of pairs") {
  CHECK(enumerate_incidence_pairs(0) == std::vector<IncidencePair>{pr({}, {1})});
  CHECK(enumerate_incidence_pairs(1) == std::vector<IncidencePair>{pr({1}, {2}), pr({1}, {1, 1})});
  CHECK(enumerate_incidence_pairs(2) ==
        std::vector<IncidencePair>{pr({2}, {3}), pr({2}, {2, 1}), pr({1, 1}, {2, 1}), pr({1, 1}, {1, 1, 1})});

  for (int n = 0; n <= 9; ++n) {
    auto pairs = enumerate_incidence_pairs(n);
    auto brute = oracle::incidence_pairs(n);
    REQUIRE(pairs.size() == brute.size());
    std::set<std::pair<oracle::Parts, oracle::Parts>> want(brute.begin(), brute.end());
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      CHECK(want.count({pairs[j].lambda.parts(), pairs[j].mu.parts()}) == 1);
      if (j > 0) CHECK(pairs[j - 1] < pairs[j]);
    }
  }
}

TEST_CASE("pair validation and derive_lambda") {
  CHECK_THROWS_AS(make_incidence_pair(Partition{2}, Partition{1, 1, 1}), DomainError);
  CHECK_THROWS_AS(make_incidence_pair(Partition{1}, Partition{3}), DomainError);
  CHECK(derive_lambda(Partition{2, 1}, 2) == Partition{1, 1});
  CHECK(derive_lambda(Partition{2, 1}, 1) == Partition{2});
  CHECK(derive_lambda(Partition{3, 3, 1}, 3) == Partition{3, 2, 1});
  CHECK_THROWS_AS(derive_lambda(Partition{2, 1}, 3), DomainError);
}

TEST_CASE("k index and marked cells") {
  CHECK(k_index(pr({1}, {2})) == 0);
  CHECK(k_index(pr({1}, {1, 1})) == 1);
  CHECK(k_index(pr({1, 1}, {2, 1})) == 0);
  CHECK(k_index(pr({}, {1})) == 0);

  auto mc = marked_cells(pr({1}, {2}));
  CHECK(mc.k == 0);
  CHECK(mc.m == 1);
}

TEST_CASE("h_pair and h_plus values") {
  CHECK(h_pair(pr({}, {1})) == 1);
  CHECK(h_pair(pr({1}, {2})) == 2);
  CHECK(h_pair(pr({1}, {1, 1})) == 2);
  CHECK(h_pair(pr({2}, {3})) == 12);
  CHECK(h_pair(pr({2}, {2, 1})) == 6);
  CHECK(h_pair(pr({1, 1}, {2, 1})) == 6);
  CHECK(h_pair(pr({1, 1}, {1, 1, 1})) == 12);

  CHECK(h_plus(pr({}, {1})) == 1);
  CHECK(h_plus(pr({1}, {2})) == 2);
  CHECK(h_plus(pr({1}, {1, 1})) == 1);
  CHECK(h_plus(pr({2}, {3})) == 6);
  CHECK(h_plus(pr({1, 1}, {1, 1, 1})) == 2);
  CHECK(h_plus(pr({1, 1}, {2, 1})) == 3);
}

TEST_CASE("hook sums over pairs") {
  // Σ_μ h(λ)²/h(λ,μ) = 1 and Σ_λ h(μ)²/h(λ,μ) = |μ|.
  for (int n = 0; n <= 8; ++n) {
    std::map<Partition, Scalar> by_lambda, by_mu;
    for (const auto& p : enumerate_incidence_pairs(n)) {
      Integer hl = hook_product(p.lambda), hm = hook_product(p.mu);
      by_lambda[p.lambda] += Scalar(hl * hl) / Scalar(h_pair(p));
      by_mu[p.mu] += Scalar(hm * hm) / Scalar(h_pair(p));
    }
    for (const auto& [l, s] : by_lambda) CHECK(s == 1);
    for (const auto& [m, s] : by_mu) CHECK(s == m.size());
  }
}

TEST_CASE("euler class") {
  CHECK(euler_class(pr({}, {1})) == EulerClass{-1, 1, 2});
  CHECK(euler_class(pr({1}, {2})) == EulerClass{1, 2, 4});
  CHECK(euler_class(pr({1, 1}, {2, 1})) == EulerClass{-1, 6, 6});
}

TEST_CASE("tangent weights at Hilbert scheme fixed points") {
  CHECK(tangent_weights_hilbert(Partition{1}) == WeightMultiset{-1, 1});
  CHECK(tangent_weights_hilbert(Partition{2}) == WeightMultiset{-2, -1, 1, 2});
  CHECK(tangent_weights_hilbert(Partition{2, 1}) == WeightMultiset{-3, -1, -1, 1, 1, 3});
}

TEST_CASE("tangent weights at nested fixed points") {
  CHECK(tangent_weights_incidence(pr({}, {1})) == WeightMultiset{-1, 1});
  CHECK(tangent_weights_incidence(pr({1, 1}, {2, 1})) == WeightMultiset{-2, -1, -1, 1, 1, 3});
  auto w = tangent_weights_incidence(pr({1}, {2}));
  CHECK(std::accumulate(w.begin(), w.end(), std::int64_t{1}, std::multiplies<>()) == 2);
}

TEST_CASE("nested tangent weights agree with the deformation oracle") {
  // The orientation of weights is a convention; fix it on one pair.
  int sign = 0;
  for (int s : {1, -1}) {
    if (oracle::nested_tangent_weights({1, 1}, {2, 1}, s) == tangent_weights_incidence(pr({1, 1}, {2, 1}))) sign = s;
  }
  REQUIRE(sign != 0);
  for (int n = 0; n <= 6; ++n) {
    for (const auto& p : enumerate_incidence_pairs(n)) {
      auto want = oracle::nested_tangent_weights(p.lambda.parts(), p.mu.parts(), sign);
      INFO(p.lambda.to_string(), " ", p.mu.to_string());
      CHECK(want.size() == static_cast<std::size_t>(2 * n + 2));
      CHECK(tangent_weights_incidence(p) == want);
    }
  }
}

TEST_CASE("weights reproduce euler class and h_plus") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& p : enumerate_incidence_pairs(n)) {
      auto w = tangent_weights_incidence(p);
      Integer all = 1, pos = 1;
      for (auto x : w) {
        all *= static_cast<long>(x);
        if (x > 0) pos *= static_cast<long>(x);
      }
      Integer expect = h_pair(p);
      if (n % 2 == 0) expect = -expect;
      CHECK(all == expect);
      CHECK(pos == h_plus(p));
    }
  }
}

TEST_CASE("every tangent case occurs") {
  std::set<TangentCase> seen;
  for (int n = 0; n <= 5; ++n)
    for (const auto& p : enumerate_incidence_pairs(n)) seen.insert(tangent_case(p));
  CHECK(seen.size() == 4);
}

TEST_CASE("betti numbers") {
  auto b = betti_series(12);
  REQUIRE(b.size() == 13);
  CHECK(b[0] == std::vector<std::int64_t>{1});
  CHECK(b[1] == std::vector<std::int64_t>{1, 1});
  CHECK(b[2] == std::vector<std::int64_t>{1, 2, 1});
  CHECK(betti_from_fixed_points(1) == std::vector<std::int64_t>{1, 1});
  CHECK(betti_from_fixed_points(2) == std::vector<std::int64_t>{1, 2, 1});

  auto want = oracle::betti_series(12);
  for (int n = 0; n <= 12; ++n) {
    CHECK(b[static_cast<std::size_t>(n)] == want[static_cast<std::size_t>(n)]);
    CHECK(betti_from_fixed_points(n) == want[static_cast<std::size_t>(n)]);
    auto total = std::accumulate(want[static_cast<std::size_t>(n)].begin(), want[static_cast<std::size_t>(n)].end(), std::int64_t{0});
    CHECK(static_cast<std::int64_t>(enumerate_incidence_pairs(n).size()) == total);
    CHECK(static_cast<std::int64_t>(b2_keys(n).size()) == total);
  }
}
