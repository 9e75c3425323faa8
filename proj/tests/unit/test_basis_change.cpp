#include <doctest.h>

#include "nestfock/basis_change.hpp"
#include "nestfock/errors.hpp"
#include "nestfock/verify.hpp"
#include "oracles.hpp"

using namespace nestfock;

namespace {

IncidencePair pr(std::initializer_list<int> l, std::initializer_list<int> m) {
  return make_incidence_pair(Partition(l), Partition(m));
}
B1Vector b1(std::initializer_list<int> l, std::initializer_list<int> m) { return B1Vector(pr(l, m)); }
B2Vector key(int i, std::initializer_list<int> nu) { return B2Vector(B2Key{i, Partition(nu)}); }
Scalar q(long a, long b = 1) { return make_scalar(a, b); }

RatMatrix rat(std::vector<std::vector<long>> rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace

TEST_CASE("basis names") {
  CHECK(parse_basis("b2") == Basis::b2);
  CHECK_FALSE(parse_basis("b4").has_value());
  CHECK(basis_name(Basis::b3) == "b3");
  CHECK(basis_keys(Basis::b2, 1).size() == 2);
}

TEST_CASE("curve classes in the monomial basis") {
  CHECK(b3_in_b2(pr({}, {1})) == vacuum());
  CHECK(b3_in_b2(pr({2}, {3})) == key(2, {}));
  CHECK(b3_in_b2(pr({1}, {1, 1})) == key(0, {1}) - key(1, {}));
  CHECK(b3_in_b2(pr({1, 1}, {2, 1})) == key(1, {1}) - key(2, {}));
  CHECK(b3_in_b2(pr({1, 1}, {1, 1, 1})) ==
        q(1, 2) * key(0, {1, 1}) - q(1, 2) * key(0, {2}) - key(1, {1}) + key(2, {}));
  for (int n = 0; n <= 6; ++n) {
    for (const auto& p : enumerate_incidence_pairs(n)) {
      CHECK(b3_in_b2(p, CommonPartRule::smallest) == b3_in_b2(p, CommonPartRule::largest));
    }
  }
}

TEST_CASE("gram matrix of curve classes") {
  CHECK(gram_b3(0) == rat({{1}}));
  CHECK(gram_b3(1) == rat({{1, -1}, {-1, 2}}));
  auto g = gram_b3(2);
  std::vector<long> diag{1, 3, 2, 3};
  for (std::size_t j = 0; j < 4; ++j) CHECK(g(j, j) == diag[j]);
  for (int n = 0; n <= 5; ++n) {
    auto gn = gram_b3(n);
    CHECK(gn == gn.transpose());
  }
}

TEST_CASE("curve classes in the fixed-point basis") {
  CHECK(b3_to_b1(B3Vector(B3Key{pr({1}, {2})})) == q(1, 2) * b1({1}, {2}) - q(1, 2) * b1({1}, {1, 1}));
  CHECK(b3_to_b1(B3Vector(B3Key{pr({1}, {1, 1})})) == b1({1}, {1, 1}));
  CHECK(b3_to_b1(B3Vector(B3Key{pr({2}, {2, 1})})) ==
        q(1, 2) * b1({2}, {2, 1}) - q(1, 6) * b1({1, 1}, {2, 1}) - q(1, 3) * b1({1, 1}, {1, 1, 1}));
  CHECK(b3_to_b1(B3Vector(B3Key{pr({1, 1}, {1, 1, 1})})) == q(1, 2) * b1({1, 1}, {1, 1, 1}));
}

TEST_CASE("diagonal of the curve-class matrix") {
  for (int n = 0; n <= 6; ++n) {
    auto m = b3_in_b1(n);
    auto pairs = enumerate_incidence_pairs(n);
    for (std::size_t j = 0; j < pairs.size(); ++j) CHECK(m.entries(j, j) == Scalar(1) / Scalar(h_plus(pairs[j])));
  }
}

TEST_CASE("monomial classes in the fixed-point basis") {
  CHECK(b2_to_b1(key(0, {1})) == q(1, 2) * b1({1}, {2}) + q(1, 2) * b1({1}, {1, 1}));
  CHECK(b2_to_b1(key(1, {})) == q(1, 2) * b1({1}, {2}) - q(1, 2) * b1({1}, {1, 1}));
  CHECK(b2_to_b1(key(2, {})) ==
        q(1, 6) * b1({2}, {3}) - q(1, 6) * b1({2}, {2, 1}) - q(1, 6) * b1({1, 1}, {2, 1}) + q(1, 6) * b1({1, 1}, {1, 1, 1}));
  CHECK(b2_to_b1(key(0, {1, 1})) ==
        q(1, 6) * b1({2}, {3}) + q(1, 3) * b1({2}, {2, 1}) + q(1, 3) * b1({1, 1}, {2, 1}) + q(1, 6) * b1({1, 1}, {1, 1, 1}));
  CHECK(b2_to_b1(key(0, {2})) ==
        q(1, 6) * b1({2}, {3}) + q(1, 3) * b1({2}, {2, 1}) - q(1, 3) * b1({1, 1}, {2, 1}) - q(1, 6) * b1({1, 1}, {1, 1, 1}));
  // [L̃^{(1,1),(1,1,1)}C] = ½[(1,1),(1,1,1)].
  CHECK(b1_to_b2(b1({1, 1}, {1, 1, 1})) == key(0, {1, 1}) - key(0, {2}) - q(2) * key(1, {1}) + q(2) * key(2, {}));
}

TEST_CASE("transition matrices compose") {
  for (int n = 0; n <= 5; ++n) {
    auto size = enumerate_incidence_pairs(n).size();
    for (Basis a : {Basis::b1, Basis::b2, Basis::b3}) {
      CHECK(transition(a, a, n).entries == RatMatrix::identity(size));
      for (Basis b : {Basis::b1, Basis::b2, Basis::b3}) {
        auto ab = transition(a, b, n);
        CHECK(ab.degree == n);
        CHECK((ab.entries * transition(b, a, n).entries).is_identity());
        for (Basis c : {Basis::b1, Basis::b2, Basis::b3}) {
          CHECK(ab.entries * transition(b, c, n).entries == transition(a, c, n).entries);
        }
      }
    }
  }
}

TEST_CASE("round trips of vectors") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& k : b2_keys(n)) CHECK(b1_to_b2(b2_to_b1(B2Vector(k))) == B2Vector(k));
    for (const auto& p : enumerate_incidence_pairs(n)) {
      CHECK(b1_to_b3(b3_to_b1(B3Vector(B3Key{p}))) == B3Vector(B3Key{p}));
      CHECK(b2_to_b1(b3_to_b2(B3Vector(B3Key{p}))) == b3_to_b1(B3Vector(B3Key{p})));
    }
  }
}

TEST_CASE("pairing transport and triangularity") {
  CHECK(check_pairing_transport(6).passed);
  CHECK(check_triangularity(6).passed);
  CHECK(check_roundtrip(6).passed);
  CHECK(check_common_part_choice(6).passed);
}

TEST_CASE("fixed-point operators satisfy the Heisenberg relations") {
  CHECK(check_heisenberg_b1(4, 8, 3).passed);
  CHECK(check_translation_b1(4, 8, 3).passed);
  // ã_{-1} on the vacuum class.
  auto c = b1_creation(1, 0);
  REQUIRE(c.rows() == 1);
  REQUIRE(c.cols() == 2);
  CHECK(c(0, 0) == q(1, 2));
  CHECK(c(0, 1) == q(1, 2));
  CHECK(b1_heisenberg(0, 3).is_zero());
}

TEST_CASE("Hilbert scheme dictionary") {
  auto p = [](std::initializer_list<int> nu) { return HilbPVector(HilbPKey{Partition(nu)}); };
  CHECK(hilb_L_in_p(Partition{1, 1}) == q(1, 2) * p({1, 1}) - q(1, 2) * p({2}));
  CHECK(hilb_fixed_to_p(HilbFixedVector(HilbFixedKey{Partition{2}})) == p({1, 1}) + p({2}));
  CHECK(hilb_fixed_to_p(HilbFixedVector(HilbFixedKey{Partition{1, 1}})) == p({1, 1}) - p({2}));
  CHECK(hilb_fixed_to_p(HilbFixedVector(HilbFixedKey{Partition{1}})) == p({1}));
  for (int n = 0; n <= 6; ++n) {
    for (const auto& l : enumerate_partitions(n)) {
      HilbFixedVector v(HilbFixedKey{l});
      auto img = hilb_fixed_to_p(v);
      CHECK(hilb_p_to_fixed(img) == v);
      Integer h = hook_product(l);
      CHECK(pair_hilb_p(img, img) == Scalar(h * h));
    }
  }
}

TEST_CASE("memo can be cleared and primed") {
  auto before = b2_in_b1(3);
  clear_basis_memo();
  auto after = b2_in_b1(3);
  CHECK(before == after);
  prime_transition(after);
  CHECK(b2_in_b1(3) == before);
}
