#include <doctest.h>

#include "nestfock/curve_classes.hpp"
#include "nestfock/errors.hpp"
#include "nestfock/verify.hpp"

using namespace nestfock;

namespace {

B3Vector b3(std::initializer_list<int> l, std::initializer_list<int> m) {
  return B3Vector(B3Key{make_incidence_pair(Partition(l), Partition(m))});
}

HilbLVector L(std::initializer_list<int> l) { return HilbLVector(HilbLKey{Partition(l)}); }

}  // namespace

TEST_CASE("add_part") {
  CHECK(add_part(Partition{1}, 0, 1) == Partition{1, 1});
  CHECK(add_part(Partition{1}, 1, 1) == Partition{2});
  CHECK(add_part(Partition{2, 2, 1}, 2, 3) == Partition{5, 2, 1});
  CHECK_THROWS_AS(add_part(Partition{2, 2, 1}, 3, 1), DomainError);
}

TEST_CASE("Nakajima creation on curve classes") {
  CHECK(nakajima_L(1, L({})) == L({1}));
  CHECK(nakajima_L(1, L({1})) == make_scalar(2) * L({1, 1}) + L({2}));
  CHECK(nakajima_L(2, L({2})) == make_scalar(2) * L({2, 2}) + L({4}));
}

TEST_CASE("translate_b3") {
  CHECK(translate_b3(b3({}, {1})) == b3({1}, {2}));
  CHECK(translate_b3(b3({1}, {2})) == b3({2}, {3}));
  CHECK(translate_b3(b3({1}, {1, 1})) == b3({1, 1}, {2, 1}));
}

TEST_CASE("create_b3") {
  CHECK(create_b3(1, b3({}, {1})) == b3({1}, {1, 1}) + b3({1}, {2}));
  CHECK(create_b3(1, b3({1}, {2})) == b3({1, 1}, {2, 1}) + b3({2}, {3}));
  CHECK(create_b3(1, b3({1}, {1, 1})) == b3({2}, {2, 1}) + make_scalar(2) * b3({1, 1}, {1, 1, 1}) + b3({1, 1}, {2, 1}));
}

TEST_CASE("the uncorrected coefficient differs exactly where the correction applies") {
  auto literal = create_b3(1, b3({1}, {2}), CreateRule::literal);
  CHECK(literal == make_scalar(2) * b3({1, 1}, {2, 1}) + b3({2}, {3}));
  CHECK(create_b3(1, b3({}, {1}), CreateRule::literal) == create_b3(1, b3({}, {1})));
}

TEST_CASE("creation commutes with translation") {
  CHECK(check_create_translate_commute(5, 3).passed);
  auto bad = check_create_translate_commute(1, 1, CreateRule::literal);
  CHECK_FALSE(bad.passed);
}
