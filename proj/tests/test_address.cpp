#include <doctest.h>

#include <functional>

#include "udt/address.hpp"

using namespace udt;

namespace {

// independent oracle: r as the defining difference of point values
Rational r_by_recursion(const Address& u) { return a_value(u) - a_value(parent_successor(u)); }

void for_all_addresses(int max_depth, std::int64_t max_index,
                       const std::function<void(const Address&)>& fn) {
  std::vector<std::int64_t> pre;
  auto walk = [&](auto&& self) -> void {
    if (!pre.empty()) fn(Address(pre));
    if (static_cast<int>(pre.size()) == max_depth) return;
    for (std::int64_t n = 1; n <= max_index; ++n) {
      pre.push_back(n);
      self(self);
      pre.pop_back();
    }
  };
  walk(walk);
}

}  // namespace

TEST_CASE("worked point values") {
  CHECK(a_value(Address({1})) == Rational(1, 2));
  CHECK(a_value(Address({2})) == Rational(1, 4));
  CHECK(a_value(Address({1, 1})) == Rational(17, 64));
  CHECK(a_value(Address({1, 2})) == Rational(33, 128));
}

TEST_CASE("worked gap values") {
  CHECK(r_value(Address({1, 1})) == Rational(1, 128));
  CHECK(r_value(Address({1})) == Rational(1, 4));
  CHECK(r_value(Address(std::vector<std::int64_t>(10, 1))) == pow2(-47));
}

TEST_CASE("parent_successor increments the last index") {
  CHECK(parent_successor(Address({1, 1})) == Address({1, 2}));
  CHECK(parent_successor(Address({3})) == Address({4}));
  CHECK(parent_successor(Address({2, 5, 1})) == Address({2, 5, 2}));
}

TEST_CASE("child appends an index") {
  CHECK(child(Address({1}), 1) == Address({1, 1}));
  CHECK(child(Address({1}), 2) == Address({1, 2}));
  CHECK(r_value(child(Address({2, 3}), 4)) == pow2(-8) * r_value(Address({2, 3})));
  CHECK(r_value(child(Address({2, 3}), 4)) == r_by_recursion(child(Address({2, 3}), 4)));
}

TEST_CASE("condition (i): children sit strictly between the successor and the point") {
  for_all_addresses(3, 8, [](const Address& u) {
    Rational top = a_value(u);
    Rational bottom = a_value(parent_successor(u));
    for (std::int64_t n = 1; n <= 8; ++n) {
      Rational c = a_value(child(u, n));
      CHECK(bottom < c);
      CHECK(c < top);
    }
  });
}

TEST_CASE("condition (ii): incrementing the last index halves the gap") {
  for_all_addresses(4, 8, [](const Address& u) {
    CHECK(r_value(parent_successor(u)) == r_value(u) / 2);
  });
}

TEST_CASE("closed form for r matches the recursion everywhere in range") {
  for_all_addresses(4, 8, [](const Address& u) { CHECK(r_value(u) == r_by_recursion(u)); });
}

TEST_CASE("children accumulate at the successor value at exact rate 2^-(n+3) r") {
  for_all_addresses(3, 6, [](const Address& u) {
    Rational succ = a_value(parent_successor(u));
    Rational r = r_value(u);
    for (std::int64_t n = 1; n <= 6; ++n)
      CHECK(a_value(child(u, n)) - succ == pow2(-(n + 3)) * r);
  });
}

TEST_CASE("all point values live in (0, 1/2]") {
  for_all_addresses(4, 8, [](const Address& u) {
    Rational a = a_value(u);
    CHECK(a > 0);
    CHECK(a <= Rational(1, 2));
  });
}

TEST_CASE("value order within one parent is decreasing in the last index") {
  for_all_addresses(3, 6, [](const Address& u) {
    for (std::int64_t n = 1; n < 6; ++n)
      CHECK(value_less(child(u, n + 1), child(u, n)));
  });
}

TEST_CASE("address validation") {
  CHECK_THROWS_AS(Address(std::vector<std::int64_t>{}), std::invalid_argument);
  CHECK_THROWS_AS(Address({0}), std::invalid_argument);
  CHECK_THROWS_AS(Address({1, -2}), std::invalid_argument);
  CHECK_THROWS_AS(child(Address({1}), 0), std::invalid_argument);
  CHECK_THROWS_AS(decrement_last(Address({2, 1})), std::invalid_argument);
  CHECK(decrement_last(Address({2, 3})) == Address({2, 2}));
}

TEST_CASE("address JSON round trip") {
  Address u({1, 2, 5});
  CHECK(to_json_string(u) == "[1,2,5]");
  CHECK(address_from_json_string(to_json_string(u)) == u);
}
