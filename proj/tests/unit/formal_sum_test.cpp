#include <string>

#include "doctest.h"
#include "gpv/formal_sum.hpp"

using gpv::FormalSum;
using Sum = FormalSum<std::string>;

TEST_SUITE("formal_sum") {
  TEST_CASE("combine") {
    const Sum x("k", 2);
    CHECK(combine(x, x, 1, -1).empty());
    CHECK(combine(Sum("k", 2), Sum("k", 3), 1, 1) == Sum("k", 5));
    const auto mixed = combine(Sum("k1"), Sum("k2"), 2, -1);
    CHECK(mixed.size() == 2);
    CHECK(mixed.coeff("k1") == 2);
    CHECK(mixed.coeff("k2") == -1);
  }

  TEST_CASE("combine is commutative with the empty sum neutral") {
    Sum a("x", 3);
    a.add("y", -1);
    const Sum b("y", 4);
    CHECK(combine(a, b, 2, 5) == combine(b, a, 5, 2));
    CHECK(combine(a, Sum{}, 1, 7) == a);
    CHECK(combine(combine(a, b, 1, 1), a, 1, 1) == combine(a, combine(b, a, 1, 1), 1, 1));
  }

  TEST_CASE("zero coefficients are never stored") {
    Sum a("k", 1);
    a.add("k", -1);
    CHECK(a.empty());
    a.add("j", 0);
    CHECK(a.empty());
  }

  TEST_CASE("extend") {
    Sum a("k1", 3);
    a.add("k2", -2);
    CHECK(gpv::extend<std::string>([](const std::string& k) { return Sum(k); }, a) == a);
    CHECK(gpv::extend<std::string>([](const std::string&) { return Sum{}; }, a).empty());
    const auto doubled = gpv::extend<std::string>([](const std::string& k) { return Sum(k, 2); }, Sum("k1", 3));
    CHECK(doubled == Sum("k1", 6));
  }

  TEST_CASE("dirac") {
    CHECK(dirac(Sum("k"), Sum("k")) == 1);
    CHECK(dirac(Sum("k1"), Sum("k2")) == 0);
    Sum a("k", 2);
    a.add("j", 1);
    Sum b("k", 3);
    b.add("j", -1);
    CHECK(dirac(a, b) == 5);
  }

  TEST_CASE("dump is sorted with explicit signs") {
    Sum a("b", -1);
    a.add("a", 2);
    CHECK(gpv::dump(a, [](const std::string& k) { return k; }) == "+2 a\n-1 b\n");
  }
}
