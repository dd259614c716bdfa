#include <doctest.h>

#include "orbitsep/field.hpp"

using namespace orbitsep;

TEST_CASE("rationals stay reduced") {
  FieldElem a = FieldElem::rational(2, 4);
  CHECK(a.rat().get_num() == 1);
  CHECK(a.rat().get_den() == 2);
  CHECK((a + a).is_one());
  CHECK((a - a).is_zero());
  CHECK(FieldElem::rational(-3, -6) == FieldElem::rational(1, 2));
}

TEST_CASE("rational arithmetic") {
  FieldElem a = FieldElem::rational(3, 2), b = FieldElem::rational(-1, 3);
  CHECK((a * b) == FieldElem::rational(-1, 2));
  CHECK((a / b) == FieldElem::rational(-9, 2));
  CHECK((-b) == FieldElem::rational(1, 3));
  CHECK(a.pow(3) == FieldElem::rational(27, 8));
  CHECK(a.inverse() == FieldElem::rational(2, 3));
  CHECK_THROWS_AS(FieldElem::rational(0).inverse(), std::domain_error);
}

TEST_CASE("prime field arithmetic") {
  const std::uint64_t p = 1000003;
  FieldElem a = FieldElem::residue(1000002, p);  // = -1
  CHECK((a * a).is_one());
  CHECK((a + FieldElem::one(Field{p})).is_zero());
  FieldElem b = FieldElem::residue(7, p);
  CHECK((b * b.inverse()).is_one());
  CHECK(b.pow(p - 1).is_one());  // Fermat
}

TEST_CASE("mixed fields rejected") {
  FieldElem q = FieldElem::rational(1);
  FieldElem r = FieldElem::residue(1, 101);
  CHECK_THROWS_AS(q + r, UsageError);
  CHECK_THROWS_AS(q * r, UsageError);
}

TEST_CASE("rational to prime-field reduction") {
  Field f{101};
  CHECK(FieldElem::rational(1, 2).to_field(f) == FieldElem::residue(51, 101));
  CHECK(FieldElem::rational(-1).to_field(f) == FieldElem::residue(100, 101));
  // denominator divisible by p
  CHECK_THROWS_AS(FieldElem::rational(1, 101).to_field(f), BadPrimeError);
}

TEST_CASE("primality check") {
  CHECK(is_prime_modulus(2));
  CHECK(is_prime_modulus(101));
  CHECK(is_prime_modulus(1000003));
  CHECK_FALSE(is_prime_modulus(1));
  CHECK_FALSE(is_prime_modulus(4));
  CHECK_FALSE(is_prime_modulus(1000001));  // 101 * 9901
  CHECK(is_prime_modulus(1048583));        // first prime above 2^20
}
