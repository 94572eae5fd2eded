#include <random>

#include "doctest.h"
#include "gl2d/local_field.hpp"

using namespace gl2d;

namespace {

int64_t v3(int64_t a) {
  if (a == 0) return kInfVal;
  int64_t v = 0;
  while (a % 3 == 0) {
    a /= 3;
    ++v;
  }
  return v;
}

}  // namespace

TEST_CASE("prime powers and finite fields") {
  CHECK(prime_exponent(9, 3) == 2);
  CHECK(prime_exponent(3, 3) == 1);
  CHECK(prime_exponent(10, 3) == -1);
  CHECK(ipow(3, 4) == 81);
  CHECK(mod_floor(-7, 3) == 2);

  const auto k = FiniteField::make(3, 2);
  CHECK(k->size() == 9);
  CHECK(k->elements().size() == 9);
  const auto k1 = k->subfield(1);
  CHECK(k1->size() == 3);
  for (auto x : k->elements()) {
    CHECK(k->frob(x, 2) == x);  // x^9 = x
    CHECK(k1->contains(k->mul(x, k->frob(x, 1))) == true);  // norms land in F_3
    if (x == 0) continue;
    CHECK(k->mul(x, k->inv(x)) == k->one());
    CHECK(k->exp(k->log(x)) == x);
  }
}

TEST_CASE("integer arithmetic in Z_3 agrees with machine integers") {
  const auto F = LocalField::make({3, 1, 1, 1, 20});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int64_t> dist(-100000, 100000);
  for (int i = 0; i < 400; ++i) {
    const int64_t a = dist(rng), b = dist(rng);
    const Element A = F->from_int(a), B = F->from_int(b);
    CHECK((A + B).agrees(F->from_int(a + b)));
    CHECK((A - B).agrees(F->from_int(a - b)));
    CHECK((A * B).agrees(F->from_int(a * b)));
    if (a != 0) CHECK(A.valuation() == v3(a));
    if (a * b != 0) CHECK((A * B).valuation() == v3(a) + v3(b));
    if (b != 0) CHECK(((A / B) * B).agrees(A));
  }
}

TEST_CASE("uniformizer, prime and Teichmueller lifts") {
  const auto F = LocalField::make({3, 2, 2, 1, 16});
  CHECK(F->prime().valuation() == 2);
  CHECK(F->pi_pow(2).agrees(F->prime()));
  CHECK(F->pi_pow(-3).valuation() == -3);
  CHECK((F->pi_pow(5) * F->pi_pow(-5)).agrees(F->one()));
  const auto& k = F->residue_field();
  for (auto x : k->elements()) {
    if (x == 0) {
      CHECK(F->teichmuller(x).is_zero());
      continue;
    }
    CHECK(F->teichmuller(x).pow(8).agrees(F->one()));
    for (auto y : k->elements()) {
      if (y == 0) continue;
      CHECK((F->teichmuller(x) * F->teichmuller(y)).agrees(F->teichmuller(k->mul(x, y))));
    }
  }
}

TEST_CASE("exactness and precision errors") {
  const auto F = LocalField::make({3, 1, 1, 1, 10});
  const Element one = F->one();
  CHECK(one.exact());
  CHECK((one + one).exact());
  // x - x of an exact value is exact zero
  CHECK((F->from_int(5) - F->from_int(5)).is_zero());

  const Element third = F->one() / F->from_int(2);  // a unit with infinitely many digits
  const Element tiny = third.with_precision(3) - third.with_precision(3);
  CHECK_FALSE(tiny.is_value());
  if (tiny.is_approx()) CHECK_THROWS_AS((void)tiny.valuation(), PrecisionError);

  CHECK(LocalField::precision_ceiling({3, 1, 1, 1}) == 34);
  CHECK(LocalField::precision_ceiling({3, 1, 4, 1}) == 136);
}

TEST_CASE("escalation reruns at doubled precision") {
  std::vector<std::string> trail;
  int calls = 0;
  const std::function<int(const LocalFieldPtr&)> fn = [&](const LocalFieldPtr& F) {
    ++calls;
    if (F->precision() < 20) throw PrecisionError("not enough digits");
    return F->precision();
  };
  const int used = with_escalation<int>({3, 1, 1, 1}, 8, 34, fn, &trail);
  CHECK(used == 32);
  CHECK(calls == 3);
  CHECK(trail.size() == 2);

  const std::function<int(const LocalFieldPtr&)> never = [](const LocalFieldPtr&) -> int {
    throw PrecisionError("always");
  };
  CHECK_THROWS_AS(with_escalation<int>({3, 1, 1, 1}, 8, 16, never), PrecisionError);
}
