#include "doctest.h"
#include "gl2d/cyclotomic.hpp"
#include "gl2d/selftest.hpp"

using namespace gl2d;

TEST_CASE("transform of the basic functions") {
  const auto k = FiniteField::make(3, 2);
  const FourierToolkit T(k);
  CHECK(T.fourier(T.delta0()) == T.constant(1));
  CHECK(T.fourier(T.constant(1)) == T.scale(T.delta0(), T.scalar(9)));
  // delta_0 is the unit for convolution
  const auto chi = T.character(MultChar{k, 3});
  CHECK(T.convolve(chi, T.delta0()) == chi);
}

TEST_CASE("cyclotomic arithmetic is exact") {
  auto R = std::make_shared<const CyclotomicRing>(24);
  const auto z = CyclotomicScalar::zeta_pow(R, 1);
  CHECK(CyclotomicScalar::zeta_pow(R, 24) == CyclotomicScalar(R, 1));
  CHECK(CyclotomicScalar::zeta_pow(R, 12) == CyclotomicScalar(R, -1));
  CyclotomicScalar s(R, 0);
  for (int i = 0; i < 24; ++i) s += CyclotomicScalar::zeta_pow(R, i);
  CHECK(s.is_zero());
  CHECK((z * CyclotomicScalar::zeta_pow(R, 23)) == CyclotomicScalar(R, 1));
}

TEST_CASE("exhaustive suites over F_3 and F_9") {
  for (int m : {1, 2}) {
    const SuiteResult r = fourier_suite(3, m);
    INFO(r.name);
    std::string msgs;
    for (const auto& f : r.failures) msgs += f + "\n";
    INFO(msgs);
    CHECK(r.cases > 100);
    CHECK(r.passed());
  }
}
