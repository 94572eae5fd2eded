#include "doctest.h"
#include "gl2d/lattice.hpp"
#include "gl2d/selftest.hpp"

using namespace gl2d;

namespace {

Vec vec(const LocalFieldPtr& F, std::initializer_list<int64_t> ints) {
  Vec v;
  for (auto x : ints) v.push_back(F->from_int(x));
  return v;
}

}  // namespace

TEST_CASE("diagonal lattices") {
  const auto F = LocalField::make({3, 1, 1, 1, 20});
  const LocalField* f = F.get();
  const Lattice A = Lattice::diagonal(f, {0, 1});
  const Lattice B = Lattice::diagonal(f, {1, 0});
  CHECK(A.sum(B).equal(Lattice::standard(f, 2)));
  CHECK(A.intersect(B).equal(Lattice::diagonal(f, {1, 1})));
  CHECK(A.dual().equal(Lattice::diagonal(f, {0, -1})));
  CHECK(A.scale(-2).profile() == std::vector<int64_t>{-2, -1});
  CHECK(Lattice::standard(f, 2).index_valuation_of(A) == 1);
  CHECK(A.tensor(B).profile() == std::vector<int64_t>{1, 0, 2, 1});
  CHECK_THROWS_AS((void)A.index_valuation_of(Lattice::standard(f, 2)), ContainmentError);
}

TEST_CASE("membership and echelon of non-diagonal generators") {
  const auto F = LocalField::make({3, 1, 1, 1, 20});
  const LocalField* f = F.get();
  // span of (1, 1) and (0, 3)
  const Lattice L = Lattice::from_generators(f, 2, {vec(F, {1, 1}), vec(F, {0, 3}), vec(F, {2, 5})});
  CHECK(L.profile() == std::vector<int64_t>{0, 1});
  CHECK(L.member(vec(F, {1, 4})));
  CHECK_FALSE(L.member(vec(F, {1, 2})));
  CHECK(L.member(vec(F, {3, 0})));
  CHECK(L.contains(Lattice::diagonal(f, {1, 1})));
}

TEST_CASE("meet with a subspace") {
  const auto F = LocalField::make({3, 1, 1, 1, 20});
  const LocalField* f = F.get();
  const Lattice L = Lattice::diagonal(f, {-1, 2, 0});
  Subspace U{3, {vec(F, {1, 0, 0}), vec(F, {0, 1, 1})}};
  const Lattice M = meet_subspace(L, U);
  CHECK(M.equal(Lattice::diagonal(f, {-1, 2})));
  CHECK(embed(M, U).rank() == 2);
}

TEST_CASE("random instances against the rational oracle") {
  const SuiteResult r = lattice_oracle_suite(500, 99);
  std::string msgs;
  for (const auto& f : r.failures) msgs += f + "\n";
  INFO(msgs);
  CHECK(r.cases >= 500);
  CHECK(r.passed());
}
