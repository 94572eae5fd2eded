#include "doctest.h"
#include "gl2d/zigzag.hpp"

using namespace gl2d;

namespace {

DiagramModel principal_series(int d, int dprime, int64_t theta, int64_t v1, int e = 1) {
  const auto F = LocalField::make({3, d, e, 1, 24});
  const auto k = F->residue_field()->subfield(d);
  auto tau = [&](int64_t v) {
    TameCharacterData td;
    td.d = d;
    td.dprime = dprime;
    td.theta = MultChar{k, theta};
    td.q = 3;
    td.unif_value = F->pi_pow(v * dprime / d);
    return TameIrrep::build(F, td);
  };
  return build_principal_series(F, tau(v1), tau(-v1));
}

DiagramModel speh_sym1() {
  const auto F = LocalField::make({3, 2, 4, 1, 24});
  SpehParams sp;
  sp.theta = MultChar{F->residue_field()->subfield(2), 1};
  sp.q = 3;
  sp.nu = -4;
  sp.epsilon = F->one();
  return tensor_diagram(build_speh(F, sp), build_sym1_algebraic(F, 3));
}

}  // namespace

TEST_CASE("predicates") {
  CHECK(emerton_predicate({0, 0, 1, 1, 1}));
  CHECK(emerton_predicate({-1, 1, 1, 1, 1}));
  CHECK_FALSE(emerton_predicate({-2, 2, 1, 1, 1}));
  CHECK_FALSE(emerton_predicate({1, -1, 1, 1, 1}));
  CHECK(emerton_predicate({-4, 4, 2, 1, 1}));
  CHECK_FALSE(emerton_predicate({-5, 5, 2, 1, 1}));
  CHECK_THROWS_AS((void)emerton_predicate({1, 0, 1, 1, 1}), PredicateError);

  for (int64_t v = -3; v <= 3; ++v) {
    const bool a = normalized_predicate({v, -v, 1, 2, 1});
    CHECK(a == normalized_predicate({-v, v, 1, 2, 1}));
    CHECK(a == (v >= -1 && v <= 1));
  }
  CHECK_THROWS_AS((void)normalized_predicate({0, 0, 1, 1, 1}), PredicateError);
}

TEST_CASE("unramified unitary case stabilizes at once") {
  const DiagramModel M = principal_series(1, 1, 0, 0);
  const Lattice seed = seed_lattice(M);
  CHECK(seed.equal(Lattice::standard(M.field.get(), 2)));
  const ZigZagTrace tr = run_zigzag(M, seed);
  CHECK(tr.verdict.kind == VerdictKind::Stabilized);
  CHECK(tr.verdict.at <= 1);
  CHECK(tr.confirmed);
  CHECK(tr.monotone);
  // the induced lattice of O is already K0-stable
  const Lattice C = k0_closure(M, embed(seed, M.v1));
  CHECK(k0_closure(M, C).equal(C));
}

TEST_CASE("a point violating the criterion never stabilizes") {
  const DiagramModel M = principal_series(1, 1, 0, -3);
  ZigZagOptions opt;
  opt.max_iter = 14;
  opt.min_iter = 10;
  const ZigZagTrace tr = run_zigzag(M, seed_lattice(M), opt);
  CHECK(tr.verdict.kind == VerdictKind::DivergedPeriodic);
  CHECK(tr.verdict.j < 0);
  REQUIRE(tr.records.size() >= 11);
  for (size_t i = 1; i < tr.records.size(); ++i) {
    REQUIRE(tr.records[i].index.has_value());
    CHECK(*tr.records[i].index > *tr.records[i - 1].index);
  }
  CHECK(tr.monotone);
}

TEST_CASE("steps are monotone") {
  const DiagramModel M = principal_series(2, 2, 1, -4);
  Lattice L = seed_lattice(M);
  for (int i = 0; i < 3; ++i) {
    const Lattice N = zigzag_step(M, L);
    CHECK(N.contains(L));
    L = N;
  }
}

TEST_CASE("Speh (x) Sym^1 seed") {
  const DiagramModel M = speh_sym1();
  CHECK(sym1_seed(M).profile() == std::vector<int64_t>{-1, -3, 0, -2});
  const Lattice seed = seed_lattice(M);
  CHECK(seed.profile() == std::vector<int64_t>{-1, -3, 0, -2, -1, -3, 0, -2, -1, -3, 0, -2, -5, -7, -4, -6});
  CHECK(seed.contains(seed.apply(M.t)));
}

TEST_CASE("options are validated") {
  const DiagramModel M = principal_series(1, 1, 0, 0);
  ZigZagOptions opt;
  opt.max_iter = 0;
  CHECK_THROWS_AS((void)run_zigzag(M, seed_lattice(M), opt), std::invalid_argument);
}
