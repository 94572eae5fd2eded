#include "doctest.h"
#include "gl2d/rep_models.hpp"
#include "gl2d/selftest.hpp"

using namespace gl2d;

TEST_CASE("residue group cosets") {
  const auto k = FiniteField::make(3, 2);
  for (int sigma : {1, -1}) {
    const ResidueGroup G(k, sigma);
    CHECK(G.num_cosets() == 10);
    for (int i = 0; i < G.num_cosets(); ++i) CHECK(G.coset_of(G.coset_rep(i)) == i);
    // left multiplication by the Borel keeps the coset
    const Res2 b{k->gen(), k->one(), 0, k->one()};
    for (int i = 0; i < G.num_cosets(); ++i) CHECK(G.coset_of(G.mul(b, G.coset_rep(i))) == i);
  }
}

TEST_CASE("tame irreducibles") {
  const auto F = LocalField::make({3, 2, 1, 1, 16});
  const auto k = F->residue_field()->subfield(2);
  TameCharacterData td;
  td.d = 2;
  td.dprime = 2;
  td.theta = MultChar{k, 1};
  td.q = 3;
  td.unif_value = F->pi_pow(1);
  const TameIrrep t = TameIrrep::build(F, td);
  CHECK(t.dim() == 2);
  CHECK(t.pi_d().pow(2).agrees(Matrix::identity(F.get(), 2).scaled(F->pi_pow(1))));
  CHECK(t.central_value().agrees(F->pi_pow(1)));

  td.theta = MultChar{k, 4};  // fixed by Frobenius, so the orbit has size 1
  CHECK_THROWS_AS((void)TameIrrep::build(F, td), ModelError);
  td.dprime = 3;
  CHECK_THROWS_AS((void)TameIrrep::build(F, td), ModelError);
}

TEST_CASE("Speh construction constraints") {
  const auto F = LocalField::make({3, 2, 1, 1, 16});
  SpehParams sp;
  sp.theta = MultChar{F->residue_field()->subfield(2), 1};
  sp.q = 3;
  sp.nu = -2;
  CHECK_THROWS_AS((void)build_speh(F, sp), ModelError);
  sp.nu = -1;
  const DiagramModel M = build_speh(F, sp);
  CHECK(M.dim_v0 == 12);
  CHECK(M.dim_v1 == 4);
  sp.theta = MultChar{F->residue_field()->subfield(2), 4};  // Theta^q = Theta
  CHECK_THROWS_AS((void)build_speh(F, sp), ModelError);
}

TEST_CASE("principal series dimensions") {
  const auto F = LocalField::make({3, 2, 1, 1, 16});
  const auto k = F->residue_field()->subfield(2);
  TameCharacterData td;
  td.d = 2;
  td.dprime = 2;
  td.theta = MultChar{k, 1};
  td.q = 3;
  td.unif_value = F->one();
  const TameIrrep t = TameIrrep::build(F, td);
  const DiagramModel M = build_principal_series(F, t, t);
  CHECK(M.dim_v0 == 40);
  CHECK(M.dim_v1 == 8);
  CHECK(M.generators.size() == 13);
}

TEST_CASE("dimension formulas") {
  const DimReport sp = dimension_formula(SteinbergKind::Sp, 2, 2, 3);
  CHECK(sp.dim_i1 == 4);
  CHECK(sp.dim_k1 == 12);
  const SuiteResult r = dimension_suite();
  std::string msgs;
  for (const auto& f : r.failures) msgs += f + "\n";
  INFO(msgs);
  CHECK(r.passed());
  CHECK_THROWS_AS((void)dimension_measured(SteinbergKind::St, 1, 2, 3), ConfigError);
}

TEST_CASE("relation suite") {
  const SuiteResult r = model_relation_suite();
  std::string msgs;
  for (const auto& f : r.failures) msgs += f + "\n";
  INFO(msgs);
  CHECK(r.cases > 100);
  CHECK(r.passed());
}
