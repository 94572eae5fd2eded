#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gl2d/lattice.hpp"

namespace gl2d {

// ---- residue group GL2(F_{q^d})

struct Res2 {
  FiniteField::El a = 1, b = 0, c = 0, d = 1;
  bool operator==(const Res2&) const = default;
};

class ResidueGroup {
 public:
  // sigma is the lower-left entry of s = (0,1;sigma,0), +1 or -1
  ResidueGroup(FiniteFieldPtr k, int sigma);

  const FiniteFieldPtr& field() const { return k_; }
  int sigma() const { return sigma_; }
  Res2 mul(const Res2& x, const Res2& y) const;
  Res2 inv(const Res2& x) const;
  FiniteField::El det(const Res2& x) const;
  Res2 u(FiniteField::El x) const { return {1, x, 0, 1}; }
  Res2 torus(FiniteField::El a, FiniteField::El d) const { return {a, 0, 0, d}; }
  Res2 s() const;
  // entrywise x -> x^q with q = p^f the size of the base residue field
  Res2 frob(const Res2& x, int64_t q) const;

  // cosets of B\G: 0 is B, 1 + i is B r_lambda with lambda = elements()[i], r_lambda = s^-1 u_lambda
  int num_cosets() const { return static_cast<int>(k_->size()) + 1; }
  Res2 coset_rep(int i) const;
  int coset_of(const Res2& h) const;
  int coset_of_lambda(FiniteField::El lambda) const { return 1 + static_cast<int>(k_->index_of(lambda)); }

 private:
  FiniteFieldPtr k_;
  int sigma_;
};

// Matrix of h on Ind_B^G(W) in the basis g^r_v (index r*n + v), where rho gives the
// action of the upper-triangular b = (a,*;0,delta) on W.
using BorelRep = std::function<Matrix(FiniteField::El a, FiniteField::El delta)>;
Matrix induced_action(const ResidueGroup& G, const LocalField* F, int n, const BorelRep& rho, const Res2& h);

// ---- tame irreducibles of D^x

struct TameCharacterData {
  int d = 1;
  int dprime = 1;
  MultChar theta;      // on F_{q^d}^x
  Element unif_value;  // tau(pi_D)^{d'} = unif_value
  int64_t q = 3;
};

class TameIrrep {
 public:
  static TameIrrep build(const LocalFieldPtr& F, const TameCharacterData& data);
  int dim() const { return data_.dprime; }
  const TameCharacterData& data() const { return data_; }
  const Matrix& pi_d() const { return pi_; }
  Matrix teich(FiniteField::El lambda) const;
  // exponent (in the ambient Teichmueller scale) of the i-th diagonal character
  MultChar diagonal_char(int i) const;
  Element central_value() const;  // omega_tau(pi_F) = c^{d/d'}

 private:
  const LocalField* f_ = nullptr;
  TameCharacterData data_;
  Matrix pi_;
};

// Teichmueller value of a multiplicative character at x (0 at x = 0)
Element char_value(const LocalField& F, const MultChar& chi, FiniteField::El x);

// ---- diagram models

struct NamedMatrix {
  std::string name;
  Matrix m;
};

enum class ModelKind { PrincipalSeries, Speh, SpehSym1, Residue };

struct DiagramModel {
  ModelKind kind = ModelKind::PrincipalSeries;
  LocalFieldPtr field;
  int dim_v0 = 0;
  int dim_v1 = 0;
  std::vector<NamedMatrix> generators;
  Subspace v1;
  Matrix t;  // on V1 coordinates
  Element center;

  // seed data
  int w_dim = 1;         // dimension of W1 (x) W2 (principal series)
  Lattice w_lattice;     // the tau-stable lattice in W
  int64_t nu = 0;        // Speh
  std::optional<Matrix> alg_t;  // algebraic factor of t

  const Matrix& gen(const std::string& name) const;
  bool has_gen(const std::string& name) const;
};

// generator names: torus1, torus2, u:<i> (x = elements()[i]), s, phi
DiagramModel build_principal_series(const LocalFieldPtr& F, const TameIrrep& t1, const TameIrrep& t2);

struct SpehParams {
  MultChar theta;  // on F_{q^2}, Theta^q != Theta
  int64_t q = 3;
  int64_t nu = 0;
  std::optional<Element> epsilon;  // default: solved from the consistency constraint
  std::optional<Element> center;   // default 1
};
DiagramModel build_speh(const LocalFieldPtr& F, const SpehParams& prm);

// Sym^1 E^4 (x) det^{-1/4} for d = 2: generators with the same names as the smooth
// models, K(1) generators "k1:<i><j>:<b>", and "t".
std::vector<NamedMatrix> build_sym1_algebraic(const LocalFieldPtr& F, int64_t q);
DiagramModel tensor_diagram(const DiagramModel& smooth, const std::vector<NamedMatrix>& alg);

// ---- dimension checks

struct DimReport {
  int64_t dim_i1 = 0;
  int64_t dim_k1 = 0;
};
enum class SteinbergKind { St, Sp };
DimReport dimension_formula(SteinbergKind kind, int d, int dprime, int64_t q);
// measured on a model built from residue-group representations
DimReport dimension_measured(SteinbergKind kind, int d, int dprime, int64_t q);

// E-rank of a list of rows
int rank_of(const LocalField* F, int n, const std::vector<Vec>& rows);
// dimension of the common fixed space of the given matrices
int fixed_dim(const LocalField* F, const std::vector<Matrix>& ms);

}  // namespace gl2d
