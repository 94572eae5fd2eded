#pragma once

#include <string>
#include <vector>

#include "gl2d/matrix.hpp"

namespace gl2d {

class ContainmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite E-dimensional subspace given by independent rows.
struct Subspace {
  int ambient = 0;
  std::vector<Vec> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

// Finitely generated O-submodule of E^n, kept as rows in echelon form: row i has its
// pivot at column pivot_cols[i] with entry exactly pi^pivot_vals[i], zeros before it,
// and entries in later pivot columns reduced modulo the pivot there.
class Lattice {
 public:
  Lattice() = default;
  static Lattice from_generators(const LocalField* F, int n, const std::vector<Vec>& gens);
  static Lattice standard(const LocalField* F, int n);
  // diagonal lattice with pi^vals[i] on e_i
  static Lattice diagonal(const LocalField* F, const std::vector<int64_t>& vals);

  const LocalField* field() const { return f_; }
  int ambient_dim() const { return n_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool full_rank() const { return rank() == n_; }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<int>& pivot_cols() const { return piv_col_; }
  const std::vector<int64_t>& pivot_vals() const { return piv_val_; }
  // pivot valuation per ambient column; columns without pivot are omitted
  std::vector<int64_t> profile() const { return piv_val_; }
  int64_t pivot_sum() const;

  Lattice sum(const Lattice& o) const;
  Lattice scale(int64_t k) const;
  Lattice dual() const;
  Lattice intersect(const Lattice& o) const;
  // rows r -> M r (matrices act on column vectors)
  Lattice apply(const Matrix& M) const;
  Lattice tensor(const Lattice& o) const;

  bool member(const Vec& v) const;
  bool contains(const Lattice& o) const;
  bool equal(const Lattice& o) const;
  // v(det) of this over the sublattice: sub must be contained in *this
  int64_t index_valuation_of(const Lattice& sub) const;
  // coefficients c with c . basis = v; throws ContainmentError when v is not in the E-span
  Vec coordinates(const Vec& v) const;
  Matrix basis_matrix() const;

  // pivots, valuations and digit strings; stable across runs
  std::string dump() const;

 private:
  const LocalField* f_ = nullptr;
  int n_ = 0;
  std::vector<Vec> rows_;
  std::vector<int> piv_col_;
  std::vector<int64_t> piv_val_;
};

// {c in E^k : c . U in L}, a lattice in the coordinates of U's basis.
Lattice meet_subspace(const Lattice& L, const Subspace& U);
// embed a lattice given in U-coordinates into the ambient space
Lattice embed(const Lattice& Lu, const Subspace& U);

}  // namespace gl2d
