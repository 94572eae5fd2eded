#include "gl2d/lattice.hpp"

#include <sstream>

namespace gl2d {

namespace {

// x / pi^a for a pivot exactly equal to pi^a
Element over_pivot(const Element& x, int64_t a) { return x.shift(-a); }

void axpy_tail(Vec& r, const Element& f, const Vec& p, int from) {
  for (size_t j = from; j < r.size(); ++j)
    if (!p[j].is_zero()) r[j] -= f * p[j];
}

}  // namespace

Lattice Lattice::from_generators(const LocalField* F, int n, const std::vector<Vec>& gens) {
  Lattice L;
  L.f_ = F;
  L.n_ = n;
  std::vector<Vec> work;
  work.reserve(gens.size());
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("generator length mismatch");
    if (!vec_is_zero(g)) work.push_back(g);
  }
  int64_t lost_floor = kInfVal;  // smallest precision of material we could not place

  for (int col = 0; col < n && !work.empty(); ++col) {
    int best = -1;
    int64_t best_val = kInfVal, approx_floor = kInfVal;
    for (size_t i = 0; i < work.size(); ++i) {
      const Element& x = work[i][col];
      if (x.is_zero()) continue;
      if (x.is_approx()) {
        approx_floor = std::min(approx_floor, x.abs_precision());
        continue;
      }
      if (x.valuation() < best_val) {
        best_val = x.valuation();
        best = static_cast<int>(i);
      }
    }
    if (best < 0) {
      lost_floor = std::min(lost_floor, approx_floor);
      continue;
    }
    if (approx_floor <= best_val)
      throw PrecisionError("echelon: pivot valuation undetermined in column " + std::to_string(col));

    Vec prow = std::move(work[best]);
    work[best] = std::move(work.back());
    work.pop_back();
    const int64_t a = best_val;
    const Element ui = prow[col].unit_part().inverse();
    for (int j = col + 1; j < n; ++j)
      if (!prow[j].is_zero()) prow[j] = prow[j] * ui;
    prow[col] = F->pi_pow(a);

    for (size_t i = 0; i < work.size();) {
      Vec& r = work[i];
      if (!r[col].is_zero()) {
        const Element fct = over_pivot(r[col], a);
        axpy_tail(r, fct, prow, col + 1);
        r[col] = F->zero();
      }
      if (vec_is_zero(r)) {
        r = std::move(work.back());
        work.pop_back();
      } else {
        ++i;
      }
    }

    for (auto& b : L.rows_) {
      if (b[col].is_zero()) continue;
      const Element y = over_pivot(b[col], a);
      if (y.abs_precision() < 0) throw PrecisionError("echelon: reduction above pivot lost digits");
      if (y.valuation_lower_bound() >= 0) {
        axpy_tail(b, y, prow, col + 1);
        b[col] = F->zero();
      } else {
        auto [frac, integ] = y.split_fractional();
        if (!integ.is_zero()) axpy_tail(b, integ, prow, col + 1);
        b[col] = frac.shift(a);
      }
    }
    L.rows_.push_back(std::move(prow));
    L.piv_col_.push_back(col);
    L.piv_val_.push_back(a);
  }
  for (const auto& r : work)
    for (const auto& x : r) lost_floor = std::min(lost_floor, x.valuation_lower_bound());

  const int k = L.rank();
  if (k == n) {
    // Every stored digit is certified once perturbations below pi^S_c in column c lie in L.
    Matrix B(F, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Element& x = L.rows_[i][j];
        B.at(i, j) = x.is_approx() ? F->zero() : x.as_exact();
      }
    const Matrix Bi = B.inverse();
    std::vector<int64_t> S(n, -kInfVal);
    int64_t Smax = -kInfVal;
    for (int c = 0; c < n; ++c) {
      for (int j = 0; j < n; ++j) S[c] = std::max(S[c], -Bi.at(c, j).valuation_lower_bound());
      Smax = std::max(Smax, S[c]);
    }
    if (lost_floor < Smax) throw PrecisionError("echelon: residual generators not certified inside the lattice");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Element& x = L.rows_[i][j];
        if (x.exact()) continue;
        if (x.abs_precision() < S[j]) throw PrecisionError("echelon: basis entry not certified");
        x = x.is_approx() ? F->zero() : x.as_exact();
      }
  } else {
    // No determinant to certify against; material far below every pivot is treated as zero.
    int64_t amax = 0;
    for (auto a : L.piv_val_) amax = std::max(amax, a);
    const int64_t floor = amax + F->precision() / 2;
    if (lost_floor < floor) throw PrecisionError("echelon: rank-deficient lattice lost precision");
    std::vector<int64_t> colpiv(n, kInfVal);
    for (int i = 0; i < k; ++i) colpiv[L.piv_col_[i]] = L.piv_val_[i];
    for (auto& r : L.rows_)
      for (int j = 0; j < n; ++j) {
        Element& x = r[j];
        if (x.exact()) continue;
        const int64_t need = colpiv[j] < kInfVal ? colpiv[j] : floor;
        if (x.is_approx()) {
          if (x.abs_precision() < floor) throw PrecisionError("echelon: rank-deficient entry lost precision");
          x = F->zero();
        } else if (x.abs_precision() >= need) {
          x = x.as_exact();
        }
      }
  }
  return L;
}

Lattice Lattice::standard(const LocalField* F, int n) { return diagonal(F, std::vector<int64_t>(n, 0)); }

Lattice Lattice::diagonal(const LocalField* F, const std::vector<int64_t>& vals) {
  Lattice L;
  L.f_ = F;
  L.n_ = static_cast<int>(vals.size());
  for (int i = 0; i < L.n_; ++i) {
    Vec r = zero_vec(*F, L.n_);
    r[i] = F->pi_pow(vals[i]);
    L.rows_.push_back(std::move(r));
    L.piv_col_.push_back(i);
    L.piv_val_.push_back(vals[i]);
  }
  return L;
}

int64_t Lattice::pivot_sum() const {
  int64_t s = 0;
  for (auto a : piv_val_) s += a;
  return s;
}

Lattice Lattice::sum(const Lattice& o) const {
  if (o.n_ != n_) throw std::invalid_argument("lattice sum: ambient dimension mismatch");
  std::vector<Vec> g = rows_;
  g.insert(g.end(), o.rows_.begin(), o.rows_.end());
  return from_generators(f_, n_, g);
}

Lattice Lattice::scale(int64_t k) const {
  Lattice L = *this;
  for (auto& r : L.rows_) r = vec_shift(r, k);
  for (auto& a : L.piv_val_) a += k;
  return L;
}

Matrix Lattice::basis_matrix() const { return Matrix::from_rows(f_, rows_, n_); }

Lattice Lattice::dual() const {
  if (!full_rank()) throw std::invalid_argument("dual of a lattice that is not of full rank");
  const Matrix D = basis_matrix().inverse().transpose();
  std::vector<Vec> g;
  for (int i = 0; i < n_; ++i) g.push_back(D.row(i));
  return from_generators(f_, n_, g);
}

Lattice Lattice::intersect(const Lattice& o) const { return dual().sum(o.dual()).dual(); }

Lattice Lattice::apply(const Matrix& M) const {
  std::vector<Vec> g;
  g.reserve(rows_.size());
  for (const auto& r : rows_) g.push_back(M.apply(r));
  return from_generators(f_, M.rows(), g);
}

Lattice Lattice::tensor(const Lattice& o) const {
  std::vector<Vec> g;
  for (const auto& a : rows_)
    for (const auto& b : o.rows_) {
      Vec v(static_cast<size_t>(n_) * o.n_, f_->zero());
      for (int i = 0; i < n_; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < o.n_; ++j)
          if (!b[j].is_zero()) v[i * o.n_ + j] = a[i] * b[j];
      }
      g.push_back(std::move(v));
    }
  return from_generators(f_, n_ * o.n_, g);
}

Vec Lattice::coordinates(const Vec& v) const {
  Vec r = v, c(rows_.size(), f_->zero());
  for (size_t i = 0; i < rows_.size(); ++i) {
    const int col = piv_col_[i];
    if (r[col].is_zero()) continue;
    c[i] = over_pivot(r[col], piv_val_[i]);
    axpy_tail(r, c[i], rows_[i], col + 1);
    r[col] = f_->zero();
  }
  for (const auto& x : r)
    if (x.is_value()) throw ContainmentError("vector outside the span of the lattice");
  return c;
}

bool Lattice::member(const Vec& v) const {
  Vec c;
  try {
    c = coordinates(v);
  } catch (const ContainmentError&) {
    return false;
  }
  for (const auto& x : c)
    if (!x.is_integral()) return false;
  return true;
}

bool Lattice::contains(const Lattice& o) const {
  for (const auto& r : o.rows_)
    if (!member(r)) return false;
  return true;
}

bool Lattice::equal(const Lattice& o) const {
  if (n_ != o.n_ || rank() != o.rank()) return false;
  return contains(o) && o.contains(*this);
}

int64_t Lattice::index_valuation_of(const Lattice& sub) const {
  if (!contains(sub)) throw ContainmentError("index of a lattice that is not contained");
  if (sub.rank() != rank()) throw ContainmentError("index between lattices of different rank");
  return sub.pivot_sum() - pivot_sum();
}

std::string Lattice::dump() const {
  std::ostringstream os;
  os << "lattice n=" << n_ << " rank=" << rank() << "\n";
  for (size_t i = 0; i < rows_.size(); ++i) {
    os << "  col " << piv_col_[i] << " val " << piv_val_[i] << " :";
    for (const auto& x : rows_[i]) os << " " << x.digit_string();
    os << "\n";
  }
  return os.str();
}

Lattice meet_subspace(const Lattice& L, const Subspace& U) {
  if (!L.full_rank()) throw std::invalid_argument("meet_subspace needs a full-rank lattice");
  const LocalField* F = L.field();
  const int n = L.ambient_dim(), k = U.dim();
  const Matrix Bi = L.basis_matrix().inverse();
  const Matrix C = Matrix::from_rows(F, U.basis, n) * Bi;
  std::vector<Vec> g;
  g.reserve(n);
  for (int j = 0; j < n; ++j) g.push_back(C.col(j));
  return Lattice::from_generators(F, k, g).dual();
}

Lattice embed(const Lattice& Lu, const Subspace& U) {
  const LocalField* F = Lu.field();
  std::vector<Vec> g;
  for (const auto& c : Lu.basis()) {
    Vec v = zero_vec(*F, U.ambient);
    for (int i = 0; i < U.dim(); ++i)
      if (!c[i].is_zero()) v = vec_add(v, vec_scale(U.basis[i], c[i]));
    g.push_back(std::move(v));
  }
  return Lattice::from_generators(F, U.ambient, g);
}

}  // namespace gl2d
