#include "gl2d/matrix.hpp"

#include <sstream>

namespace gl2d {

Vec zero_vec(const LocalField& F, int n) { return Vec(n, F.zero()); }

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[i].is_zero() ? a[i] : a[i] - b[i];
  return r;
}

Vec vec_scale(const Vec& a, const Element& c) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].is_zero() ? a[i] : a[i] * c;
  return r;
}

Vec vec_shift(const Vec& a, int64_t k) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].shift(k);
  return r;
}

int64_t vec_min_valuation(const Vec& v) {
  int64_t m = kInfVal;
  for (const auto& x : v) m = std::min(m, x.valuation_lower_bound());
  return m;
}

Matrix::Matrix(const LocalField* F, int rows, int cols) : f_(F), r_(rows), c_(cols) {
  a_.assign(static_cast<size_t>(rows) * cols, F->zero());
}

Matrix Matrix::identity(const LocalField* F, int n) {
  Matrix m(F, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = F->one();
  return m;
}

Matrix Matrix::from_rows(const LocalField* F, const std::vector<Vec>& rows, int cols) {
  Matrix m(F, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.r_; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

Vec Matrix::row(int i) const { return Vec(a_.begin() + static_cast<size_t>(i) * c_, a_.begin() + static_cast<size_t>(i + 1) * c_); }

Vec Matrix::col(int j) const {
  Vec v(r_);
  for (int i = 0; i < r_; ++i) v[i] = at(i, j);
  return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix m(f_, r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Element& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j) {
        const Element& y = o.at(k, j);
        if (y.is_zero()) continue;
        m.at(i, j) += x * y;
      }
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  Vec out(r_, f_->zero());
  for (int k = 0; k < c_; ++k) {
    if (v[k].is_zero()) continue;
    for (int i = 0; i < r_; ++i) {
      const Element& x = at(i, k);
      if (!x.is_zero()) out[i] += x * v[k];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix m(f_, c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::scaled(const Element& c) const {
  Matrix m = *this;
  for (auto& x : m.a_)
    if (!x.is_zero()) x = x * c;
  return m;
}

Matrix Matrix::kron(const Matrix& o) const {
  Matrix m(f_, r_ * o.r_, c_ * o.c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) {
      const Element& x = at(i, j);
      if (x.is_zero()) continue;
      for (int k = 0; k < o.r_; ++k)
        for (int l = 0; l < o.c_; ++l) {
          const Element& y = o.at(k, l);
          if (!y.is_zero()) m.at(i * o.r_ + k, j * o.c_ + l) = x * y;
        }
    }
  return m;
}

Matrix Matrix::inverse() const {
  if (r_ != c_) throw std::invalid_argument("inverse of a non-square matrix");
  const int n = r_;
  Matrix a = *this, inv = identity(f_, n);
  for (int col = 0; col < n; ++col) {
    // pivot: smallest determined valuation; an imprecise entry that might be smaller is fatal
    int piv = -1;
    int64_t best = kInfVal, approx_floor = kInfVal;
    for (int i = col; i < n; ++i) {
      const Element& x = a.at(i, col);
      if (x.is_zero()) continue;
      if (x.is_approx()) {
        approx_floor = std::min(approx_floor, x.abs_precision());
        continue;
      }
      if (x.valuation() < best) {
        best = x.valuation();
        piv = i;
      }
    }
    if (piv < 0) {
      if (approx_floor < kInfVal) throw PrecisionError("matrix inverse: pivot column lost to precision");
      throw std::domain_error("matrix is singular");
    }
    if (approx_floor <= best) throw PrecisionError("matrix inverse: ambiguous pivot valuation");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    const Element pinv = a.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      if (!a.at(col, j).is_zero()) a.at(col, j) = a.at(col, j) * pinv;
      if (!inv.at(col, j).is_zero()) inv.at(col, j) = inv.at(col, j) * pinv;
    }
    a.at(col, col) = f_->one();
    for (int i = 0; i < n; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      const Element fct = a.at(i, col);
      for (int j = 0; j < n; ++j) {
        if (!a.at(col, j).is_zero()) a.at(i, j) -= fct * a.at(col, j);
        if (!inv.at(col, j).is_zero()) inv.at(i, j) -= fct * inv.at(col, j);
      }
      a.at(i, col) = f_->zero();
    }
  }
  return inv;
}

Matrix Matrix::pow(int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  Matrix acc = identity(f_, r_), b = *this;
  while (k > 0) {
    if (k & 1) acc = acc * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return acc;
}

bool Matrix::agrees(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!a_[i].agrees(o.a_[i])) return false;
  return true;
}

bool Matrix::equal_up_to_unit(const Matrix& o, Element* c) const {
  if (r_ != o.r_ || c_ != o.c_) return false;
  for (size_t i = 0; i < a_.size(); ++i) {
    if (a_[i].is_zero()) continue;
    if (!a_[i].is_value()) return false;
    const Element u = o.a_[i] / a_[i];
    if (u.valuation() != 0) return false;
    if (!scaled(u).agrees(o)) return false;
    if (c) *c = u;
    return true;
  }
  return o.agrees(*this);
}

bool Matrix::is_exact() const {
  for (const auto& x : a_)
    if (!x.exact()) return false;
  return true;
}

std::string Matrix::dump() const {
  std::ostringstream os;
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) os << (j ? " " : "") << at(i, j).digit_string();
    os << "\n";
  }
  return os.str();
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
  int n = 0, m = 0;
  for (const auto& b : blocks) {
    n += b.rows();
    m += b.cols();
  }
  Matrix out(blocks.at(0).field(), n, m);
  int r = 0, c = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) out.at(r + i, c + j) = b.at(i, j);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

}  // namespace gl2d
