#pragma once

#include <string>
#include <vector>

#include "gl2d/local_field.hpp"

namespace gl2d {

using Vec = std::vector<Element>;

Vec zero_vec(const LocalField& F, int n);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Element& c);
Vec vec_shift(const Vec& a, int64_t k);
// minimum valuation lower bound over entries
int64_t vec_min_valuation(const Vec& v);

// Dense row-major matrix over E. Matrices act on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const LocalField* F, int rows, int cols);
  static Matrix identity(const LocalField* F, int n);
  static Matrix from_rows(const LocalField* F, const std::vector<Vec>& rows, int cols);

  int rows() const { return r_; }
  int cols() const { return c_; }
  const LocalField* field() const { return f_; }
  Element& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Element& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
  Vec row(int i) const;
  Vec col(int j) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Vec apply(const Vec& v) const;  // M v
  Matrix transpose() const;
  Matrix scaled(const Element& c) const;
  Matrix kron(const Matrix& o) const;
  Matrix inverse() const;
  Matrix pow(int64_t k) const;

  // entrywise agreement to the available precision
  bool agrees(const Matrix& o) const;
  // o = c * this for some unit c; the unit is returned through *c when given
  bool equal_up_to_unit(const Matrix& o, Element* c = nullptr) const;
  bool is_exact() const;
  std::string dump() const;

 private:
  const LocalField* f_ = nullptr;
  int r_ = 0, c_ = 0;
  std::vector<Element> a_;
};

Matrix block_diag(const std::vector<Matrix>& blocks);

}  // namespace gl2d
