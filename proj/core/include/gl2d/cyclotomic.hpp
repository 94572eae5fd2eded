#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gl2d/residue.hpp"

namespace gl2d {

// Exact arithmetic in Z[zeta_M]: integer coefficient vectors reduced modulo the
// M-th cyclotomic polynomial, so equality is coefficientwise.
class CyclotomicRing {
 public:
  explicit CyclotomicRing(int64_t M);
  int64_t order() const { return M_; }
  int64_t degree() const { return static_cast<int64_t>(phi_.size()) - 1; }
  const std::vector<int64_t>& phi() const { return phi_; }
  std::vector<int64_t> reduce(std::vector<int64_t> a) const;

 private:
  int64_t M_;
  std::vector<int64_t> phi_;
};

class CyclotomicScalar {
 public:
  CyclotomicScalar() = default;
  CyclotomicScalar(std::shared_ptr<const CyclotomicRing> ring, int64_t n);
  static CyclotomicScalar zeta_pow(std::shared_ptr<const CyclotomicRing> ring, int64_t k);

  CyclotomicScalar operator+(const CyclotomicScalar& o) const;
  CyclotomicScalar operator-(const CyclotomicScalar& o) const;
  CyclotomicScalar operator-() const;
  CyclotomicScalar operator*(const CyclotomicScalar& o) const;
  CyclotomicScalar& operator+=(const CyclotomicScalar& o) { return *this = *this + o; }
  bool operator==(const CyclotomicScalar& o) const;
  bool is_zero() const;
  const std::vector<int64_t>& coeffs() const { return c_; }
  std::string to_string() const;

 private:
  std::shared_ptr<const CyclotomicRing> ring_;
  std::vector<int64_t> c_;
};

// Functions F -> Z[zeta_M] with M = p (|F| - 1), indexed by FiniteField::index_of.
class FourierToolkit {
 public:
  using Func = std::vector<CyclotomicScalar>;

  explicit FourierToolkit(FiniteFieldPtr field);

  const FiniteFieldPtr& field() const { return field_; }
  const std::shared_ptr<const CyclotomicRing>& ring() const { return ring_; }
  int64_t size() const { return field_->size(); }

  CyclotomicScalar scalar(int64_t n) const { return CyclotomicScalar(ring_, n); }
  // eta(x) = zeta_p^Tr(x)
  CyclotomicScalar eta(FiniteField::El x) const;
  // chi(x) for x != 0; chi(0) = 0
  CyclotomicScalar character_value(const MultChar& chi, FiniteField::El x) const;

  Func zero_func() const;
  Func delta0() const;
  Func constant(int64_t n) const;
  Func character(const MultChar& chi) const;

  Func fourier(const Func& f) const;
  Func convolve(const Func& f, const Func& g) const;
  Func pointwise(const Func& f, const Func& g) const;
  Func scale(const Func& f, const CyclotomicScalar& c) const;
  Func add(const Func& f, const Func& g) const;
  Func sub(const Func& f, const Func& g) const;
  // x -> f(-x)
  Func reflect(const Func& f) const;

 private:
  FiniteFieldPtr field_;
  std::shared_ptr<const CyclotomicRing> ring_;
};

}  // namespace gl2d
