#include "gl2d/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace gl2d {

namespace {

using Poly = std::vector<int64_t>;

// exact division of integer polynomials by a monic divisor
Poly poly_div_exact(Poly a, const Poly& b) {
  const size_t db = b.size() - 1;
  if (a.size() < b.size()) throw std::logic_error("poly division degree");
  Poly q(a.size() - db, 0);
  for (size_t i = a.size(); i-- > db;) {
    int64_t c = a[i];
    q[i - db] = c;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw std::logic_error("inexact cyclotomic division");
  return q;
}

Poly cyclotomic_poly(int64_t n) {
  Poly a(n + 1, 0);
  a[0] = -1;
  a[n] = 1;
  for (int64_t d = 1; d < n; ++d)
    if (n % d == 0) a = poly_div_exact(a, cyclotomic_poly(d));
  return a;
}

}  // namespace

CyclotomicRing::CyclotomicRing(int64_t M) : M_(M) {
  if (M < 1) throw ConfigError("cyclotomic order must be positive");
  phi_ = cyclotomic_poly(M);
}

std::vector<int64_t> CyclotomicRing::reduce(std::vector<int64_t> a) const {
  const size_t d = phi_.size() - 1;
  for (size_t i = a.size(); i-- > d;) {
    int64_t c = a[i];
    if (c == 0) continue;
    for (size_t j = 0; j <= d; ++j) a[i - d + j] -= c * phi_[j];
  }
  a.resize(d, 0);
  return a;
}

CyclotomicScalar::CyclotomicScalar(std::shared_ptr<const CyclotomicRing> ring, int64_t n)
    : ring_(std::move(ring)) {
  c_.assign(ring_->degree(), 0);
  if (!c_.empty()) c_[0] = n;
}

CyclotomicScalar CyclotomicScalar::zeta_pow(std::shared_ptr<const CyclotomicRing> ring, int64_t k) {
  CyclotomicScalar r(ring, 0);
  std::vector<int64_t> a(ring->order(), 0);
  a[mod_floor(k, ring->order())] = 1;
  r.c_ = ring->reduce(std::move(a));
  return r;
}

CyclotomicScalar CyclotomicScalar::operator+(const CyclotomicScalar& o) const {
  CyclotomicScalar r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

CyclotomicScalar CyclotomicScalar::operator-(const CyclotomicScalar& o) const {
  CyclotomicScalar r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

CyclotomicScalar CyclotomicScalar::operator-() const {
  CyclotomicScalar r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CyclotomicScalar CyclotomicScalar::operator*(const CyclotomicScalar& o) const {
  std::vector<int64_t> a(c_.size() + o.c_.size(), 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) a[i + j] += c_[i] * o.c_[j];
  }
  CyclotomicScalar r = *this;
  r.c_ = ring_->reduce(std::move(a));
  return r;
}

bool CyclotomicScalar::operator==(const CyclotomicScalar& o) const { return c_ == o.c_; }

bool CyclotomicScalar::is_zero() const {
  for (auto x : c_)
    if (x != 0) return false;
  return true;
}

std::string CyclotomicScalar::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ")";
  return os.str();
}

FourierToolkit::FourierToolkit(FiniteFieldPtr field)
    : field_(std::move(field)),
      ring_(std::make_shared<CyclotomicRing>(field_->p() * (field_->size() - 1))) {}

CyclotomicScalar FourierToolkit::eta(FiniteField::El x) const {
  return CyclotomicScalar::zeta_pow(ring_, (field_->size() - 1) * field_->trace(x));
}

CyclotomicScalar FourierToolkit::character_value(const MultChar& chi, FiniteField::El x) const {
  if (x == 0) return scalar(0);
  return CyclotomicScalar::zeta_pow(ring_, field_->p() * chi.exponent_at(x));
}

FourierToolkit::Func FourierToolkit::zero_func() const { return Func(size(), scalar(0)); }

FourierToolkit::Func FourierToolkit::delta0() const {
  Func f = zero_func();
  f[field_->index_of(0)] = scalar(1);
  return f;
}

FourierToolkit::Func FourierToolkit::constant(int64_t n) const { return Func(size(), scalar(n)); }

FourierToolkit::Func FourierToolkit::character(const MultChar& chi) const {
  Func f = zero_func();
  for (auto x : field_->elements()) f[field_->index_of(x)] = character_value(chi, x);
  return f;
}

FourierToolkit::Func FourierToolkit::fourier(const Func& f) const {
  const auto& els = field_->elements();
  Func out = zero_func();
  for (auto x : els) {
    CyclotomicScalar acc = scalar(0);
    for (auto y : els) {
      const auto& fy = f[field_->index_of(y)];
      if (fy.is_zero()) continue;
      acc += eta(field_->mul(x, y)) * fy;
    }
    out[field_->index_of(x)] = acc;
  }
  return out;
}

FourierToolkit::Func FourierToolkit::convolve(const Func& f, const Func& g) const {
  const auto& els = field_->elements();
  Func out = zero_func();
  for (auto y : els) {
    const auto& fy = f[field_->index_of(y)];
    if (fy.is_zero()) continue;
    for (auto z : els) {
      const auto& gz = g[field_->index_of(z)];
      if (gz.is_zero()) continue;
      out[field_->index_of(field_->add(y, z))] += fy * gz;
    }
  }
  return out;
}

FourierToolkit::Func FourierToolkit::pointwise(const Func& f, const Func& g) const {
  Func out = zero_func();
  for (size_t i = 0; i < f.size(); ++i) out[i] = f[i] * g[i];
  return out;
}

FourierToolkit::Func FourierToolkit::scale(const Func& f, const CyclotomicScalar& c) const {
  Func out = f;
  for (auto& v : out) v = v * c;
  return out;
}

FourierToolkit::Func FourierToolkit::add(const Func& f, const Func& g) const {
  Func out = f;
  for (size_t i = 0; i < f.size(); ++i) out[i] += g[i];
  return out;
}

FourierToolkit::Func FourierToolkit::sub(const Func& f, const Func& g) const {
  Func out = f;
  for (size_t i = 0; i < f.size(); ++i) out[i] = out[i] - g[i];
  return out;
}

FourierToolkit::Func FourierToolkit::reflect(const Func& f) const {
  Func out = zero_func();
  for (auto x : field_->elements()) out[field_->index_of(field_->neg(x))] = f[field_->index_of(x)];
  return out;
}

}  // namespace gl2d
