#include "gl2d/local_field.hpp"

#include <algorithm>
#include <sstream>

namespace gl2d {

namespace {

using Arr = std::array<int64_t, kMaxDigitSlots>;
using i128 = __int128;

constexpr int64_t kModulusBits = 56;

int64_t mulmod(int64_t a, int64_t b, int64_t m) { return static_cast<int64_t>((static_cast<i128>(a) * b) % m); }

int64_t vp_int(int64_t x, int64_t p) {
  if (x == 0) return kInfVal;
  int64_t v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

int64_t ceil_div(int64_t a, int64_t b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

// ---------------------------------------------------------------- LocalField

void LocalField::validate(const LocalFieldSpec& s) {
  if (!is_prime(s.p)) throw ConfigError("p = " + std::to_string(s.p) + " is not prime");
  if (s.u < 1 || s.e < 1) throw ConfigError("degrees u and e must be positive");
  if (s.eis_const != 1 && s.eis_const != -1) throw ConfigError("Eisenstein constant must be +1 or -1");
  if (s.default_precision < 1) throw ConfigError("precision must be positive");
  if (s.e * s.u > kMaxDigitSlots) throw ConfigError("e*u exceeds the supported bound of 16");
  if (ipow(s.p, s.u) > (1 << 16)) throw ConfigError("residue field of E too large");
}

int LocalField::precision_ceiling(const LocalFieldSpec& s) {
  int64_t m = 0, acc = 1;
  while (static_cast<i128>(acc) * s.p < (static_cast<i128>(1) << kModulusBits)) {
    acc *= s.p;
    ++m;
  }
  // one spare p-digit is kept for the division steps in normalization
  return static_cast<int>(s.e * (m - 1));
}

std::shared_ptr<const LocalField> LocalField::make(const LocalFieldSpec& spec) {
  return make(spec, spec.default_precision);
}

std::shared_ptr<const LocalField> LocalField::make(const LocalFieldSpec& spec, int precision) {
  validate(spec);
  if (precision < 1) throw ConfigError("precision must be positive");
  if (precision > precision_ceiling(spec))
    throw PrecisionError("requested precision " + std::to_string(precision) + " exceeds ceiling " +
                         std::to_string(precision_ceiling(spec)));
  auto F = std::make_shared<LocalField>();
  F->spec_ = spec;
  F->N_ = precision;
  F->M_ = static_cast<int>(ceil_div(precision, spec.e)) + 1;
  F->ppow_.assign(F->M_ + 1, 1);
  for (int i = 1; i <= F->M_; ++i) F->ppow_[i] = F->ppow_[i - 1] * spec.p;
  F->pm_ = F->ppow_[F->M_];
  F->q_ = ipow(spec.p, spec.u);
  F->res_ = FiniteField::make(spec.p, spec.u);
  F->G_ = F->res_->ambient_poly();

  // Teichmueller generator: iterate y -> y^q starting from any lift of the generator.
  const int eu = spec.e * spec.u;
  Arr y{};
  {
    FiniteField::El g = F->res_->gen();
    for (int j = 0; j < spec.u; ++j) {
      y[j] = g % spec.p;
      g /= static_cast<FiniteField::El>(spec.p);
    }
  }
  for (int it = 0; it <= F->M_; ++it) {
    Arr acc{};
    acc[0] = 1;
    Arr base = y;
    int64_t k = F->q_;
    while (k > 0) {
      Arr t{};
      if (k & 1) {
        F->mul_arrays(acc.data(), base.data(), t.data());
        acc = t;
      }
      k >>= 1;
      if (k) {
        F->mul_arrays(base.data(), base.data(), t.data());
        base = t;
      }
    }
    y = acc;
  }
  F->zeta_units_.resize(F->q_ - 1);
  Arr cur{};
  cur[0] = 1;
  for (int64_t k = 0; k < F->q_ - 1; ++k) {
    Arr t = cur;
    F->truncate(t.data(), F->N_);
    F->zeta_units_[k] = t;
    Arr nxt{};
    F->mul_arrays(cur.data(), y.data(), nxt.data());
    cur = nxt;
  }
  (void)eu;
  return F;
}

void LocalField::truncate(int64_t* a, int64_t rel) const {
  const int e = spec_.e, u = spec_.u;
  for (int i = 0; i < e; ++i) {
    int64_t t = rel > i ? ceil_div(rel - i, e) : 0;
    if (t > M_) t = M_;
    const int64_t mod = ppow_[t];
    for (int j = 0; j < u; ++j) a[i * u + j] = mod == 1 ? 0 : a[i * u + j] % mod;
  }
}

void LocalField::mul_arrays(const int64_t* a, const int64_t* b, int64_t* out) const {
  const int e = spec_.e, u = spec_.u;
  const int E2 = 2 * e - 1, U2 = 2 * u - 1;
  i128 acc[2 * kMaxDigitSlots][2 * kMaxDigitSlots];
  for (int i = 0; i < E2; ++i)
    for (int j = 0; j < U2; ++j) acc[i][j] = 0;
  for (int i = 0; i < e; ++i)
    for (int a1 = 0; a1 < u; ++a1) {
      const int64_t x = a[i * u + a1];
      if (x == 0) continue;
      for (int k = 0; k < e; ++k)
        for (int b1 = 0; b1 < u; ++b1) {
          const int64_t y = b[k * u + b1];
          if (y) acc[i + k][a1 + b1] += static_cast<i128>(x) * y;
        }
    }
  int64_t red[2 * kMaxDigitSlots][2 * kMaxDigitSlots];
  for (int i = 0; i < E2; ++i)
    for (int j = 0; j < U2; ++j) red[i][j] = static_cast<int64_t>(acc[i][j] % pm_);
  // fold pi^(e+i) = c p pi^i
  const int64_t cp = mod_floor(spec_.eis_const * spec_.p, pm_);
  for (int i = E2 - 1; i >= e; --i)
    for (int j = 0; j < U2; ++j)
      if (red[i][j]) red[i - e][j] = (red[i - e][j] + mulmod(red[i][j], cp, pm_)) % pm_;
  // reduce x-degree modulo the monic G
  for (int i = 0; i < e; ++i) {
    for (int d = U2 - 1; d >= u; --d) {
      const int64_t top = red[i][d];
      if (!top) continue;
      red[i][d] = 0;
      for (int j = 0; j < u; ++j)
        if (G_[j]) red[i][d - u + j] = mod_floor(red[i][d - u + j] - mulmod(top, G_[j], pm_), pm_);
    }
    for (int j = 0; j < u; ++j) out[i * u + j] = red[i][j];
  }
}

void LocalField::shift_array(int64_t* a, int64_t s) const {
  if (s <= 0) return;
  const int e = spec_.e, u = spec_.u;
  const int64_t m = s / e;
  const int r = static_cast<int>(s % e);
  if (m >= M_) {
    for (int i = 0; i < e * u; ++i) a[i] = 0;
    return;
  }
  Arr b{};
  const int64_t cp = mod_floor(spec_.eis_const * spec_.p, pm_);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < u; ++j) {
      const int64_t x = a[i * u + j];
      if (!x) continue;
      if (i + r < e)
        b[(i + r) * u + j] = x;
      else
        b[(i + r - e) * u + j] = mulmod(x, cp, pm_);
    }
  int64_t f = mulmod(ppow_[m], 1, pm_);
  if (spec_.eis_const == -1 && (m & 1)) f = mod_floor(-f, pm_);
  for (int i = 0; i < e * u; ++i) a[i] = mulmod(b[i], f, pm_);
}

Element LocalField::normalize(Arr& a, int64_t base, int64_t abs_prec, bool exact) const {
  const int e = spec_.e, u = spec_.u;
  Element out;
  out.f_ = this;
  abs_prec = std::min(abs_prec, base + static_cast<int64_t>(e) * M_);
  if (abs_prec <= base) {
    out.kind_ = Element::Kind::Approx;
    out.val_ = abs_prec;
    out.exact_ = false;
    return out;
  }
  truncate(a.data(), abs_prec - base);
  int64_t w = kInfVal;
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < u; ++j) {
      const int64_t v = vp_int(a[i * u + j], spec_.p);
      if (v < kInfVal) w = std::min(w, v * e + i);
    }
  if (w >= abs_prec - base) {
    out.kind_ = Element::Kind::Approx;
    out.val_ = abs_prec;
    out.exact_ = false;
    return out;
  }
  const int64_t m = w / e;
  const int r = static_cast<int>(w % e);
  Arr b{};
  const int c = spec_.eis_const;
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < u; ++j) {
      int64_t x = a[i * u + j];
      if (!x) continue;
      if (i >= r) {
        b[(i - r) * u + j] = x;
      } else {
        x /= spec_.p;
        if (c == -1) x = mod_floor(-x, pm_);
        b[(i - r + e) * u + j] = x;
      }
    }
  if (m > 0) {
    const int64_t d = ppow_[m];
    const bool flip = (c == -1) && (m & 1);
    for (int i = 0; i < e * u; ++i) {
      int64_t x = b[i] / d;
      if (flip) x = mod_floor(-x, pm_);
      b[i] = x;
    }
  }
  const int64_t v = base + w;
  const int64_t rel = std::min<int64_t>(abs_prec - v, N_);
  truncate(b.data(), rel);
  out.kind_ = Element::Kind::Value;
  out.val_ = v;
  out.rel_ = static_cast<int32_t>(rel);
  out.exact_ = exact;
  out.d_ = b;
  return out;
}

Element LocalField::zero() const {
  Element z;
  z.f_ = this;
  return z;
}

Element LocalField::pi_pow(int64_t k) const {
  Element x;
  x.f_ = this;
  x.kind_ = Element::Kind::Value;
  x.val_ = k;
  x.rel_ = N_;
  x.exact_ = true;
  x.d_[0] = 1;
  return x;
}

Element LocalField::one() const { return pi_pow(0); }

Element LocalField::from_int(int64_t n) const {
  if (n == 0) return zero();
  const int64_t m = vp_int(n < 0 ? -n : n, spec_.p);
  int64_t unit = n;
  for (int64_t i = 0; i < m; ++i) unit /= spec_.p;
  Arr a{};
  a[0] = mod_floor(unit, pm_);
  if (spec_.eis_const == -1 && (m & 1)) a[0] = mod_floor(-a[0], pm_);
  Element x = normalize(a, m * spec_.e, m * spec_.e + N_, true);
  return x;
}

Element LocalField::prime() const { return from_int(spec_.p); }

Element LocalField::zeta_pow(int64_t k) const {
  Element x = one();
  x.d_ = zeta_units_[mod_floor(k, q_ - 1)];
  return x;
}

Element LocalField::teichmuller(FiniteField::El lambda) const {
  if (lambda == 0) return zero();
  return zeta_pow(res_->ambient_log(lambda));
}

FiniteField::El LocalField::reduce_unit(const Element& x) const {
  if (x.kind_ != Element::Kind::Value || x.val_ != 0) throw std::domain_error("reduce_unit needs a unit");
  FiniteField::El code = 0, mult = 1;
  for (int j = 0; j < spec_.u; ++j) {
    code += static_cast<FiniteField::El>((x.d_[j] % spec_.p) * mult);
    mult *= static_cast<FiniteField::El>(spec_.p);
  }
  return code;
}

int64_t LocalField::root_of_unity_exponent(const Element& x) const {
  if (x.kind_ != Element::Kind::Value) return -1;
  Element u = x.unit_part();
  const FiniteField::El r = reduce_unit(u);
  const int64_t k = res_->ambient_log(r);
  Arr z = zeta_units_[k];
  truncate(z.data(), u.rel_);
  return z == u.d_ ? k : -1;
}

// ---------------------------------------------------------------- Element

int64_t Element::valuation() const {
  switch (kind_) {
    case Kind::Zero:
      return kInfVal;
    case Kind::Approx:
      throw PrecisionError("valuation of an imprecise element O(pi^" + std::to_string(val_) + ")");
    default:
      return val_;
  }
}

int64_t Element::valuation_lower_bound() const { return kind_ == Kind::Zero ? kInfVal : val_; }

int64_t Element::abs_precision() const {
  switch (kind_) {
    case Kind::Zero:
      return kInfVal;
    case Kind::Approx:
      return val_;
    default:
      return val_ + rel_;
  }
}

bool Element::is_integral() const {
  switch (kind_) {
    case Kind::Zero:
      return true;
    case Kind::Approx:
      if (val_ >= 0) return true;
      throw PrecisionError("integrality of an imprecise element O(pi^" + std::to_string(val_) + ")");
    default:
      return val_ >= 0;
  }
}

Element Element::operator+(const Element& o) const {
  if (kind_ == Kind::Zero) return o;
  if (o.kind_ == Kind::Zero) return *this;
  const LocalField* F = f_ ? f_ : o.f_;
  const int64_t A = std::min(abs_precision(), o.abs_precision());
  if (kind_ == Kind::Approx || o.kind_ == Kind::Approx) {
    const Element* v = kind_ == Kind::Value ? this : (o.kind_ == Kind::Value ? &o : nullptr);
    if (v && v->val_ < A) {
      Arr a = v->d_;
      return F->normalize(a, v->val_, A, false);
    }
    Element z;
    z.f_ = F;
    z.kind_ = Kind::Approx;
    z.val_ = A;
    z.exact_ = false;
    return z;
  }
  const int64_t base = std::min(val_, o.val_);
  Arr a = d_, b = o.d_;
  F->shift_array(a.data(), val_ - base);
  F->shift_array(b.data(), o.val_ - base);
  const int n = F->e() * F->u();
  const int64_t pm = F->pm();
  for (int i = 0; i < n; ++i) {
    a[i] += b[i];
    if (a[i] >= pm) a[i] -= pm;
  }
  const bool ex = exact_ && o.exact_;
  Element r = F->normalize(a, base, A, ex);
  // sums of exact values that vanish to full precision are taken to be zero
  if (r.kind_ == Kind::Approx && ex) return F->zero();
  return r;
}

Element Element::operator-() const {
  if (kind_ != Kind::Value) return *this;
  Element r = *this;
  const int n = f_->e() * f_->u();
  for (int i = 0; i < n; ++i) r.d_[i] = r.d_[i] ? f_->pm() - r.d_[i] : 0;
  f_->truncate(r.d_.data(), r.rel_);
  // -x is again a monomial when x is
  return r;
}

Element Element::operator-(const Element& o) const {
  if (this == &o) return f_ ? f_->zero() : Element{};
  return *this + (-o);
}

Element Element::operator*(const Element& o) const {
  if (kind_ == Kind::Zero) return *this;
  if (o.kind_ == Kind::Zero) return o;
  const LocalField* F = f_ ? f_ : o.f_;
  if (kind_ == Kind::Approx || o.kind_ == Kind::Approx) {
    Element z;
    z.f_ = F;
    z.kind_ = Kind::Approx;
    z.exact_ = false;
    const int64_t lo1 = kind_ == Kind::Approx ? val_ : val_;
    const int64_t lo2 = o.kind_ == Kind::Approx ? o.val_ : o.val_;
    // Approx(K) * Value(v, rel r) = Approx(K + v); both approx: K1 + K2
    z.val_ = lo1 + lo2;
    return z;
  }
  Element r;
  r.f_ = F;
  r.kind_ = Kind::Value;
  r.val_ = val_ + o.val_;
  r.rel_ = std::min(rel_, o.rel_);
  r.exact_ = exact_ && o.exact_;
  F->mul_arrays(d_.data(), o.d_.data(), r.d_.data());
  F->truncate(r.d_.data(), r.rel_);
  return r;
}

Element Element::inverse() const {
  if (kind_ == Kind::Zero) throw std::domain_error("division by exact zero");
  if (kind_ == Kind::Approx) throw PrecisionError("division by an imprecise element");
  const LocalField* F = f_;
  const int n = F->e() * F->u();
  const int64_t p = F->p(), pm = F->pm();
  const auto& res = F->residue_field();
  // residue inverse as starting point
  FiniteField::El r = 0, mult = 1;
  for (int j = 0; j < F->u(); ++j) {
    r += static_cast<FiniteField::El>((d_[j] % p) * mult);
    mult *= static_cast<FiniteField::El>(p);
  }
  FiniteField::El ri = res->inv(r);
  Arr y{};
  for (int j = 0; j < F->u(); ++j) {
    y[j] = ri % p;
    ri /= static_cast<FiniteField::El>(p);
  }
  int digits = 1;
  while (digits < F->precision() + 1) {
    Arr xy{}, t{};
    F->mul_arrays(d_.data(), y.data(), xy.data());
    for (int i = 0; i < n; ++i) xy[i] = xy[i] ? pm - xy[i] : 0;
    xy[0] = (xy[0] + 2) % pm;
    F->mul_arrays(y.data(), xy.data(), t.data());
    y = t;
    digits *= 2;
  }
  Element out;
  out.f_ = F;
  out.kind_ = Kind::Value;
  out.val_ = -val_;
  out.rel_ = rel_;
  out.exact_ = exact_;
  out.d_ = y;
  F->truncate(out.d_.data(), out.rel_);
  return out;
}

Element Element::operator/(const Element& o) const { return *this * o.inverse(); }

Element Element::pow(int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  const LocalField* F = f_;
  if (kind_ == Kind::Zero) {
    if (k == 0 && F) return F->one();
    return *this;
  }
  Element acc = F->one(), b = *this;
  while (k > 0) {
    if (k & 1) acc = acc * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return acc;
}

Element Element::shift(int64_t k) const {
  if (kind_ == Kind::Zero) return *this;
  Element r = *this;
  r.val_ += k;
  return r;
}

Element Element::unit_part() const {
  if (kind_ != Kind::Value) {
    if (kind_ == Kind::Zero) throw std::domain_error("unit part of zero");
    throw PrecisionError("unit part of an imprecise element");
  }
  return shift(-val_);
}

Element Element::as_exact() const {
  if (kind_ != Kind::Value) return *this;
  Element r = *this;
  r.rel_ = f_->precision();
  r.exact_ = true;
  return r;
}

Element Element::with_precision(int n) const {
  if (kind_ != Kind::Value || n >= rel_) return *this;
  Element r = *this;
  r.rel_ = n;
  r.exact_ = false;
  f_->truncate(r.d_.data(), n);
  return r;
}

std::pair<Element, Element> Element::split_fractional() const {
  if (kind_ != Kind::Value || val_ >= 0) return {f_ ? f_->zero() : Element{}, *this};
  const int64_t A = abs_precision();
  if (A <= 0) return {*this, f_->zero()};
  const LocalField* F = f_;
  const int e = F->e(), u = F->u();
  Arr frac{}, integ{};
  for (int i = 0; i < e; ++i) {
    int64_t t = -val_ - i > 0 ? ceil_div(-val_ - i, e) : 0;
    if (t > F->pdigits()) t = F->pdigits();
    int64_t mod = 1;
    for (int64_t s = 0; s < t; ++s) mod *= F->p();
    for (int j = 0; j < u; ++j) {
      const int64_t x = d_[i * u + j];
      frac[i * u + j] = x % mod;
      integ[i * u + j] = x - x % mod;
    }
  }
  Element fr = F->normalize(frac, val_, A, false);
  Element in = F->normalize(integ, val_, A, false);
  return {fr, in};
}

bool Element::equals(const Element& o) const {
  Element d = *this - o;
  if (d.kind_ == Kind::Zero) return true;
  if (d.kind_ == Kind::Value) return false;
  throw PrecisionError("equality undecidable at current precision");
}

std::string Element::digit_string() const {
  if (kind_ == Kind::Zero) return "0";
  if (kind_ == Kind::Approx) return "O(pi^" + std::to_string(val_) + ")";
  const LocalField* F = f_;
  const int e = F->e(), u = F->u();
  const int64_t p = F->p();
  std::ostringstream os;
  os << "v" << val_ << ":";
  // digit at position k = i + e m is coordinate-wise the m-th p-adic digit of a_i
  for (int k = 0; k < rel_; ++k) {
    const int i = k % e;
    const int m = k / e;
    if (k) os << ".";
    for (int j = 0; j < u; ++j) {
      int64_t x = d_[i * u + j];
      for (int s = 0; s < m; ++s) x /= p;
      os << (x % p);
    }
  }
  return os.str();
}

std::string Element::to_string() const {
  if (kind_ == Kind::Zero) return "0";
  if (kind_ == Kind::Approx) return "O(pi^" + std::to_string(val_) + ")";
  std::ostringstream os;
  os << "pi^" << val_ << "*[" << digit_string() << "]+O(pi^" << abs_precision() << ")";
  return os.str();
}

}  // namespace gl2d
