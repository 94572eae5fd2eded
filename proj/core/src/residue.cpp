#include "gl2d/residue.hpp"

#include <numeric>
#include <sstream>

namespace gl2d {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int64_t ipow(int64_t b, int64_t e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int64_t mod_floor(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int prime_exponent(int64_t q, int64_t p) {
  int f = 0;
  while (q > 1 && q % p == 0) {
    q /= p;
    ++f;
  }
  return q == 1 ? f : -1;
}

namespace {

using El = FiniteField::El;

std::vector<int64_t> digits_of(El a, int64_t p, int m) {
  std::vector<int64_t> d(m);
  for (int i = 0; i < m; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

El code_of(const std::vector<int64_t>& d, int64_t p) {
  El c = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) c = static_cast<El>(c * p + mod_floor(d[i], p));
  return c;
}

// multiply by x modulo the monic poly
El times_x(El a, int64_t p, const std::vector<int64_t>& poly) {
  const int m = static_cast<int>(poly.size()) - 1;
  auto d = digits_of(a, p, m);
  int64_t top = d[m - 1];
  for (int i = m - 1; i > 0; --i) d[i] = d[i - 1];
  d[0] = 0;
  for (int i = 0; i < m; ++i) d[i] = mod_floor(d[i] - top * poly[i], p);
  return code_of(d, p);
}

}  // namespace

std::shared_ptr<const FiniteField> FiniteField::make(int64_t p, int m) {
  if (!is_prime(p)) throw ConfigError("residue characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw ConfigError("residue degree must be positive");
  const int64_t q = ipow(p, m);
  if (q > (int64_t{1} << 20)) throw ConfigError("residue field too large");

  auto tab = std::make_shared<Tables>();
  tab->p = p;
  tab->m = m;
  tab->q = q;
  // Search monic polynomials in lexicographic order for one with x primitive; such a
  // polynomial is automatically irreducible.
  bool found = false;
  for (int64_t low = 0; low < q && !found; ++low) {
    std::vector<int64_t> poly(m + 1, 0);
    auto d = digits_of(static_cast<El>(low), p, m);
    for (int i = 0; i < m; ++i) poly[i] = d[i];
    poly[m] = 1;
    if (poly[0] == 0) continue;
    std::vector<El> ex(q - 1);
    El cur = 1;
    bool ok = true;
    for (int64_t k = 0; k < q - 1; ++k) {
      ex[k] = cur;
      if (k > 0 && cur == 1) {
        ok = false;
        break;
      }
      cur = (m == 1) ? static_cast<El>(mod_floor(static_cast<int64_t>(cur) * (-poly[0]), p)) : times_x(cur, p, poly);
    }
    if (!ok || cur != 1) continue;
    tab->poly = poly;
    tab->exp = ex;
    tab->log.assign(q, -1);
    for (int64_t k = 0; k < q - 1; ++k) tab->log[ex[k]] = k;
    found = true;
  }
  if (!found) throw ConfigError("no primitive polynomial found");

  auto f = std::make_shared<FiniteField>();
  f->tab_ = tab;
  f->m_ = m;
  f->q_ = q;
  f->gen_ = tab->exp[1 % (q - 1)];
  if (q == 2) f->gen_ = 1;
  f->elements_.push_back(0);
  for (int64_t k = 0; k < q - 1; ++k) f->elements_.push_back(tab->exp[k]);
  f->index_.assign(q, -1);
  for (size_t i = 0; i < f->elements_.size(); ++i) f->index_[f->elements_[i]] = static_cast<int64_t>(i);
  return f;
}

std::shared_ptr<const FiniteField> FiniteField::subfield(int m) const {
  if (m < 1 || tab_->m % m != 0) throw ConfigError("subfield degree must divide the ambient degree");
  auto f = std::make_shared<FiniteField>();
  f->tab_ = tab_;
  f->m_ = m;
  f->q_ = ipow(tab_->p, m);
  const int64_t cof = (tab_->q - 1) / (f->q_ - 1);
  f->gen_ = tab_->exp[cof % (tab_->q - 1)];
  f->elements_.push_back(0);
  for (int64_t k = 0; k < f->q_ - 1; ++k) f->elements_.push_back(tab_->exp[(k * cof) % (tab_->q - 1)]);
  f->index_.assign(tab_->q, -1);
  for (size_t i = 0; i < f->elements_.size(); ++i) f->index_[f->elements_[i]] = static_cast<int64_t>(i);
  return f;
}

El FiniteField::add(El a, El b) const {
  const int64_t p = tab_->p;
  El r = 0, mult = 1;
  for (int i = 0; i < tab_->m; ++i) {
    r += static_cast<El>(((a % p + b % p) % p) * mult);
    a /= p;
    b /= p;
    mult *= p;
  }
  return r;
}

El FiniteField::neg(El a) const {
  const int64_t p = tab_->p;
  El r = 0, mult = 1;
  for (int i = 0; i < tab_->m; ++i) {
    r += static_cast<El>(((p - a % p) % p) * mult);
    a /= p;
    mult *= p;
  }
  return r;
}

El FiniteField::sub(El a, El b) const { return add(a, neg(b)); }

El FiniteField::mul(El a, El b) const {
  if (a == 0 || b == 0) return 0;
  return tab_->exp[(tab_->log[a] + tab_->log[b]) % (tab_->q - 1)];
}

El FiniteField::inv(El a) const {
  if (a == 0) throw std::domain_error("inverse of zero in finite field");
  return tab_->exp[mod_floor(-tab_->log[a], tab_->q - 1)];
}

El FiniteField::pow(El a, int64_t k) const {
  if (a == 0) {
    if (k == 0) return 1;
    if (k < 0) throw std::domain_error("negative power of zero");
    return 0;
  }
  return tab_->exp[mod_floor(static_cast<int64_t>(tab_->log[a]) * mod_floor(k, tab_->q - 1), tab_->q - 1)];
}

El FiniteField::frob(El a, int i) const {
  int64_t e = 1;
  const int n = mod_floor(i, tab_->m);
  for (int j = 0; j < n; ++j) e *= tab_->p;
  return pow(a, e);
}

int64_t FiniteField::trace(El a) const {
  El t = 0;
  El c = a;
  for (int i = 0; i < m_; ++i) {
    t = add(t, c);
    c = frob(c, 1);
  }
  if (t >= static_cast<El>(tab_->p)) throw std::logic_error("trace not in prime field");
  return t;
}

int64_t FiniteField::ambient_log(El a) const {
  if (a == 0) throw std::domain_error("log of zero");
  return tab_->log[a];
}

int64_t FiniteField::log(El a) const {
  if (!contains(a)) throw std::domain_error("element not in field");
  return ambient_log(a) / cofactor();
}

El FiniteField::exp(int64_t k) const { return tab_->exp[(mod_floor(k, q_ - 1) * cofactor()) % (tab_->q - 1)]; }

bool FiniteField::contains(El a) const { return a < index_.size() && index_[a] >= 0; }

int64_t FiniteField::index_of(El a) const {
  if (!contains(a)) throw std::domain_error("element not in field");
  return index_[a];
}

std::vector<El> FiniteField::fp_basis() const {
  // powers of gen form a basis since gen generates the field over F_p
  std::vector<El> b;
  El c = 1;
  for (int i = 0; i < m_; ++i) {
    b.push_back(c);
    c = mul(c, gen_);
  }
  return b;
}

std::string FiniteField::to_string(El a) const {
  std::ostringstream os;
  auto d = digits_of(a, tab_->p, tab_->m);
  os << "[";
  for (int i = 0; i < tab_->m; ++i) os << (i ? "," : "") << d[i];
  os << "]";
  return os.str();
}

int64_t MultChar::exponent_at(FiniteField::El x) const {
  return mod_floor(mod_floor(k, modulus()) * field->log(x), modulus());
}

int64_t MultChar::ambient_exponent_at(FiniteField::El x) const {
  return mod_floor(exponent_at(x) * field->cofactor(), field->ambient_size() - 1);
}

MultChar frobenius_twist(const MultChar& chi, int64_t q, int64_t i) {
  const int64_t n = chi.modulus();
  int64_t qi = 1;
  if (i >= 0) {
    for (int64_t j = 0; j < i; ++j) qi = mod_floor(qi * q, n);
  } else {
    // q is invertible mod n; its inverse is a power of q
    int64_t ord = 1, acc = mod_floor(q, n);
    while (acc != 1 % n) {
      acc = mod_floor(acc * q, n);
      ++ord;
    }
    const int64_t e = mod_floor(i, ord);
    for (int64_t j = 0; j < e; ++j) qi = mod_floor(qi * q, n);
  }
  return {chi.field, mod_floor(chi.k * qi, n)};
}

}  // namespace gl2d
