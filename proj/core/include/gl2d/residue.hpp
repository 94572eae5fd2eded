#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gl2d {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(int64_t n);
int64_t ipow(int64_t b, int64_t e);
int64_t mod_floor(int64_t a, int64_t m);
// f with p^f = q, or -1
int prime_exponent(int64_t q, int64_t p);

// Finite field F_{p^m}. Elements are codes of polynomials over F_p (base-p digits)
// in a fixed ambient field; a subfield shares the ambient tables, so addition and
// multiplication of embedded elements are always the ambient ones.
class FiniteField {
 public:
  using El = uint32_t;

  static std::shared_ptr<const FiniteField> make(int64_t p, int m);
  std::shared_ptr<const FiniteField> subfield(int m) const;

  int64_t p() const { return tab_->p; }
  int degree() const { return m_; }
  int64_t size() const { return q_; }
  int ambient_degree() const { return tab_->m; }
  int64_t ambient_size() const { return tab_->q; }
  // ambient_log(x) = cofactor() * log(x) for x in this field.
  int64_t cofactor() const { return (tab_->q - 1) / (q_ - 1); }

  El zero() const { return 0; }
  El one() const { return 1; }
  El gen() const { return gen_; }
  El from_int(int64_t n) const { return static_cast<El>(mod_floor(n, tab_->p)); }

  El add(El a, El b) const;
  El sub(El a, El b) const;
  El neg(El a) const;
  El mul(El a, El b) const;
  El inv(El a) const;
  El div(El a, El b) const { return mul(a, inv(b)); }
  El pow(El a, int64_t k) const;
  // a^(p^i)
  El frob(El a, int i) const;
  // absolute trace down to F_p, returned as an integer in [0, p)
  int64_t trace(El a) const;

  // discrete log relative to gen(), in [0, q-1); a must be nonzero
  int64_t log(El a) const;
  El exp(int64_t k) const;
  int64_t ambient_log(El a) const;

  bool contains(El a) const;
  // Ordered list: zero, then gen^0, gen^1, ..., gen^(q-2).
  const std::vector<El>& elements() const { return elements_; }
  int64_t index_of(El a) const;

  // Defining polynomial of the ambient field, low degree first, monic of degree m.
  const std::vector<int64_t>& ambient_poly() const { return tab_->poly; }
  // An F_p-basis of this field.
  std::vector<El> fp_basis() const;
  std::string to_string(El a) const;

 private:
  struct Tables {
    int64_t p = 0;
    int m = 0;
    int64_t q = 0;
    std::vector<int64_t> poly;
    std::vector<El> exp;       // x^k
    std::vector<int64_t> log;  // log of code, -1 for zero
  };
  std::shared_ptr<const Tables> tab_;
  int m_ = 0;
  int64_t q_ = 0;
  El gen_ = 1;
  std::vector<El> elements_;
  std::vector<int64_t> index_;  // ambient code -> index in elements_, -1 if absent
};

using FiniteFieldPtr = std::shared_ptr<const FiniteField>;

// Multiplicative character of F^x with exponent k: gen^j -> zeta^(k j), where zeta
// is the Teichmueller generator of mu_{|F|-1}.
struct MultChar {
  FiniteFieldPtr field;
  int64_t k = 0;

  int64_t modulus() const { return field->size() - 1; }
  // exponent of zeta_{|F|-1} in chi(x), x != 0
  int64_t exponent_at(FiniteField::El x) const;
  // exponent of the ambient root of unity zeta_{ambient-1}
  int64_t ambient_exponent_at(FiniteField::El x) const;
  MultChar inverse() const { return {field, mod_floor(-k, modulus())}; }
  bool trivial() const { return mod_floor(k, modulus()) == 0; }
  bool operator==(const MultChar& o) const { return mod_floor(k - o.k, modulus()) == 0; }
};

// Theta -> Theta^(q^i), exponent k q^i mod (|F|-1).
MultChar frobenius_twist(const MultChar& chi, int64_t q, int64_t i);

}  // namespace gl2d
