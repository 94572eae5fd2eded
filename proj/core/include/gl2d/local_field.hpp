#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gl2d/residue.hpp"

namespace gl2d {

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LocalFieldSpec {
  int64_t p = 3;
  int u = 1;  // unramified degree
  int e = 1;  // ramification degree, uniformizer^e = eis_const * p
  int eis_const = 1;
  int default_precision = 24;  // relative digits in the uniformizer
};

inline constexpr int kMaxDigitSlots = 16;  // bound on e*u
inline constexpr int64_t kInfVal = std::numeric_limits<int64_t>::max() / 4;

class LocalField;

// A scalar of E = W(F_{p^u})[pi]/(pi^e - c p) stored as pi^val * unit, the unit known
// modulo pi^rel. An Approx element is only known to lie in pi^K O; it cannot be
// compared or asked for its valuation.
class Element {
 public:
  enum class Kind : uint8_t { Zero, Approx, Value };

  Element() = default;

  Kind kind() const { return kind_; }
  const LocalField* field() const { return f_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_approx() const { return kind_ == Kind::Approx; }
  bool is_value() const { return kind_ == Kind::Value; }
  bool exact() const { return kind_ == Kind::Zero || exact_; }
  // Throws PrecisionError for Approx elements; kInfVal for exact zero.
  int64_t valuation() const;
  // Lower bound on the valuation that is always safe to use.
  int64_t valuation_lower_bound() const;
  int64_t abs_precision() const;
  int rel_precision() const { return kind_ == Kind::Value ? rel_ : 0; }
  bool is_unit() const { return valuation() == 0; }
  // True when the element is known to lie in O (no precision error possible).
  bool is_integral() const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Element& o) const;
  Element operator/(const Element& o) const;
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }
  Element inverse() const;
  Element pow(int64_t k) const;
  // multiply by pi^k, exact shift
  Element shift(int64_t k) const;
  // pi^-val * x, a unit (or throws for zero/approx)
  Element unit_part() const;
  Element with_precision(int n) const;
  // Declare the stored digits to be the whole value (all higher digits zero).
  Element as_exact() const;
  // split x = frac + integral with frac having only digits below pi^0
  std::pair<Element, Element> split_fractional() const;

  // Decided equality; throws PrecisionError when undecidable.
  bool equals(const Element& o) const;
  // True when the difference vanishes to the available precision.
  bool agrees(const Element& o) const { return !(*this - o).is_value(); }
  std::string to_string() const;
  // Canonical digit serialization: "v:<val>;<digits>" or "0" / "O(pi^K)"
  std::string digit_string() const;

  // raw access for the arithmetic kernel
  const int64_t* digits() const { return d_.data(); }

 private:
  friend class LocalField;
  const LocalField* f_ = nullptr;
  Kind kind_ = Kind::Zero;
  bool exact_ = true;
  int32_t rel_ = 0;
  int64_t val_ = 0;  // valuation for Value, absolute precision for Approx
  std::array<int64_t, kMaxDigitSlots> d_{};
};

class LocalField : public std::enable_shared_from_this<LocalField> {
 public:
  static std::shared_ptr<const LocalField> make(const LocalFieldSpec& spec);
  static std::shared_ptr<const LocalField> make(const LocalFieldSpec& spec, int precision);
  // largest relative precision this build can carry for the given spec
  static int precision_ceiling(const LocalFieldSpec& spec);
  static void validate(const LocalFieldSpec& spec);

  std::shared_ptr<const LocalField> with_precision(int precision) const { return make(spec_, precision); }

  const LocalFieldSpec& spec() const { return spec_; }
  int64_t p() const { return spec_.p; }
  int u() const { return spec_.u; }
  int e() const { return spec_.e; }
  int c() const { return spec_.eis_const; }
  int precision() const { return N_; }
  int64_t residue_size() const { return q_; }
  int64_t teichmuller_order() const { return q_ - 1; }
  const FiniteFieldPtr& residue_field() const { return res_; }

  Element zero() const;
  Element one() const;
  Element uniformizer() const { return pi_pow(1); }
  Element pi_pow(int64_t k) const;
  Element prime() const;  // p = c * pi^e
  Element from_int(int64_t n) const;
  Element teichmuller(FiniteField::El lambda) const;
  // zeta^k, zeta the Teichmueller lift of the residue generator
  Element zeta_pow(int64_t k) const;
  // exact reading back: is x = zeta^k * pi^v for some k? returns k or -1
  int64_t root_of_unity_exponent(const Element& x) const;
  FiniteField::El reduce_unit(const Element& x) const;

  // kernel
  Element normalize(std::array<int64_t, kMaxDigitSlots>& a, int64_t base, int64_t abs_prec, bool exact) const;
  void mul_arrays(const int64_t* a, const int64_t* b, int64_t* out) const;
  void shift_array(int64_t* a, int64_t s) const;
  void truncate(int64_t* a, int64_t rel) const;
  int64_t pm() const { return pm_; }
  int64_t pdigits() const { return M_; }

 private:
  LocalFieldSpec spec_;
  int N_ = 0;
  int M_ = 0;
  int64_t pm_ = 1;
  int64_t q_ = 0;
  std::vector<int64_t> ppow_;
  std::vector<int64_t> G_;  // monic defining poly of the unramified part
  FiniteFieldPtr res_;
  std::vector<std::array<int64_t, kMaxDigitSlots>> zeta_units_;  // zeta^k as arrays
};

using LocalFieldPtr = std::shared_ptr<const LocalField>;

// Rerun `fn` at doubled precision on PrecisionError until it succeeds or the ceiling
// is exceeded; the trail records each failed precision and message.
template <class Result>
Result with_escalation(const LocalFieldSpec& spec, int start, int ceiling,
                       const std::function<Result(const LocalFieldPtr&)>& fn,
                       std::vector<std::string>* trail = nullptr) {
  int prec = start;
  std::string msgs;
  for (;;) {
    auto F = LocalField::make(spec, prec);
    try {
      return fn(F);
    } catch (const PrecisionError& err) {
      const std::string line = "precision " + std::to_string(prec) + ": " + err.what();
      if (trail) trail->push_back(line);
      msgs += line + "; ";
      if (prec >= ceiling) throw PrecisionError("precision ceiling exceeded after trail: " + msgs);
      prec = std::min(ceiling, prec * 2);
    }
  }
}

}  // namespace gl2d
