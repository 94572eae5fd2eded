// Exact rational reference for lattice operations over Z_3: vectors have entries in
// Q and a lattice is the Z_(3)-span of its rows, so nothing depends on p-adic digits.
#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <sstream>

#include "gl2d/lattice.hpp"
#include "gl2d/selftest.hpp"

namespace gl2d {

namespace {

using Int = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;
using QVec = std::vector<Q>;
constexpr int64_t kP = 3;
constexpr int64_t kNoVal = INT64_MAX;

int64_t v3_int(Int a) {
  if (a == 0) return kNoVal;
  int64_t v = 0;
  while (a % kP == 0) {
    a /= kP;
    ++v;
  }
  return v;
}

int64_t v3(const Q& x) {
  if (x == 0) return kNoVal;
  return v3_int(numerator(x)) - v3_int(denominator(x));
}

Q pow3(int64_t k) {
  Int a = 1;
  for (int64_t i = 0; i < (k < 0 ? -k : k); ++i) a *= kP;
  return k >= 0 ? Q(a) : Q(Int(1), a);
}

struct QLattice {
  int n = 0;
  std::vector<QVec> rows;
  std::vector<int> pcol;
  std::vector<int64_t> pval;
  int rank() const { return static_cast<int>(rows.size()); }
};

QLattice q_echelon(int n, std::vector<QVec> work) {
  QLattice L;
  L.n = n;
  for (int col = 0; col < n; ++col) {
    int best = -1;
    int64_t bv = kNoVal;
    for (size_t i = 0; i < work.size(); ++i) {
      const int64_t v = v3(work[i][col]);
      if (v < bv) {
        bv = v;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) continue;
    QVec prow = work[best];
    work.erase(work.begin() + best);
    const Q scale = pow3(bv) / prow[col];  // a 3-adic unit
    for (auto& x : prow) x *= scale;
    for (auto& r : work) {
      if (r[col] == 0) continue;
      const Q fct = r[col] / prow[col];
      for (int j = col; j < n; ++j) r[j] -= fct * prow[j];
    }
    L.rows.push_back(std::move(prow));
    L.pcol.push_back(col);
    L.pval.push_back(bv);
  }
  return L;
}

std::vector<QVec> q_inverse(std::vector<QVec> a) {
  const int n = static_cast<int>(a.size());
  std::vector<QVec> inv(n, QVec(n, Q(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw std::runtime_error("oracle: singular matrix");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const Q d = a[c][c];
    for (int j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Q f = a[r][c];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

bool q_member(const QLattice& L, QVec v) {
  for (int i = 0; i < L.rank(); ++i) {
    const int c = L.pcol[i];
    if (v[c] == 0) continue;
    const Q coef = v[c] / L.rows[i][c];
    if (v3(coef) < 0) return false;
    for (int j = 0; j < L.n; ++j) v[j] -= coef * L.rows[i][j];
  }
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

QLattice q_dual(const QLattice& L) {
  const auto inv = q_inverse(L.rows);  // B^-1; dual rows are the columns of B^-1
  std::vector<QVec> g(L.n, QVec(L.n));
  for (int i = 0; i < L.n; ++i)
    for (int j = 0; j < L.n; ++j) g[i][j] = inv[j][i];
  return q_echelon(L.n, g);
}

QLattice q_sum(const QLattice& a, const QLattice& b) {
  std::vector<QVec> g = a.rows;
  g.insert(g.end(), b.rows.begin(), b.rows.end());
  return q_echelon(a.n, g);
}

QLattice q_intersect(const QLattice& a, const QLattice& b) { return q_dual(q_sum(q_dual(a), q_dual(b))); }

// {c in Q^k : sum c_i U_i in L}
QLattice q_meet(const QLattice& L, const std::vector<QVec>& U) {
  const int n = L.n, k = static_cast<int>(U.size());
  const auto inv = q_inverse(L.rows);
  // C = U B^-1 (k x n); c in meet iff c C is integral, so the meet is dual to the span of C's columns
  std::vector<QVec> cols(n, QVec(k, Q(0)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) {
      Q acc = 0;
      for (int m = 0; m < n; ++m) acc += U[i][m] * inv[m][j];
      cols[j][i] = acc;
    }
  return q_dual(q_echelon(k, cols));
}

int64_t to_i64(const Int& a) {
  if (abs(a) > Int(int64_t(1) << 62)) throw std::overflow_error("oracle: coefficient too large");
  return a.convert_to<int64_t>();
}

Element to_element(const LocalField& F, const Q& x) {
  if (x == 0) return F.zero();
  Int num = numerator(x), den = denominator(x);
  int64_t k = 0;
  while (num % kP == 0) {
    num /= kP;
    ++k;
  }
  while (den % kP == 0) {
    den /= kP;
    --k;
  }
  return F.from_int(to_i64(num)) / F.from_int(to_i64(den)) * F.pi_pow(k);
}

Vec to_vec(const LocalField& F, const QVec& v) {
  Vec out;
  for (const auto& x : v) out.push_back(to_element(F, x));
  return out;
}

Lattice to_lattice(const LocalField& F, const QLattice& L) {
  std::vector<Vec> g;
  for (const auto& r : L.rows) g.push_back(to_vec(F, r));
  return Lattice::from_generators(&F, L.n, g);
}

std::string fmt(const std::vector<int64_t>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

struct Gen {
  std::mt19937_64 rng;
  int uni(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); }
  Q small(int kmin, int kmax) {
    int m = 0;
    while (m == 0) m = uni(-4, 4);
    return Q(m) * pow3(uni(kmin, kmax));
  }
  // echelon basis with pivot exponents in [-3, 3], mixed by a unimodular integer matrix
  std::vector<QVec> lattice(int n) {
    std::vector<QVec> rows(n, QVec(n, Q(0)));
    for (int i = 0; i < n; ++i) {
      rows[i][i] = pow3(uni(-3, 3));
      for (int j = i + 1; j < n; ++j)
        if (uni(0, 2) > 0) rows[i][j] = small(-3, 3);
    }
    for (int op = 0; op < 2 && n > 1; ++op) {
      const int a = uni(0, n - 1), b = (a + uni(1, n - 1)) % n, m = uni(-1, 1);
      for (auto& r : rows) r[b] += Q(m) * r[a];  // column operation
    }
    return rows;
  }
};

}  // namespace

SuiteResult lattice_oracle_suite(int cases, uint64_t seed) {
  SuiteResult res;
  res.name = "lattice_oracle";
  const auto F = LocalField::make({3, 1, 1, 1, 30});
  const LocalField& f = *F;
  Gen g{std::mt19937_64(seed)};
  for (int c = 0; c < cases; ++c) {
    const int n = g.uni(1, 4);
    const std::string tag = "case " + std::to_string(c) + " n=" + std::to_string(n) + ": ";
    try {
      const QLattice A = q_echelon(n, g.lattice(n));
      auto brows = g.lattice(n);
      QVec extra(n, Q(0));  // a redundant generator
      for (const auto& r : brows)
        for (int j = 0; j < n; ++j) extra[j] += Q(g.uni(-2, 2)) * r[j];
      brows.push_back(extra);
      const QLattice B = q_echelon(n, brows);
      std::vector<Vec> bgens;
      for (const auto& r : brows) bgens.push_back(to_vec(f, r));
      const Lattice EA = to_lattice(f, A);
      const Lattice EB = Lattice::from_generators(&f, n, bgens);
      res.check(EB.profile() == B.pval, tag + "echelon profile " + fmt(EB.profile()) + " vs " + fmt(B.pval));

      const QLattice S = q_sum(A, B);
      const Lattice ES = EA.sum(EB);
      res.check(ES.profile() == S.pval && ES.equal(to_lattice(f, S)), tag + "sum");

      const QLattice I = q_intersect(A, B);
      const Lattice EI = EA.intersect(EB);
      res.check(EI.profile() == I.pval && EI.equal(to_lattice(f, I)),
                tag + "intersect " + fmt(EI.profile()) + " vs " + fmt(I.pval));

      const int k = g.uni(1, n);
      std::vector<QVec> U;
      while (static_cast<int>(U.size()) < k) {
        QVec u(n, Q(0));
        for (auto& x : u) x = Q(g.uni(-3, 3)) * pow3(g.uni(-1, 1));
        U.push_back(u);
        if (q_echelon(n, U).rank() < static_cast<int>(U.size())) U.pop_back();
      }
      Subspace sub;
      sub.ambient = n;
      for (const auto& u : U) sub.basis.push_back(to_vec(f, u));
      const QLattice Mq = q_meet(A, U);
      const Lattice EM = meet_subspace(EA, sub);
      res.check(EM.profile() == Mq.pval && EM.equal(to_lattice(f, Mq)),
                tag + "meet k=" + std::to_string(k) + " " + fmt(EM.profile()) + " vs " + fmt(Mq.pval));

      for (int t = 0; t < 4; ++t) {
        QVec v(n, Q(0));
        for (const auto& r : A.rows) {
          const Q coef = g.uni(0, 3) == 0 ? Q(0) : g.small(-1, 1);
          for (int j = 0; j < n; ++j) v[j] += coef * r[j];
        }
        const bool want = q_member(A, v);
        res.check(EA.member(to_vec(f, v)) == want, tag + "member (oracle says " + (want ? "in" : "out") + ")");
      }
    } catch (const std::exception& e) {
      res.check(false, tag + "exception: " + e.what());
    }
  }
  return res;
}

}  // namespace gl2d
