#include "gl2d/rep_models.hpp"

#include <numeric>

namespace gl2d {

using El = FiniteField::El;

// ---------------------------------------------------------------- residue group

ResidueGroup::ResidueGroup(FiniteFieldPtr k, int sigma) : k_(std::move(k)), sigma_(sigma) {
  if (sigma != 1 && sigma != -1) throw std::invalid_argument("s must have lower-left entry +1 or -1");
}

Res2 ResidueGroup::mul(const Res2& x, const Res2& y) const {
  const auto& k = *k_;
  return {k.add(k.mul(x.a, y.a), k.mul(x.b, y.c)), k.add(k.mul(x.a, y.b), k.mul(x.b, y.d)),
          k.add(k.mul(x.c, y.a), k.mul(x.d, y.c)), k.add(k.mul(x.c, y.b), k.mul(x.d, y.d))};
}

El ResidueGroup::det(const Res2& x) const { return k_->sub(k_->mul(x.a, x.d), k_->mul(x.b, x.c)); }

Res2 ResidueGroup::inv(const Res2& x) const {
  const auto& k = *k_;
  const El di = k.inv(det(x));
  return {k.mul(x.d, di), k.neg(k.mul(x.b, di)), k.neg(k.mul(x.c, di)), k.mul(x.a, di)};
}

Res2 ResidueGroup::s() const { return {0, 1, k_->from_int(sigma_), 0}; }

Res2 ResidueGroup::frob(const Res2& x, int64_t q) const {
  return {k_->pow(x.a, q), k_->pow(x.b, q), k_->pow(x.c, q), k_->pow(x.d, q)};
}

Res2 ResidueGroup::coset_rep(int i) const {
  if (i == 0) return {};
  return {0, k_->from_int(sigma_), 1, k_->elements().at(i - 1)};
}

int ResidueGroup::coset_of(const Res2& h) const {
  if (h.c == 0) return 0;
  return coset_of_lambda(k_->div(h.d, h.c));
}

Matrix induced_action(const ResidueGroup& G, const LocalField* F, int n, const BorelRep& rho, const Res2& h) {
  const int N = G.num_cosets();
  Matrix M(F, N * n, N * n);
  const Res2 hi = G.inv(h);
  for (int r = 0; r < N; ++r) {
    const Res2 R = G.coset_rep(r);
    const int rp = G.coset_of(G.mul(R, hi));
    const Res2 b = G.mul(G.mul(G.coset_rep(rp), h), G.inv(R));
    if (b.c != 0) throw std::logic_error("Bruhat factorization produced a non-Borel element");
    const Matrix blk = rho(b.a, b.d);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M.at(rp * n + i, r * n + j) = blk.at(i, j);
  }
  return M;
}

// ---------------------------------------------------------------- tame irreducibles

Element char_value(const LocalField& F, const MultChar& chi, El x) {
  if (x == 0) return F.zero();
  return F.zeta_pow(chi.ambient_exponent_at(x));
}

TameIrrep TameIrrep::build(const LocalFieldPtr& F, const TameCharacterData& data) {
  if (data.d < 1 || data.dprime < 1 || data.d % data.dprime != 0)
    throw ModelError("tame irrep: d' must divide d");
  if (!data.theta.field) throw ModelError("tame irrep: missing residue character");
  const int64_t n = data.theta.modulus();
  std::vector<int64_t> orbit;
  for (int i = 0; i <= data.dprime; ++i) orbit.push_back(frobenius_twist(data.theta, data.q, i).k);
  for (int i = 0; i < data.dprime; ++i)
    for (int j = i + 1; j < data.dprime; ++j)
      if (orbit[i] == orbit[j]) throw ModelError("tame irrep: Frobenius conjugates of the character coincide");
  if (orbit[data.dprime] != mod_floor(data.theta.k, n))
    throw ModelError("tame irrep: character not fixed by the d'-th Frobenius power");
  if (!data.unif_value.is_value()) throw ModelError("tame irrep: uniformizer value must be nonzero");

  TameIrrep T;
  T.f_ = F.get();
  T.data_ = data;
  const int m = data.dprime;
  T.pi_ = Matrix(F.get(), m, m);
  if (m == 1) {
    T.pi_.at(0, 0) = data.unif_value;
  } else {
    for (int i = 0; i + 1 < m; ++i) T.pi_.at(i + 1, i) = F->one();
    T.pi_.at(0, m - 1) = data.unif_value;
  }
  return T;
}

MultChar TameIrrep::diagonal_char(int i) const {
  const int m = data_.dprime;
  return frobenius_twist(data_.theta, data_.q, mod_floor(m - i, m));
}

Matrix TameIrrep::teich(El lambda) const {
  Matrix M(f_, dim(), dim());
  for (int i = 0; i < dim(); ++i) M.at(i, i) = char_value(*f_, diagonal_char(i), lambda);
  return M;
}

Element TameIrrep::central_value() const { return data_.unif_value.pow(data_.d / data_.dprime); }

// ---------------------------------------------------------------- models

const Matrix& DiagramModel::gen(const std::string& name) const {
  for (const auto& g : generators)
    if (g.name == name) return g.m;
  throw ModelError("no generator named " + name);
}

bool DiagramModel::has_gen(const std::string& name) const {
  for (const auto& g : generators)
    if (g.name == name) return true;
  return false;
}

namespace {

Vec unit_vec(const LocalField& F, int n, int i) {
  Vec v = zero_vec(F, n);
  v[i] = F.one();
  return v;
}

// residue generators shared by every smooth model
std::vector<std::pair<std::string, Res2>> residue_generators(const ResidueGroup& G) {
  const auto& k = G.field();
  std::vector<std::pair<std::string, Res2>> out;
  out.push_back({"torus1", G.torus(k->gen(), 1)});
  out.push_back({"torus2", G.torus(1, k->gen())});
  for (size_t i = 0; i < k->elements().size(); ++i)
    out.push_back({"u:" + std::to_string(i), G.u(k->elements()[i])});
  out.push_back({"s", G.s()});
  return out;
}

}  // namespace

DiagramModel build_principal_series(const LocalFieldPtr& F, const TameIrrep& t1, const TameIrrep& t2) {
  const auto& d1 = t1.data();
  const auto& d2 = t2.data();
  if (d1.d != d2.d || d1.q != d2.q) throw ModelError("principal series: tau1 and tau2 over different D");
  if (d1.theta.field->size() != d2.theta.field->size()) throw ModelError("principal series: residue fields differ");
  const LocalField* Fp = F.get();
  const auto& k = d1.theta.field;
  ResidueGroup G(k, 1);
  const int n = t1.dim() * t2.dim();
  const int N = G.num_cosets();

  BorelRep rho = [&](El a, El delta) { return t1.teich(a).kron(t2.teich(delta)); };
  DiagramModel M;
  M.kind = ModelKind::PrincipalSeries;
  M.field = F;
  M.dim_v0 = N * n;
  M.dim_v1 = 2 * n;
  for (const auto& [name, h] : residue_generators(G)) M.generators.push_back({name, induced_action(G, Fp, n, rho, h)});

  const Matrix rphi = t1.pi_d().kron(t2.pi_d());
  Matrix phi(Fp, N * n, N * n);
  for (int r = 0; r < N; ++r) {
    const int fr = r == 0 ? 0 : G.coset_of_lambda(k->pow(k->elements()[r - 1], d1.q));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) phi.at(fr * n + i, r * n + j) = rphi.at(i, j);
  }
  M.generators.push_back({"phi", phi});

  M.v1.ambient = N * n;
  for (int w = 0; w < n; ++w) M.v1.basis.push_back(unit_vec(*Fp, N * n, w));
  for (int w = 0; w < n; ++w) {
    Vec v = zero_vec(*Fp, N * n);
    for (int r = 1; r < N; ++r) v[r * n + w] = Fp->one();
    M.v1.basis.push_back(std::move(v));
  }
  const Matrix A = t1.pi_d().kron(Matrix::identity(Fp, t2.dim()));
  const Matrix B = Matrix::identity(Fp, t1.dim()).kron(t2.pi_d());
  M.t = Matrix(Fp, 2 * n, 2 * n);
  for (int w = 0; w < n; ++w)
    for (int j = 0; j < n; ++j) {
      M.t.at(n + j, w) = A.at(j, w);
      M.t.at(j, n + w) = B.at(j, w);
    }
  M.center = t1.central_value() * t2.central_value();

  M.w_dim = n;
  const int per = std::lcm(t1.dim(), t2.dim());
  std::vector<Vec> g;
  Matrix pk = Matrix::identity(Fp, n);
  for (int kk = 0; kk < per; ++kk) {
    for (int i = 0; i < n; ++i) g.push_back(pk.col(i));
    pk = rphi * pk;
  }
  M.w_lattice = Lattice::from_generators(Fp, n, g);
  return M;
}

DiagramModel build_speh(const LocalFieldPtr& F, const SpehParams& prm) {
  const LocalField* Fp = F.get();
  const auto& k = prm.theta.field;
  if (!k || k->degree() % 2 != 0) throw ModelError("speh: character must live on F_{q^2}");
  const MultChar thq = frobenius_twist(prm.theta, prm.q, 1);
  if (thq.k == mod_floor(prm.theta.k, prm.theta.modulus())) throw ModelError("speh: need Theta^q != Theta");
  const int fq = prime_exponent(prm.q, Fp->p());
  if (fq < 1) throw ModelError("speh: q must be a power of p");
  const int64_t vq = static_cast<int64_t>(Fp->e()) * fq;
  if (prm.nu != -vq) throw ModelError("speh: nu must equal -v(q) = " + std::to_string(-vq));

  const Element center = prm.center.value_or(Fp->one());
  if (!center.is_value() || center.valuation() != 0) throw ModelError("speh: center value must be a unit");
  // phi^2 = center on the induced block forces epsilon^2 q^2 pi^{2 nu} = center
  const Element q2pi = Fp->from_int(prm.q).pow(2) * Fp->pi_pow(2 * prm.nu);
  const Element target = center / q2pi;
  Element eps;
  if (prm.epsilon) {
    eps = *prm.epsilon;
    if (!(eps * eps).agrees(target)) throw ModelError("speh: epsilon^2 does not match the central value");
  } else {
    const int64_t kz = Fp->root_of_unity_exponent(target);
    if (kz < 0 || target.valuation() != 0 || kz % 2 != 0)
      throw ModelError("speh: cannot solve epsilon^2 = center; pass epsilon explicitly");
    eps = Fp->zeta_pow(kz / 2);
  }

  ResidueGroup G(k, -1);
  const int N = G.num_cosets();
  const int dim = 2 + N;
  BorelRep rho = [&](El a, El delta) {
    Matrix m(Fp, 1, 1);
    m.at(0, 0) = char_value(*Fp, prm.theta, a) * char_value(*Fp, thq, delta);
    return m;
  };
  auto full = [&](const Res2& h) {
    Matrix m(Fp, dim, dim);
    const El dt = G.det(h);
    m.at(0, 0) = char_value(*Fp, prm.theta, dt);
    m.at(1, 1) = char_value(*Fp, thq, dt);
    const Matrix ind = induced_action(G, Fp, 1, rho, h);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) m.at(2 + i, 2 + j) = ind.at(i, j);
    return m;
  };

  DiagramModel M;
  M.kind = ModelKind::Speh;
  M.field = F;
  M.dim_v0 = dim;
  M.dim_v1 = 4;
  for (const auto& [name, h] : residue_generators(G)) M.generators.push_back({name, full(h)});

  Vec f0 = zero_vec(*Fp, N);
  for (int r = 1; r < N; ++r) f0[r] = Fp->one();
  const Element scal = eps * Fp->pi_pow(prm.nu);
  Matrix phi(Fp, dim, dim);
  phi.at(1, 0) = Fp->one();
  phi.at(0, 1) = center;
  for (int r = 0; r < N; ++r) {
    const Res2 fr = G.frob(G.coset_rep(r), prm.q);
    const Vec img = induced_action(G, Fp, 1, rho, G.inv(fr)).apply(f0);
    for (int i = 0; i < N; ++i)
      if (!img[i].is_zero()) phi.at(2 + i, 2 + r) = img[i] * scal;
  }
  M.generators.push_back({"phi", phi});

  M.v1.ambient = dim;
  M.v1.basis.push_back(unit_vec(*Fp, dim, 0));
  M.v1.basis.push_back(unit_vec(*Fp, dim, 1));
  M.v1.basis.push_back(unit_vec(*Fp, dim, 2));
  Vec F0 = zero_vec(*Fp, dim);
  for (int r = 1; r < N; ++r) F0[2 + r] = Fp->one();
  M.v1.basis.push_back(F0);

  M.t = Matrix(Fp, 4, 4);
  M.t.at(2, 0) = Fp->one();                                   // e1 -> e0
  M.t.at(1, 2) = Fp->one();                                   // e0 -> e2
  M.t.at(3, 1) = scal;                                        // e2 -> eps pi^nu f0
  M.t.at(0, 3) = center * eps.inverse() * Fp->pi_pow(-prm.nu);  // f0 -> e1
  M.center = center;
  M.nu = prm.nu;
  M.w_dim = 1;
  return M;
}

std::vector<NamedMatrix> build_sym1_algebraic(const LocalFieldPtr& F, int64_t q) {
  const LocalField* Fp = F.get();
  if (Fp->e() % 4 != 0) throw ModelError("sym1 twist needs 4 | e");
  const int f = prime_exponent(q, Fp->p());
  if (f < 1 || Fp->u() % (2 * f) != 0) throw ModelError("sym1: residue field of E must contain F_{q^2}");
  const auto k = Fp->residue_field()->subfield(2 * f);
  const Element piF = Fp->prime();
  auto T = [&](El x) { return Fp->teichmuller(x); };
  // iota(alpha + beta pi_D) for Teichmueller alpha = [a], beta = [b]
  auto iota = [&](El a, El b) {
    Matrix m(Fp, 2, 2);
    m.at(0, 0) = T(a);
    m.at(0, 1) = T(b) * piF;
    m.at(1, 0) = T(k->pow(b, q));
    m.at(1, 1) = T(k->pow(a, q));
    return m;
  };
  auto blocks = [&](const Matrix& A, const Matrix& B, const Matrix& C, const Matrix& D) {
    Matrix m(Fp, 4, 4);
    const Matrix* bl[2][2] = {{&A, &B}, {&C, &D}};
    for (int I = 0; I < 2; ++I)
      for (int J = 0; J < 2; ++J)
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) m.at(2 * I + i, 2 * J + j) = bl[I][J]->at(i, j);
    return m;
  };
  const Matrix I2 = Matrix::identity(Fp, 2), Z2(Fp, 2, 2);
  const Matrix negI2 = I2.scaled(Fp->from_int(-1));
  const Matrix ipi = iota(0, 1);  // iota(pi_D)
  const int e = Fp->e();

  std::vector<NamedMatrix> out;
  out.push_back({"torus1", blocks(iota(k->gen(), 0), Z2, Z2, I2)});
  out.push_back({"torus2", blocks(I2, Z2, Z2, iota(k->gen(), 0))});
  for (size_t i = 0; i < k->elements().size(); ++i)
    out.push_back({"u:" + std::to_string(i), blocks(I2, iota(k->elements()[i], 0), Z2, I2)});
  out.push_back({"s", blocks(Z2, I2, negI2, Z2)});
  out.push_back({"phi", blocks(ipi, Z2, Z2, ipi).scaled(Fp->pi_pow(-e / 2))});
  // K(1): 1 + pi_D [x] e_ij with pi_D [x] = [x^q] pi_D
  const auto basis = k->fp_basis();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (size_t b = 0; b < basis.size(); ++b) {
        const Matrix blk = iota(0, k->pow(basis[b], q));
        Matrix m = Matrix::identity(Fp, 4);
        for (int a = 0; a < 2; ++a)
          for (int c = 0; c < 2; ++c) m.at(2 * i + a, 2 * j + c) += blk.at(a, c);
        out.push_back({"k1:" + std::to_string(i) + std::to_string(j) + ":" + std::to_string(b), m});
      }
  out.push_back({"t", blocks(Z2, I2, ipi, Z2).scaled(Fp->pi_pow(-e / 4))});
  return out;
}

DiagramModel tensor_diagram(const DiagramModel& smooth, const std::vector<NamedMatrix>& alg) {
  const LocalField* Fp = smooth.field.get();
  auto find = [&](const std::string& name) -> const Matrix* {
    for (const auto& a : alg)
      if (a.name == name) return &a.m;
    return nullptr;
  };
  const Matrix* at = find("t");
  if (!at) throw ModelError("tensor: algebraic factor lacks t");
  const int m = at->rows();
  DiagramModel M = smooth;
  M.kind = smooth.kind == ModelKind::Speh ? ModelKind::SpehSym1 : smooth.kind;
  M.generators.clear();
  for (const auto& g : smooth.generators) {
    const Matrix* a = find(g.name);
    if (!a) throw ModelError("tensor: algebraic factor has no generator named " + g.name);
    M.generators.push_back({g.name, g.m.kron(*a)});
  }
  const Matrix Ism = Matrix::identity(Fp, smooth.dim_v0);
  for (const auto& a : alg) {
    if (a.name == "t" || smooth.has_gen(a.name)) continue;
    if (a.name.rfind("k1:", 0) != 0) throw ModelError("tensor: smooth factor has no generator named " + a.name);
    M.generators.push_back({a.name, Ism.kron(a.m)});
  }
  M.dim_v0 = smooth.dim_v0 * m;
  M.dim_v1 = smooth.dim_v1 * m;
  M.v1.ambient = M.dim_v0;
  M.v1.basis.clear();
  for (const auto& b : smooth.v1.basis)
    for (int j = 0; j < m; ++j) {
      Vec v = zero_vec(*Fp, M.dim_v0);
      for (int i = 0; i < smooth.dim_v0; ++i)
        if (!b[i].is_zero()) v[i * m + j] = b[i];
      M.v1.basis.push_back(std::move(v));
    }
  M.t = smooth.t.kron(*at);
  M.alg_t = *at;
  if (const Matrix* ap = find("phi")) {
    // the algebraic factor of pi_F = phi^d is a scalar
    const Matrix c = ap->pow(2);
    M.center = smooth.center * c.at(0, 0);
  }
  return M;
}

// ---------------------------------------------------------------- dimensions

int rank_of(const LocalField* F, int n, const std::vector<Vec>& rows) {
  return Lattice::from_generators(F, n, rows).rank();
}

int fixed_dim(const LocalField* F, const std::vector<Matrix>& ms) {
  const int n = ms.at(0).rows();
  std::vector<Vec> rows;
  const Matrix I = Matrix::identity(F, n);
  for (const auto& m : ms) {
    const Matrix d = m + I.scaled(F->from_int(-1));
    for (int i = 0; i < n; ++i) rows.push_back(d.row(i));
  }
  return n - rank_of(F, n, rows);
}

namespace {

// null space {x : A x = 0} by Gauss-Jordan over E
std::vector<Vec> nullspace(const Matrix& A0) {
  const LocalField* F = A0.field();
  Matrix A = A0;
  const int m = A.rows(), n = A.cols();
  std::vector<int> pcol;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int piv = -1;
    int64_t best = kInfVal;
    for (int i = r; i < m; ++i)
      if (A.at(i, c).is_value() && A.at(i, c).valuation() < best) {
        best = A.at(i, c).valuation();
        piv = i;
      }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(r, j));
    const Element inv = A.at(r, c).inverse();
    for (int j = 0; j < n; ++j)
      if (!A.at(r, j).is_zero()) A.at(r, j) = A.at(r, j) * inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || A.at(i, c).is_zero()) continue;
      const Element f = A.at(i, c);
      for (int j = 0; j < n; ++j)
        if (!A.at(r, j).is_zero()) A.at(i, j) -= f * A.at(r, j);
      A.at(i, c) = F->zero();
    }
    pcol.push_back(c);
    ++r;
  }
  std::vector<bool> is_piv(n, false);
  for (int c : pcol) is_piv[c] = true;
  std::vector<Vec> out;
  for (int fc = 0; fc < n; ++fc) {
    if (is_piv[fc]) continue;
    Vec v = zero_vec(*F, n);
    v[fc] = F->one();
    for (size_t i = 0; i < pcol.size(); ++i)
      if (!A.at(static_cast<int>(i), fc).is_zero()) v[pcol[i]] = -A.at(static_cast<int>(i), fc);
    out.push_back(std::move(v));
  }
  return out;
}

int64_t frob_orbit_size(int64_t k, int64_t q, int64_t n) {
  int64_t c = mod_floor(k * q, n), s = 1;
  while (c != mod_floor(k, n)) {
    c = mod_floor(c * q, n);
    ++s;
  }
  return s;
}

struct Piece {
  std::vector<Matrix> gens;  // residue generators in a fixed order
  int dim = 0;
};

}  // namespace

DimReport dimension_formula(SteinbergKind kind, int d, int dprime, int64_t q) {
  if (dprime < 1 || d % dprime != 0) throw ConfigError("d' must divide d");
  const int64_t Q = ipow(q, d);
  DimReport r;
  r.dim_i1 = static_cast<int64_t>(dprime) * dprime;
  const int64_t ind = (static_cast<int64_t>(dprime) * dprime - dprime) * (Q + 1) / 2;
  r.dim_k1 = kind == SteinbergKind::St ? ind + dprime * Q : ind + dprime;
  return r;
}

DimReport dimension_measured(SteinbergKind kind, int d, int dprime, int64_t q) {
  if (dprime < 1 || d % dprime != 0) throw ConfigError("d' must divide d");
  int64_t p = 0;
  int f = 0;
  for (int64_t c = 2; c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  for (int64_t t = 1; t < q; t *= p) ++f;
  if (ipow(p, f) != q) throw ConfigError("q must be a prime power");
  auto F = LocalField::make({p, d * f, 1, 1, 8});
  const LocalField* Fp = F.get();
  const auto k = F->residue_field()->subfield(d * f);
  const int64_t n = k->size() - 1;
  int64_t k0 = -1;
  for (int64_t c = 1; c < n && k0 < 0; ++c)
    if (frob_orbit_size(c, q, n) == dprime) k0 = c;
  if (k0 < 0) throw ConfigError("no character with the requested Frobenius orbit");
  std::vector<MultChar> th;
  for (int i = 0; i < dprime; ++i) th.push_back(frobenius_twist(MultChar{k, k0}, q, i));

  ResidueGroup G(k, 1);
  const auto gens = residue_generators(G);
  auto ind = [&](const MultChar& a, const MultChar& b) {
    Piece P;
    BorelRep rho = [&](El x, El y) {
      Matrix m(Fp, 1, 1);
      m.at(0, 0) = char_value(*Fp, a, x) * char_value(*Fp, b, y);
      return m;
    };
    for (const auto& g : gens) P.gens.push_back(induced_action(G, Fp, 1, rho, g.second));
    P.dim = G.num_cosets();
    return P;
  };
  auto detchar = [&](const MultChar& a) {
    Piece P;
    for (const auto& g : gens) {
      Matrix m(Fp, 1, 1);
      m.at(0, 0) = char_value(*Fp, a, G.det(g.second));
      P.gens.push_back(m);
    }
    P.dim = 1;
    return P;
  };
  // st(a): kernel of the equivariant functional Ind(a (x) a) -> a o det
  auto st = [&](const MultChar& a) {
    Piece I = ind(a, a);
    const int N = I.dim;
    std::vector<Vec> rows;
    for (size_t g = 0; g < gens.size(); ++g) {
      const Matrix Tt = I.gens[g].transpose();
      const Element chi = char_value(*Fp, a, G.det(gens[g].second));
      for (int i = 0; i < N; ++i) {
        Vec r = Tt.row(i);
        r[i] -= chi;
        rows.push_back(r);
      }
    }
    const auto ell = nullspace(Matrix::from_rows(Fp, rows, N));
    if (ell.size() != 1) throw ModelError("st: expected a unique equivariant functional");
    const auto S = nullspace(Matrix::from_rows(Fp, {ell[0]}, N));
    const Lattice Sb = Lattice::from_generators(Fp, N, S);
    Piece P;
    P.dim = Sb.rank();
    for (const auto& g : I.gens) {
      Matrix R(Fp, P.dim, P.dim);
      for (int j = 0; j < P.dim; ++j) {
        const Vec c = Sb.coordinates(g.apply(Sb.basis()[j]));
        for (int i = 0; i < P.dim; ++i) R.at(i, j) = c[i];
      }
      P.gens.push_back(R);
    }
    return P;
  };

  std::vector<Piece> pieces;
  for (int i = 0; i < dprime; ++i)
    for (int j = i + 1; j < dprime; ++j) pieces.push_back(ind(th[i], th[j]));
  for (int i = 0; i < dprime; ++i) pieces.push_back(kind == SteinbergKind::St ? st(th[i]) : detchar(th[i]));

  DimReport r;
  std::vector<Matrix> us;
  for (size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].first.rfind("u:", 0) != 0) continue;
    std::vector<Matrix> blk;
    for (const auto& P : pieces) blk.push_back(P.gens[g]);
    us.push_back(block_diag(blk));
  }
  for (const auto& P : pieces) r.dim_k1 += P.dim;
  r.dim_i1 = fixed_dim(Fp, us);
  return r;
}

}  // namespace gl2d
