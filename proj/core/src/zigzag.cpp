#include "gl2d/zigzag.hpp"

#include <chrono>

namespace gl2d {

std::string Verdict::to_string() const {
  switch (kind) {
    case VerdictKind::Stabilized:
      return "Stabilized(" + std::to_string(at) + ")";
    case VerdictKind::DivergedPeriodic:
      return "DivergedPeriodic(i=" + std::to_string(at) + ",i0=" + std::to_string(i0) + ",j=" + std::to_string(j) + ")";
    default:
      return "Inconclusive(" + std::to_string(at) + ")";
  }
}

Lattice sym1_seed(const DiagramModel& M) {
  if (!M.alg_t) throw ModelError("sym1 seed: model has no algebraic factor");
  const Matrix& t = *M.alg_t;
  const LocalField* F = M.field.get();
  const Lattice M0 = Lattice::standard(F, t.rows());
  const Lattice A = M0.sum(M0.apply(t));
  return A.sum(A.apply(t * t));
}

Lattice seed_lattice(const DiagramModel& M) {
  const LocalField* F = M.field.get();
  switch (M.kind) {
    case ModelKind::PrincipalSeries: {
      const int n = M.w_dim;
      const int N = M.dim_v0 / n;
      std::vector<Vec> g;
      for (int r = 0; r < N; ++r)
        for (const auto& b : M.w_lattice.basis()) {
          Vec v = zero_vec(*F, M.dim_v0);
          for (int i = 0; i < n; ++i) v[r * n + i] = b[i];
          g.push_back(std::move(v));
        }
      const Lattice L0 = Lattice::from_generators(F, M.dim_v0, g);
      const Lattice X = meet_subspace(L0, M.v1);
      return X.sum(X.apply(M.t));
    }
    case ModelKind::Speh:
      return Lattice::diagonal(F, {0, 0, 0, M.nu});
    case ModelKind::SpehSym1:
      return Lattice::diagonal(F, {0, 0, 0, M.nu}).tensor(sym1_seed(M));
    default:
      throw ModelError("seed: unsupported model kind");
  }
}

Lattice k0_closure(const DiagramModel& M, const Lattice& L0, int cap) {
  Lattice L = L0;
  for (int pass = 0; pass < cap; ++pass) {
    std::vector<Vec> g = L.basis();
    for (const auto& G : M.generators)
      for (const auto& r : L.basis()) g.push_back(G.m.apply(r));
    Lattice next = Lattice::from_generators(M.field.get(), M.dim_v0, g);
    // next contains L, so equal rank and pivot sum means equality
    if (next.rank() == L.rank() && next.pivot_sum() == L.pivot_sum()) return next;
    L = std::move(next);
  }
  throw ClosureError("K0-closure did not stabilize within " + std::to_string(cap) + " passes");
}

Lattice zigzag_step(const DiagramModel& M, const Lattice& L1, int cap) {
  const Lattice C = k0_closure(M, embed(L1, M.v1), cap);
  if (!C.full_rank()) throw ModelError("K0-span of V1 is not all of V0");
  const Lattice X = meet_subspace(C, M.v1);
  return X.sum(X.apply(M.t));
}

namespace {

std::optional<int64_t> homothety_shift(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
  if (a.size() != b.size() || a.empty()) return std::nullopt;
  const int64_t j = a[0] - b[0];
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] - b[i] != j) return std::nullopt;
  return j;
}

}  // namespace

ZigZagTrace run_zigzag(const DiagramModel& M, const Lattice& seed, const ZigZagOptions& opt) {
  if (opt.max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
  using clock = std::chrono::steady_clock;
  ZigZagTrace tr;
  std::vector<Lattice> hist{seed};
  tr.records.push_back({0, seed.profile(), 0, 0.0});
  bool done = false;
  for (int i = 1; i <= opt.max_iter && !done; ++i) {
    const auto t0 = clock::now();
    Lattice L = zigzag_step(M, hist.back(), opt.closure_cap);
    IterationRecord rec;
    rec.i = i;
    rec.profile = L.profile();
    if (!L.contains(hist.back())) tr.monotone = false;
    if (L.full_rank() && seed.full_rank()) rec.index = L.index_valuation_of(seed);
    rec.millis = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    tr.records.push_back(rec);

    const Lattice& prev = hist.back();
    if (L.rank() == prev.rank() && L.pivot_sum() == prev.pivot_sum() && L.contains(prev)) {
      tr.verdict = {VerdictKind::Stabilized, i, 0, 0};
      Lattice cur = L;
      for (int c = 0; c < opt.confirm_steps; ++c) {
        Lattice nx = zigzag_step(M, cur, opt.closure_cap);
        if (!nx.equal(cur)) {
          tr.confirmed = false;
          break;
        }
        cur = std::move(nx);
      }
      hist.push_back(std::move(L));
      break;
    }
    if (tr.verdict.kind != VerdictKind::DivergedPeriodic) {
      for (int i0 = static_cast<int>(hist.size()) - 1; i0 >= 0; --i0) {
        const auto j = homothety_shift(rec.profile, hist[i0].profile());
        if (!j || *j >= 0) continue;
        if (L.equal(hist[i0].scale(*j))) {
          tr.verdict = {VerdictKind::DivergedPeriodic, i, i0, *j};
          break;
        }
      }
    }
    hist.push_back(std::move(L));
    if (tr.verdict.kind == VerdictKind::DivergedPeriodic && i >= opt.min_iter) done = true;
  }
  if (tr.verdict.kind == VerdictKind::Inconclusive) tr.verdict.at = static_cast<int>(hist.size()) - 1;
  tr.final_lattice = hist.back();
  return tr;
}

bool emerton_predicate(const PredicateInput& in) {
  if (in.v1 + in.v2 != 0) throw PredicateError("central character is not integral: v1 + v2 != 0");
  const int64_t vq = static_cast<int64_t>(in.e) * in.f;
  return in.v2 >= 0 && in.v1 + static_cast<int64_t>(in.d) * in.d * vq >= 0;
}

bool normalized_predicate(const PredicateInput& in) {
  if (in.v1 + in.v2 != 0) throw PredicateError("central character is not integral: v1 + v2 != 0");
  const int64_t w = static_cast<int64_t>(in.d) * in.d * in.e * in.f;
  if (w % 2 != 0) throw PredicateError("normalized predicate needs d^2 e f even");
  return in.v1 + w / 2 >= 0 && in.v2 + w / 2 >= 0;
}

}  // namespace gl2d
