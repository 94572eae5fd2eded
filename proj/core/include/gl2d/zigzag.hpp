#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gl2d/rep_models.hpp"

namespace gl2d {

class ClosureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class VerdictKind { Stabilized, DivergedPeriodic, Inconclusive };

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  int at = 0;       // Stabilized: first i with L(i) = L(i-1); Inconclusive: iterations run
  int i0 = 0;       // DivergedPeriodic: L(at) = pi^j L(i0)
  int64_t j = 0;
  std::string to_string() const;
};

struct IterationRecord {
  int i = 0;
  std::vector<int64_t> profile;  // pivot valuations of L1(i)
  std::optional<int64_t> index;  // v[L1(i) : L1(0)]
  double millis = 0;
};

struct ZigZagOptions {
  int max_iter = 64;
  int min_iter = 0;      // keep iterating (after a divergence certificate) until this many steps
  int closure_cap = 1024;
  int confirm_steps = 2;  // extra steps checked after stabilization
};

struct ZigZagTrace {
  std::vector<IterationRecord> records;
  Verdict verdict;
  Lattice final_lattice;
  bool monotone = true;
  bool confirmed = true;  // fixed point persisted through the confirming steps
};

// L1 = (L0 n V1) + t(L0 n V1) for principal series, (smooth seed) (x) M1 for Sym^1 models
Lattice seed_lattice(const DiagramModel& M);
// the algebraic seed M1 = (M0 + t M0) + t^2 (M0 + t M0), M0 = O^m
Lattice sym1_seed(const DiagramModel& M);
Lattice k0_closure(const DiagramModel& M, const Lattice& L, int cap = 1024);
Lattice zigzag_step(const DiagramModel& M, const Lattice& L1, int cap = 1024);
ZigZagTrace run_zigzag(const DiagramModel& M, const Lattice& seed, const ZigZagOptions& opt = {});

struct PredicateInput {
  int64_t v1 = 0, v2 = 0;  // v(omega_tau_i(pi_F))
  int d = 1;
  int e = 1;
  int f = 1;
};
class PredicateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
bool emerton_predicate(const PredicateInput& in);
bool normalized_predicate(const PredicateInput& in);

}  // namespace gl2d
