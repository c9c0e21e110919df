#ifndef IBISLIN_CRITERIA_HPP
#define IBISLIN_CRITERIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "ibislin/gamma.hpp"
#include "ibislin/ibis.hpp"

namespace ibislin {

/// Outcome of the arithmetic IBIS criterion on a metacyclic subgroup.
/// When IBIS, every satisfying divisor r of n is listed; r = n means the
/// group is a Frobenius complement, r < n means every point stabilizer has
/// the prime order s = n/r.
///
/// One boundary family falls outside the divisor test: G cap N = 1 with
/// b a (q-1)-th power makes G the full stabilizer of a nonzero vector
/// (cyclic of order n, not irreducible). Such a group is IBIS exactly when
/// n is prime -- stabilizer orders are then 1 and n only, so every
/// irredundant base is a single moved point. These get kind fixed_vector,
/// with witnesses_r and s empty.
struct CriterionVerdict {
  enum class Kind { frobenius_complement, uniform_stabilizer, fixed_vector, not_ibis };

  bool is_ibis = false;
  Kind kind = Kind::not_ibis;
  std::vector<u64> witnesses_r;  // all satisfying r, increasing
  std::optional<u64> s;          // n/r in the uniform-stabilizer case

  /// Per-candidate failure record: which condition (1, 2 or 3) ruled out
  /// this divisor r. Populated when not IBIS.
  struct Failure {
    u64 r;
    int failed_condition;
  };
  std::vector<Failure> failures;
};

// The three-condition divisor test; pure integer arithmetic on dlogs.
CriterionVerdict theorem13(const MetacyclicSubgroup& G);

// Full Gamma(q^n) is IBIS iff n is prime. Throws Error when n = 1.
bool corollary14(const FieldTower& t);

// Two-case test for prime n; equals theorem13(G).is_ibis. Throws Error on
// composite n.
bool corollary15(const MetacyclicSubgroup& G);

// The common prime stabilizer order when every point stabilizer has the
// same prime order; absent otherwise (including the fixed-point-free case).
std::optional<u64> uniform_stabilizer_order(const MetacyclicSubgroup& G);

enum class Prop16Variant { P1, P2 };

// G = P*C <= Gamma(r^2) for a Mersenne prime r = 2^b - 1, with P either
// O_2(N)<phi> (semidihedral, order 2^(b+2)) or (O_2(N))^2<phi> (dihedral,
// order 2^(b+1)), and C the subgroup of O_2(N) of index 2^c_sel.
MetacyclicSubgroup build_prop16(u64 r, Prop16Variant variant, unsigned c_sel = 0);

// G <= H wr S_2 on (F^2) \ {0} containing the swap, all (h, h^-1), and
// (k, 1) for k = g^k_exp != 1, where F is the field of `t` (use n = 1
// towers for plain fields) and H its multiplicative group. extra_gens are
// additional wreath generators; conditions (1)-(2) are re-verified after
// closure.
WreathAction build_prop17(const FieldTower& t, u64 k_exp,
                          const std::vector<WreathGen>& extra_gens = {},
                          u64 budget = kDefaultClosureBudget);

/// One named paper example with machine-checkable expectations.
struct GalleryEntry {
  std::string name;
  MetacyclicSubgroup group;
  u64 expected_order = 0;
  bool expected_ibis = false;
  std::optional<u64> expected_s;
  bool oracle_skipped = false;  // criterion + order arithmetic only
};

std::vector<GalleryEntry> gallery();

enum class Hypothesis { nilpotent, odd_order };

/// Which clause of the relevant classification a verified-IBIS group
/// matches. `unmatched` is a red-flag diagnostic, not a counterexample
/// claim: the template search only ranges over Singer and Frobenius
/// relabelings.
struct ClassifyResult {
  enum class Label { fixed_point_free, prop16, prop17, metacyclic_primitive, unmatched };
  Label label;
  std::string detail;
};

ClassifyResult classify_verify(const ActionGroup& G, Hypothesis hyp);

}  // namespace ibislin

#endif
