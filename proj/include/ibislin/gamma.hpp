#ifndef IBISLIN_GAMMA_HPP
#define IBISLIN_GAMMA_HPP

#include <utility>

#include "ibislin/ffield.hpp"
#include "ibislin/groupaction.hpp"

namespace ibislin {

/// One element of the semilinear group: the map x -> a * x^(q^i).
struct SemilinearMap {
  FieldElement a;  // nonzero scalar
  unsigned i = 0;  // Frobenius exponent, in [0, n)
};

SemilinearMap semilinear_identity(const FieldTower& t);
// (f o h)(x) = f(h(x)); for f = (a, i), h = (c, j) this is
// (a * c^(q^i), i + j mod n).
SemilinearMap compose(const FieldTower& t, const SemilinearMap& f, const SemilinearMap& h);
FieldElement apply(const FieldTower& t, const SemilinearMap& f, const FieldElement& v);
SemilinearMap semilinear_pow(const FieldTower& t, const SemilinearMap& f, u64 m);

/// G = H<phi b> <= Gamma(q^n) in normalized form: H = G cap N = <g^d> with
/// d | q^n - 1, and b the coset scalar so that phi b in G. The constructor
/// absorbs b^((q^n-1)/(q-1)) into H, so the stored H is exactly G cap N
/// and |G| = n * |H|.
struct MetacyclicSubgroup {
  FieldTower tower;
  u64 d = 1;       // H = <g^d>, d | q^n - 1
  u64 b_dlog = 0;  // b = g^b_dlog

  u64 h_order() const { return tower.group_order() / d; }
  u64 order() const { return static_cast<u64>(tower.n()) * h_order(); }
  FieldElement b() const { return tower.from_dlog(b_dlog); }
};

// h_exp selects the raw cyclic part <g^h_exp>; it is normalized to the
// divisor class d = gcd(h_exp, b_dlog * (q^n-1)/(q-1), q^n-1). Throws Error
// when n = 1 (no proper semilinear part) -- b = 0 is unrepresentable here
// since b is given by its dlog.
MetacyclicSubgroup make_metacyclic(const FieldTower& t, u64 h_exp, u64 b_dlog);

// Full Gamma(q^n): H = N, b = 1.
MetacyclicSubgroup full_gamma(const FieldTower& t);

bool contains(const MetacyclicSubgroup& G, const SemilinearMap& f);

/// Cyclic point stabilizer G_v: order and a generator (the identity when
/// trivial).
struct StabilizerInfo {
  u64 order = 1;
  SemilinearMap generator;
};

StabilizerInfo point_stabilizer(const MetacyclicSubgroup& G, const FieldElement& v);
// Same, with v = g^k.
StabilizerInfo point_stabilizer_dlog(const MetacyclicSubgroup& G, u64 k);

// Explicit action on Omega = V \ {0}, point k <-> g^k. Throws
// BudgetExceeded when |G| * |Omega| is over budget.
ActionGroup as_action_group(const MetacyclicSubgroup& G, u64 budget = kDefaultClosureBudget);

// Orbit representatives of G on V \ {0}, as dlogs.
std::vector<u64> orbit_representatives(const MetacyclicSubgroup& G);

}  // namespace ibislin

#endif
