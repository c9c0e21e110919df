#ifndef IBISLIN_IBIS_HPP
#define IBISLIN_IBIS_HPP

#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "ibislin/groupaction.hpp"

namespace ibislin {

/// An irredundant base: ordered points with the strictly decreasing
/// stabilizer chain |G| > |G_w1| > ... > 1 alongside.
struct IrredundantBase {
  std::vector<int> points;
  std::vector<u64> chain_orders;  // length points.size() + 1, ends at 1
};

struct IbisReport {
  bool is_ibis = true;
  u64 b = 0;        // minimal base size
  u64 max_irr = 0;  // maximal irredundant base size
  IrredundantBase witness_min;
  std::optional<IrredundantBase> witness_other;  // different length, iff not IBIS
  std::vector<u64> stabilizer_orders;            // one per orbit representative
  bool frobenius_complement = false;
  std::string method;

  nlohmann::json to_json() const;
};

struct IbisBudget {
  u64 max_nodes = u64(1) << 22;  // DFS nodes
  u64 probe_trials = 10000;      // pipeline stage 2
  u64 seed = 0x1B15;             // pipeline stage 2 rng
};

// Exhaustive DFS over irredundant sequences, memoized on the stabilizer
// subgroup. Sound and complete; throws BudgetExceeded past max_nodes.
IbisReport is_ibis_bruteforce(const ActionGroup& G, const IbisBudget& budget = {});

// Staged accelerator (exhaustive size-2 scan, seeded random size-3 probe,
// per-orbit exhaustive size-3, size-4 existence); any stage that exhibits
// irredundant bases of two lengths short-circuits to "not IBIS", otherwise
// falls back to the exhaustive oracle. Same verdict as the oracle always.
IbisReport is_ibis_pipeline(const ActionGroup& G, const IbisBudget& budget = {});

std::pair<u64, IrredundantBase> min_base_size(const ActionGroup& G, const IbisBudget& budget = {});

// Direct verification, independent of the DFS: pts is a base and the
// stabilizer chain drops strictly at every step.
bool is_irredundant_base(const ActionGroup& G, const std::vector<int>& pts);

// True iff every reordering of base.points is again irredundant. Throws
// Error when the input itself is not an irredundant base.
bool reorder_invariance(const ActionGroup& G, const IrredundantBase& base);

// All irredundant bases as unordered point sets (plain enumeration, no
// memoization). Throws BudgetExceeded past max_nodes sequences.
std::set<std::vector<int>> all_irredundant_base_sets(const ActionGroup& G,
                                                     u64 max_nodes = u64(1) << 22);

// Basis-exchange axiom over the set of unordered irredundant bases.
// Precondition: G is IBIS (throws Error otherwise).
bool matroid_exchange_check(const ActionGroup& G, u64 max_nodes = u64(1) << 22);

}  // namespace ibislin

#endif
