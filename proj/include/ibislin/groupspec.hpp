#ifndef IBISLIN_GROUPSPEC_HPP
#define IBISLIN_GROUPSPEC_HPP

#include <memory>
#include <optional>
#include <string>

#include "ibislin/criteria.hpp"

namespace ibislin {

/// Parsed textual group specification. Round-trips: parse(print(s)) == s.
///
/// Formats:
///   gamma{p=5,e=1,n=2,h=8,b=0}     metacyclic H<phi b> <= Gamma(q^n)
///   singer{p=2,e=1,n=3}            the Singer cycle of Gamma(q^n)
///   perm{omega=3;[1 2 0];[0 2 1]}  explicit generators, 0-indexed images
///   prop16{r=3,variant=P1,c=0}
///   prop17{p=3,e=1,k=1}            F = GF(p^e), k = g^k_exp
///   affine{<inner>}                V x| X for inner in {gamma, singer}
struct GroupSpec {
  enum class Kind { gamma_metacyclic, singer, explicit_permutation, prop16, wreath_prop17, affine };

  Kind kind = Kind::explicit_permutation;
  u64 p = 2, e = 1, n = 2;         // gamma / singer / prop17
  u64 h_exp = 1, b_dlog = 0;       // gamma
  int omega = 1;                   // perm
  std::vector<Perm> gens;          // perm
  u64 r = 3;                       // prop16
  Prop16Variant variant = Prop16Variant::P1;
  unsigned c_sel = 0;
  u64 k_exp = 1;                   // prop17
  std::shared_ptr<GroupSpec> inner;  // affine

  bool operator==(const GroupSpec& o) const;

  std::string print() const;
  static std::optional<GroupSpec> parse(const std::string& text);
};

/// A spec realized as concrete objects. `meta` is present for the kinds
/// with a metacyclic normal form (gamma, prop16); `action` whenever the
/// explicit action fits the budget.
struct BuiltGroup {
  std::optional<MetacyclicSubgroup> meta;
  std::optional<WreathAction> wreath;
  std::optional<ActionGroup> action;
};

// Throws Error on malformed specs, BudgetExceeded when the explicit action
// is required but over budget.
BuiltGroup build_group(const GroupSpec& spec, u64 closure_budget = kDefaultClosureBudget);

}  // namespace ibislin

#endif
