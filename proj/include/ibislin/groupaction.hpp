#ifndef IBISLIN_GROUPACTION_HPP
#define IBISLIN_GROUPACTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "ibislin/ffield.hpp"

namespace ibislin {

/// A permutation of {0, ..., m-1} in image form: perm[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int m);
Perm perm_compose(const Perm& f, const Perm& h);  // (f*h)(x) = f(h(x))
Perm perm_inverse(const Perm& f);
bool is_permutation(const Perm& f, int m);
std::string perm_to_string(const Perm& f);                 // "[i0 i1 ... ]"
std::optional<Perm> perm_from_string(const std::string&);  // same format

/// An explicit finite group acting faithfully on {0, ..., omega-1}:
/// generators plus the full element list, closed under composition and
/// inverse and sorted lexicographically by image tuple.
///
/// Immutable after closure; queries are pure.
struct ActionGroup {
  int omega = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;

  u64 order() const { return elements.size(); }
  // Index of a permutation in the sorted element list, or -1.
  int index_of(const Perm& f) const;
  bool contains(const Perm& f) const { return index_of(f) >= 0; }
  int identity_index() const;

  std::vector<int> orbit(int v) const;
  std::vector<std::vector<int>> orbits() const;
};

inline constexpr u64 kDefaultClosureBudget = u64(1) << 21;

// Throws BudgetExceeded when the closure grows past `budget`, Error on
// non-permutation input.
ActionGroup closure(int omega, std::vector<Perm> gens, u64 budget = kDefaultClosureBudget);

// Subgroup of G fixing every point of seq.
ActionGroup pointwise_stabilizer(const ActionGroup& G, const std::vector<int>& seq);

// True iff every non-identity element moves every point.
bool is_fixed_point_free(const ActionGroup& G);

bool is_transitive(const ActionGroup& G);
bool is_nilpotent(const ActionGroup& G);
// G has a cyclic normal subgroup with cyclic quotient.
bool is_metacyclic(const ActionGroup& G);

/// Imprimitive action of a subgroup of H wr S_n on (W^n) \ {0}.
/// Points of W are 0..wsize-1 with 0 the zero vector; a tuple
/// (w_0, ..., w_{n-1}) has code sum w_i * wsize^i and action-point index
/// code - 1.
struct WreathAction {
  ActionGroup group;
  int wsize = 0;
  int copies = 0;

  int encode(const std::vector<int>& tuple) const;
  std::vector<int> decode(int point) const;
};

/// One wreath generator (h_0, ..., h_{n-1}) sigma; block_maps[i] permutes W
/// (fixing 0), top permutes block positions. Right action:
/// position sigma(i) of the image holds h_i(w_i).
struct WreathGen {
  std::vector<Perm> block_maps;
  Perm top;
};

/// Group spec for wreath_imprimitive. `inner` acts on W = {0..wsize-1}
/// fixing 0. With `full` set, the result is inner wr top (inner generators
/// planted in every coordinate); otherwise only `gens` generate.
struct WreathSpec {
  ActionGroup inner;
  int copies = 1;
  std::vector<Perm> top_gens;
  std::vector<WreathGen> gens;
  bool full = false;
};

WreathAction wreath_imprimitive(const WreathSpec& spec, u64 budget = kDefaultClosureBudget);

// The permutation of (W^n) \ {0} induced by a wreath generator.
Perm wreath_perm(const WreathGen& g, int wsize, int copies);

// True iff the setwise stabilizer of block `block` acts transitively on the
// nonzero vectors supported in that block.
bool block_stabilizer_transitive(const WreathAction& W, int block);

/// Explicit abelian group structure on a point set, 0 the zero element;
/// add[u * size + v] is u + v. Used to extend a linear action to the affine
/// group.
struct VectorSpaceTable {
  int size = 0;
  std::vector<int> add;

  int sum(int u, int v) const { return add[static_cast<std::size_t>(u) * size + v]; }
  bool valid() const;
};

// Point i of X's domain corresponds to the nonzero vector i + 1 of V.
VectorSpaceTable additive_table(const FieldTower& t);  // vector i+1 <-> g^i

// The affine group V x| X on the size points of V. Throws Error when some
// generator of X is not additive on V.
ActionGroup affine_wrap(const ActionGroup& X, const VectorSpaceTable& V,
                        u64 budget = kDefaultClosureBudget);

}  // namespace ibislin

#endif
