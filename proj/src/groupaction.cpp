#include "ibislin/groupaction.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace ibislin {

Perm perm_identity(int m) {
  Perm p(m);
  for (int i = 0; i < m; ++i) p[i] = i;
  return p;
}

Perm perm_compose(const Perm& f, const Perm& h) {
  Perm r(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) r[i] = f[h[i]];
  return r;
}

Perm perm_inverse(const Perm& f) {
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[f[i]] = static_cast<int>(i);
  return r;
}

bool is_permutation(const Perm& f, int m) {
  if (static_cast<int>(f.size()) != m) return false;
  std::vector<bool> seen(m, false);
  for (int x : f) {
    if (x < 0 || x >= m || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::string perm_to_string(const Perm& f) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << ' ';
    os << f[i];
  }
  os << ']';
  return os.str();
}

std::optional<Perm> perm_from_string(const std::string& s) {
  auto l = s.find('[');
  auto r = s.rfind(']');
  if (l == std::string::npos || r == std::string::npos || r < l) return std::nullopt;
  std::istringstream is(s.substr(l + 1, r - l - 1));
  Perm p;
  int x;
  while (is >> x) p.push_back(x);
  if (!is.eof() && is.fail()) return std::nullopt;
  if (!is_permutation(p, static_cast<int>(p.size()))) return std::nullopt;
  return p;
}

int ActionGroup::index_of(const Perm& f) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), f);
  if (it == elements.end() || *it != f) return -1;
  return static_cast<int>(it - elements.begin());
}

int ActionGroup::identity_index() const {
  int i = index_of(perm_identity(omega));
  if (i < 0) throw Error("group without identity");
  return i;
}

std::vector<int> ActionGroup::orbit(int v) const {
  if (v < 0 || v >= omega) throw Error("orbit: point out of range");
  std::vector<bool> seen(omega, false);
  std::deque<int> todo{v};
  seen[v] = true;
  std::vector<int> out;
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop_front();
    out.push_back(x);
    for (const Perm& g : generators) {
      if (!seen[g[x]]) {
        seen[g[x]] = true;
        todo.push_back(g[x]);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> ActionGroup::orbits() const {
  std::vector<bool> seen(omega, false);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < omega; ++v) {
    if (seen[v]) continue;
    auto orb = orbit(v);
    for (int x : orb) seen[x] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

ActionGroup closure(int omega, std::vector<Perm> gens, u64 budget) {
  for (const Perm& g : gens)
    if (!is_permutation(g, omega)) throw Error("closure: non-permutation generator");
  std::set<Perm> elems;
  elems.insert(perm_identity(omega));
  std::deque<Perm> todo(elems.begin(), elems.end());
  while (!todo.empty()) {
    Perm x = std::move(todo.front());
    todo.pop_front();
    for (const Perm& g : gens) {
      Perm y = perm_compose(g, x);
      if (elems.insert(y).second) {
        if (elems.size() > budget) throw BudgetExceeded("closure: budget exceeded");
        todo.push_back(std::move(y));
      }
    }
  }
  ActionGroup G;
  G.omega = omega;
  G.generators = std::move(gens);
  G.elements.assign(elems.begin(), elems.end());
  return G;
}

ActionGroup pointwise_stabilizer(const ActionGroup& G, const std::vector<int>& seq) {
  ActionGroup S;
  S.omega = G.omega;
  for (const Perm& g : G.elements) {
    bool fixes = true;
    for (int v : seq) {
      if (v < 0 || v >= G.omega) throw Error("pointwise_stabilizer: point out of range");
      if (g[v] != v) {
        fixes = false;
        break;
      }
    }
    if (fixes) S.elements.push_back(g);
  }
  S.generators = S.elements;
  return S;
}

bool is_fixed_point_free(const ActionGroup& G) {
  Perm id = perm_identity(G.omega);
  for (const Perm& g : G.elements) {
    if (g == id) continue;
    for (int v = 0; v < G.omega; ++v)
      if (g[v] == v) return false;
  }
  return true;
}

bool is_transitive(const ActionGroup& G) {
  return G.omega == 0 || static_cast<int>(G.orbit(0).size()) == G.omega;
}

namespace {

// Subgroup generated by gens, all known to lie in G; returned as sorted
// element list.
std::vector<Perm> generated_subgroup(const ActionGroup& G, const std::vector<Perm>& gens) {
  ActionGroup S = closure(G.omega, gens, G.order());
  return S.elements;
}

std::vector<Perm> commutators(const ActionGroup& G, const std::vector<Perm>& H) {
  std::vector<Perm> gens;
  for (const Perm& g : G.elements)
    for (const Perm& h : H) {
      // [g, h] = g^-1 h^-1 g h
      Perm c = perm_compose(perm_compose(perm_inverse(g), perm_inverse(h)),
                            perm_compose(g, h));
      gens.push_back(std::move(c));
    }
  return gens;
}

}  // namespace

bool is_nilpotent(const ActionGroup& G) {
  // Lower central series until it stabilizes.
  std::vector<Perm> term = G.elements;
  while (true) {
    std::vector<Perm> next = generated_subgroup(G, commutators(G, term));
    if (next.size() == 1) return true;
    if (next.size() == term.size()) return false;
    term = std::move(next);
  }
}

bool is_metacyclic(const ActionGroup& G) {
  const u64 N = G.order();
  if (N == 1) return true;
  std::set<std::vector<Perm>> tried;
  for (const Perm& x : G.elements) {
    std::vector<Perm> C = generated_subgroup(G, {x});
    if (!tried.insert(C).second) continue;
    // normality
    bool normal = true;
    for (const Perm& g : G.elements) {
      Perm conj = perm_compose(perm_compose(perm_inverse(g), x), g);
      if (!std::binary_search(C.begin(), C.end(), conj)) {
        normal = false;
        break;
      }
    }
    if (!normal) continue;
    // cyclic quotient: some y with cosets C, Cy, Cy^2, ... covering G
    u64 k = N / C.size();
    for (const Perm& y : G.elements) {
      std::set<Perm> covered(C.begin(), C.end());
      Perm yp = perm_identity(G.omega);
      for (u64 j = 1; j < k; ++j) {
        yp = perm_compose(y, yp);
        for (const Perm& c : C) covered.insert(perm_compose(c, yp));
      }
      if (covered.size() == N) return true;
    }
  }
  return false;
}

int WreathAction::encode(const std::vector<int>& tuple) const {
  long long code = 0, w = 1;
  for (int i = 0; i < copies; ++i) {
    code += static_cast<long long>(tuple[i]) * w;
    w *= wsize;
  }
  if (code == 0) throw Error("encode: zero vector is not a point");
  return static_cast<int>(code - 1);
}

std::vector<int> WreathAction::decode(int point) const {
  long long code = point + 1;
  std::vector<int> t(copies);
  for (int i = 0; i < copies; ++i) {
    t[i] = static_cast<int>(code % wsize);
    code /= wsize;
  }
  return t;
}

Perm wreath_perm(const WreathGen& g, int wsize, int copies) {
  long long total = 1;
  for (int i = 0; i < copies; ++i) total *= wsize;
  WreathAction dummy;
  dummy.wsize = wsize;
  dummy.copies = copies;
  Perm p(total - 1);
  std::vector<int> img(copies);
  for (int pt = 0; pt < static_cast<int>(total - 1); ++pt) {
    std::vector<int> t = dummy.decode(pt);
    // image position sigma(i) holds h_i(w_i)
    for (int i = 0; i < copies; ++i) img[g.top[i]] = g.block_maps[i][t[i]];
    p[pt] = dummy.encode(img);
  }
  return p;
}

WreathAction wreath_imprimitive(const WreathSpec& spec, u64 budget) {
  const int w = spec.inner.omega;
  const int n = spec.copies;
  for (const Perm& g : spec.inner.generators)
    if (g[0] != 0) throw Error("wreath: inner generators must fix the zero point");
  std::vector<WreathGen> gens = spec.gens;
  if (spec.full) {
    for (const Perm& h : spec.inner.generators)
      for (int i = 0; i < n; ++i) {
        WreathGen g;
        g.block_maps.assign(n, perm_identity(w));
        g.block_maps[i] = h;
        g.top = perm_identity(n);
        gens.push_back(std::move(g));
      }
  }
  for (const Perm& s : spec.top_gens) {
    WreathGen g;
    g.block_maps.assign(n, perm_identity(w));
    g.top = s;
    gens.push_back(std::move(g));
  }
  std::vector<Perm> perms;
  for (const WreathGen& g : gens) {
    if (static_cast<int>(g.block_maps.size()) != n || !is_permutation(g.top, n))
      throw Error("wreath: malformed generator");
    perms.push_back(wreath_perm(g, w, n));
  }
  WreathAction out;
  out.wsize = w;
  out.copies = n;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= w;
  out.group = closure(static_cast<int>(total - 1), std::move(perms), budget);
  return out;
}

bool block_stabilizer_transitive(const WreathAction& W, int block) {
  if (block < 0 || block >= W.copies) throw Error("block out of range");
  // Points supported only in `block`.
  std::vector<int> support;
  for (int wv = 1; wv < W.wsize; ++wv) {
    std::vector<int> t(W.copies, 0);
    t[block] = wv;
    support.push_back(W.encode(t));
  }
  std::vector<bool> in_block(W.group.omega, false);
  for (int p : support) in_block[p] = true;
  // Setwise stabilizer of the block subspace.
  std::vector<Perm> stab;
  for (const Perm& g : W.group.elements) {
    bool keeps = true;
    for (int p : support)
      if (!in_block[g[p]]) {
        keeps = false;
        break;
      }
    if (keeps) stab.push_back(g);
  }
  // Transitivity of the induced action on the block's nonzero vectors.
  std::vector<bool> reached(W.group.omega, false);
  std::deque<int> todo{support[0]};
  reached[support[0]] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop_front();
    for (const Perm& g : stab)
      if (!reached[g[x]]) {
        reached[g[x]] = true;
        ++count;
        todo.push_back(g[x]);
      }
  }
  return count == support.size();
}

bool VectorSpaceTable::valid() const {
  if (size <= 0 || static_cast<int>(add.size()) != size * size) return false;
  for (int u = 0; u < size; ++u) {
    if (sum(u, 0) != u || sum(0, u) != u) return false;
    for (int v = 0; v < size; ++v) {
      int s = sum(u, v);
      if (s < 0 || s >= size) return false;
      if (s != sum(v, u)) return false;
    }
  }
  return true;
}

VectorSpaceTable additive_table(const FieldTower& t) {
  const u64 M = t.group_order();
  if (t.size() > 4096) throw BudgetExceeded("additive_table: field too large");
  VectorSpaceTable V;
  V.size = static_cast<int>(t.size());
  // point 0 = zero, point k+1 = g^k
  std::vector<FieldElement> elem(V.size);
  std::vector<int> point_of_code(t.size());
  elem[0] = t.zero();
  point_of_code[t.code(elem[0])] = 0;
  for (u64 k = 0; k < M; ++k) {
    elem[k + 1] = t.from_dlog(k);
    point_of_code[t.code(elem[k + 1])] = static_cast<int>(k + 1);
  }
  V.add.resize(static_cast<std::size_t>(V.size) * V.size);
  for (int u = 0; u < V.size; ++u)
    for (int v = 0; v < V.size; ++v)
      V.add[static_cast<std::size_t>(u) * V.size + v] =
          point_of_code[t.code(t.add(elem[u], elem[v]))];
  return V;
}

ActionGroup affine_wrap(const ActionGroup& X, const VectorSpaceTable& V, u64 budget) {
  if (!V.valid()) throw Error("affine_wrap: malformed vector space table");
  if (X.omega != V.size - 1) throw Error("affine_wrap: domain size mismatch");
  // Extend each generator by fixing zero, and verify additivity.
  auto extend = [&](const Perm& g) {
    Perm e(V.size);
    e[0] = 0;
    for (int i = 0; i < X.omega; ++i) e[i + 1] = g[i] + 1;
    return e;
  };
  std::vector<Perm> gens;
  for (const Perm& g : X.generators) {
    Perm e = extend(g);
    for (int u = 0; u < V.size; ++u)
      for (int v = 0; v < V.size; ++v)
        if (e[V.sum(u, v)] != V.sum(e[u], e[v]))
          throw Error("affine_wrap: action is not linear on V");
    gens.push_back(std::move(e));
  }
  for (int u = 1; u < V.size; ++u) {
    Perm t(V.size);
    for (int v = 0; v < V.size; ++v) t[v] = V.sum(v, u);
    gens.push_back(std::move(t));
  }
  return closure(V.size, std::move(gens), budget);
}

}  // namespace ibislin
