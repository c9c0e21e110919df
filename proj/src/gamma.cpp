#include "ibislin/gamma.hpp"

#include <algorithm>
#include <numeric>

namespace ibislin {

namespace {

// (q^i - 1)/(q - 1) = 1 + q + ... + q^(i-1), mod M.
u64 geom_sum(u64 q, unsigned i, u64 M) {
  u64 s = 0, qp = 1 % M;
  for (unsigned k = 0; k < i; ++k) {
    s = (s + qp) % M;
    qp = mulmod(qp, q, M);
  }
  return s;
}

u64 submod(u64 a, u64 b, u64 M) { return (a + M - b % M) % M; }

}  // namespace

SemilinearMap semilinear_identity(const FieldTower& t) { return {t.one(), 0}; }

SemilinearMap compose(const FieldTower& t, const SemilinearMap& f, const SemilinearMap& h) {
  if (f.a.rep.size() != h.a.rep.size()) throw Error("compose: tower mismatch");
  SemilinearMap r;
  r.a = t.mul(f.a, t.frobenius(h.a, f.i));
  r.i = (f.i + h.i) % t.n();
  return r;
}

FieldElement apply(const FieldTower& t, const SemilinearMap& f, const FieldElement& v) {
  return t.mul(f.a, t.frobenius(v, f.i));
}

SemilinearMap semilinear_pow(const FieldTower& t, const SemilinearMap& f, u64 m) {
  SemilinearMap r = semilinear_identity(t);
  SemilinearMap base = f;
  while (m) {
    if (m & 1) r = compose(t, r, base);
    base = compose(t, base, base);
    m >>= 1;
  }
  return r;
}

MetacyclicSubgroup make_metacyclic(const FieldTower& t, u64 h_exp, u64 b_dlog) {
  if (t.n() < 2) throw Error("make_metacyclic: need n > 1");
  const u64 M = t.group_order();
  const u64 nq = geom_sum(t.q(), t.n(), M);  // (q^n - 1)/(q - 1)
  // (phi b)^n = b^nq is a scalar; H must absorb it so that H = G cap N.
  u64 d = std::gcd(std::gcd(h_exp % M, mulmod(b_dlog % M, nq, M)), M);
  if (d == 0) d = M;
  return MetacyclicSubgroup{t, d, b_dlog % M};
}

MetacyclicSubgroup full_gamma(const FieldTower& t) { return make_metacyclic(t, 1, 0); }

bool contains(const MetacyclicSubgroup& G, const SemilinearMap& f) {
  const FieldTower& t = G.tower;
  if (f.a.rep.size() != t.degree()) throw Error("contains: tower mismatch");
  if (f.a.is_zero()) throw Error("contains: scalar must be nonzero");
  const u64 M = t.group_order();
  u64 c = t.dlog(f.a);
  u64 shift = mulmod(G.b_dlog, geom_sum(t.q(), f.i % t.n(), M), M);
  return submod(c, shift, M) % G.d == 0;
}

StabilizerInfo point_stabilizer_dlog(const MetacyclicSubgroup& G, u64 k) {
  const FieldTower& t = G.tower;
  const u64 M = t.group_order();
  k %= M;
  for (unsigned m = 1; m < t.n(); ++m) {
    // candidate generator (v^(1-q^m), m), v = g^k
    u64 qm = powmod(t.q(), m, M);
    u64 scalar = mulmod(k, submod(1 % M, qm, M), M);
    u64 shift = mulmod(G.b_dlog, geom_sum(t.q(), m, M), M);
    if (submod(scalar, shift, M) % G.d == 0) {
      if (t.n() % m != 0) throw Error("stabilizer: least exponent does not divide n");
      StabilizerInfo s;
      s.order = t.n() / m;
      s.generator = {t.from_dlog(scalar), m};
      return s;
    }
  }
  return StabilizerInfo{1, semilinear_identity(t)};
}

StabilizerInfo point_stabilizer(const MetacyclicSubgroup& G, const FieldElement& v) {
  if (v.is_zero()) throw Error("point_stabilizer: v = 0");
  return point_stabilizer_dlog(G, G.tower.dlog(v));
}

ActionGroup as_action_group(const MetacyclicSubgroup& G, u64 budget) {
  const FieldTower& t = G.tower;
  const u64 M = t.group_order();
  if (M > 4096 || G.order() * M > budget * 8)
    throw BudgetExceeded("as_action_group: enumeration over budget");
  const unsigned n = t.n();
  auto perm_of = [&](u64 c, unsigned m) {
    u64 qm = powmod(t.q(), m, M);
    Perm p(M);
    for (u64 k = 0; k < M; ++k) p[k] = static_cast<int>((c + mulmod(k, qm, M)) % M);
    return p;
  };
  ActionGroup out;
  out.omega = static_cast<int>(M);
  out.generators.push_back(perm_of(G.d % M, 0));
  out.generators.push_back(perm_of(G.b_dlog, 1 % n));
  for (unsigned m = 0; m < n; ++m) {
    u64 c0 = mulmod(G.b_dlog, geom_sum(t.q(), m, M), M);
    for (u64 j = 0; j < G.h_order(); ++j)
      out.elements.push_back(perm_of((c0 + j * G.d) % M, m));
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
  return out;
}

std::vector<u64> orbit_representatives(const MetacyclicSubgroup& G) {
  const FieldTower& t = G.tower;
  const u64 M = t.group_order();
  std::vector<bool> seen(M, false);
  std::vector<u64> reps;
  std::vector<u64> stack;
  for (u64 v = 0; v < M; ++v) {
    if (seen[v]) continue;
    reps.push_back(v);
    stack.assign(1, v);
    seen[v] = true;
    while (!stack.empty()) {
      u64 x = stack.back();
      stack.pop_back();
      u64 y1 = (x + G.d) % M;
      u64 y2 = (mulmod(x, t.q(), M) + G.b_dlog) % M;
      if (!seen[y1]) {
        seen[y1] = true;
        stack.push_back(y1);
      }
      if (!seen[y2]) {
        seen[y2] = true;
        stack.push_back(y2);
      }
    }
  }
  return reps;
}

}  // namespace ibislin
