#include "ibislin/ffield.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ibislin {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> fs;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint8_t>;  // low degree first, over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// c = a*b mod f, f monic of degree m
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  const std::size_t m = f.size() - 1;
  std::vector<u64> acc(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      acc[i + j] = (acc[i + j] + u64(a[i]) * b[j]) % p;
  }
  // reduce from the top using x^m = -(f_{m-1} x^{m-1} + ... + f_0)
  for (std::size_t d = acc.size(); d-- > m;) {
    u64 c = acc[d];
    if (c) {
      acc[d] = 0;
      for (std::size_t j = 0; j < m; ++j)
        acc[d - m + j] = (acc[d - m + j] + c * (p - f[j])) % p;
    }
  }
  Poly r(m, 0);
  for (std::size_t i = 0; i < m && i < acc.size(); ++i)
    r[i] = static_cast<std::uint8_t>(acc[i]);
  trim(r);
  return r;
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly r{1};
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_mod(Poly a, const Poly& b, u64 p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  u64 lead_inv = powmod(b.back(), p - 2, p);
  while (a.size() > db) {
    u64 c = mulmod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - 1 - db;
    if (c)
      for (std::size_t j = 0; j < b.size(); ++j)
        a[shift + j] = static_cast<std::uint8_t>((a[shift + j] + c * (p - b[j])) % p);
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// f monic of degree m, constant term nonzero assumed checked by caller.
bool is_irreducible(const Poly& f, u64 p, unsigned m) {
  // x^(p^m) == x mod f, and gcd(x^(p^(m/l)) - x, f) = 1 for prime l | m.
  Poly x = poly_mod(Poly{0, 1}, f, p);  // constant when deg f = 1
  std::vector<Poly> frob_powers(m + 1);  // x^(p^k) mod f
  frob_powers[0] = x;
  for (unsigned k = 1; k <= m; ++k)
    frob_powers[k] = poly_powmod(frob_powers[k - 1], p, f, p);
  if (frob_powers[m] != x) return false;
  for (u64 l : prime_factors(m)) {
    Poly d = frob_powers[m / l];
    // d - x
    if (d.size() < 2) d.resize(2, 0);
    d[1] = static_cast<std::uint8_t>((d[1] + p - 1) % p);
    trim(d);
    Poly g = poly_gcd(f, d, p);
    if (g.size() > 1) return false;
  }
  return true;
}

bool root_is_primitive(const Poly& f, u64 p, u64 order, const std::vector<u64>& factors) {
  Poly x{0, 1};
  for (u64 l : factors) {
    Poly t = poly_powmod(x, order / l, f, p);
    if (t.size() == 1 && t[0] == 1) return false;
  }
  return true;
}

}  // namespace

struct FieldTower::Bsgs {
  u64 step = 0;
  std::unordered_map<u64, std::uint32_t> baby;  // code(g^j) -> j, j < step
  FieldElement giant_inv;                       // g^(-step)
};

FieldTower FieldTower::make(u64 p, unsigned e, unsigned n) {
  if (!is_prime(p)) throw Error("make_tower: p must be prime");
  if (e < 1 || n < 1) throw Error("make_tower: degrees must be positive");
  unsigned m = e * n;
  // size budget: q^n <= 2^40
  long double approx = std::pow(static_cast<long double>(p), static_cast<long double>(m));
  if (approx > 1099511627776.0L) throw Error("make_tower: field size over budget");

  FieldTower t;
  t.p_ = p;
  t.e_ = e;
  t.n_ = n;
  t.m_ = m;
  t.q_ = 1;
  for (unsigned i = 0; i < e; ++i) t.q_ *= p;
  t.size_ = 1;
  for (unsigned i = 0; i < m; ++i) t.size_ *= p;
  const u64 M = t.size_ - 1;
  t.m_factors_ = prime_factors(M);

  // Lexicographically least (a_{m-1}, ..., a_0) monic irreducible with
  // primitive root.
  bool found = false;
  std::vector<u64> pw(m);
  pw[0] = 1;
  for (unsigned i = 1; i < m; ++i) pw[i] = pw[i - 1] * p;
  // a_{m-1} is the most significant digit of the search index.
  for (u64 idx = 0; idx < t.size_ && !found; ++idx) {
    Poly f(m + 1, 0);
    f[m] = 1;
    u64 rem = idx;
    for (unsigned i = m; i-- > 0;) {
      f[i] = static_cast<std::uint8_t>(rem / pw[i]);
      rem %= pw[i];
    }
    if (f[0] == 0) continue;  // reducible: x divides
    if (!is_irreducible(f, p, m)) continue;
    if (!root_is_primitive(f, p, M, t.m_factors_)) continue;
    t.modulus_ = f;
    found = true;
  }
  if (!found) throw Error("make_tower: no primitive modulus found");  // unreachable

  // dlog machinery. Dense tables for small fields; BSGS above.
  constexpr u64 kDenseLimit = u64(1) << 22;
  if (t.size_ <= kDenseLimit) {
    t.dense_ = true;
    t.exp_table_.resize(M);
    t.log_table_.assign(t.size_, 0);
    FieldElement x = t.one();
    FieldElement g = t.generator();
    for (u64 k = 0; k < M; ++k) {
      u64 c = t.code(x);
      t.exp_table_[k] = static_cast<std::uint32_t>(c);
      t.log_table_[c] = static_cast<std::uint32_t>(k);
      x = t.mul(x, g);
    }
  } else {
    auto bs = std::make_shared<Bsgs>();
    bs->step = static_cast<u64>(std::ceil(std::sqrt(static_cast<long double>(M))));
    FieldElement x = t.one();
    FieldElement g = t.generator();
    bs->baby.reserve(bs->step * 2);
    for (u64 j = 0; j < bs->step; ++j) {
      bs->baby.emplace(t.code(x), static_cast<std::uint32_t>(j));
      x = t.mul(x, g);
    }
    // x = g^step here
    bs->giant_inv = t.inv(x);
    t.bsgs_ = std::move(bs);
  }
  return t;
}

void FieldTower::check_element(const FieldElement& x) const {
  if (x.rep.size() != m_) throw Error("element does not belong to this tower");
}

FieldElement FieldTower::zero() const { return FieldElement{std::vector<std::uint8_t>(m_, 0)}; }

FieldElement FieldTower::one() const {
  FieldElement x = zero();
  x.rep[0] = 1;
  return x;
}

FieldElement FieldTower::generator() const {
  FieldElement x = zero();
  if (m_ == 1) {
    // GF(p): the modulus is x + a0, the root is -a0.
    x.rep[0] = static_cast<std::uint8_t>((p_ - modulus_[0]) % p_);
  } else {
    x.rep[1] = 1;
  }
  return x;
}

u64 FieldTower::code(const FieldElement& x) const {
  check_element(x);
  u64 c = 0;
  for (unsigned i = m_; i-- > 0;) c = c * p_ + x.rep[i];
  return c;
}

FieldElement FieldTower::from_code(u64 c) const {
  if (c >= size_) throw Error("from_code: out of range");
  FieldElement x = zero();
  for (unsigned i = 0; i < m_; ++i) {
    x.rep[i] = static_cast<std::uint8_t>(c % p_);
    c /= p_;
  }
  return x;
}

FieldElement FieldTower::from_dlog(u64 k) const {
  k %= group_order();
  if (dense_) return from_code(exp_table_[k]);
  return pow(generator(), static_cast<i64>(k));
}

FieldElement FieldTower::add(const FieldElement& x, const FieldElement& y) const {
  check_element(x);
  check_element(y);
  FieldElement z = zero();
  for (unsigned i = 0; i < m_; ++i)
    z.rep[i] = static_cast<std::uint8_t>((x.rep[i] + y.rep[i]) % p_);
  return z;
}

FieldElement FieldTower::neg(const FieldElement& x) const {
  check_element(x);
  FieldElement z = zero();
  for (unsigned i = 0; i < m_; ++i)
    z.rep[i] = static_cast<std::uint8_t>((p_ - x.rep[i]) % p_);
  return z;
}

FieldElement FieldTower::sub(const FieldElement& x, const FieldElement& y) const {
  return add(x, neg(y));
}

FieldElement FieldTower::mul(const FieldElement& x, const FieldElement& y) const {
  check_element(x);
  check_element(y);
  Poly r = poly_mulmod(x.rep, y.rep, modulus_, p_);
  r.resize(m_, 0);
  return FieldElement{std::move(r)};
}

FieldElement FieldTower::inv(const FieldElement& x) const {
  check_element(x);
  if (x.is_zero()) throw Error("inv(0)");
  return pow(x, -1);
}

FieldElement FieldTower::pow(const FieldElement& x, i64 k) const {
  check_element(x);
  if (x.is_zero()) {
    if (k == 0) return one();
    if (k < 0) throw Error("pow: negative exponent of 0");
    return zero();
  }
  const u64 M = group_order();
  u64 ek = static_cast<u64>(((k % static_cast<i64>(M)) + static_cast<i64>(M)) % static_cast<i64>(M));
  Poly r = poly_powmod(x.rep, ek, modulus_, p_);
  r.resize(m_, 0);
  return FieldElement{std::move(r)};
}

FieldElement FieldTower::frobenius(const FieldElement& x, i64 i) const {
  check_element(x);
  if (x.is_zero()) return x;
  i64 nn = static_cast<i64>(n_);
  u64 i0 = static_cast<u64>(((i % nn) + nn) % nn);
  u64 ek = powmod(q_ % group_order(), i0, group_order());
  return pow(x, static_cast<i64>(ek));
}

u64 FieldTower::dlog(const FieldElement& x) const {
  check_element(x);
  if (x.is_zero()) throw Error("dlog(0)");
  if (dense_) return log_table_[code(x)];
  const auto& bs = *bsgs_;
  FieldElement y = x;
  const u64 M = group_order();
  for (u64 i = 0;; ++i) {
    if (i * bs.step > M) throw Error("dlog: not in <g> (corrupt tower)");
    auto it = bs.baby.find(code(y));
    if (it != bs.baby.end()) return (i * bs.step + it->second) % M;
    y = mul(y, bs.giant_inv);
  }
}

}  // namespace ibislin
