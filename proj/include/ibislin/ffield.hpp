#ifndef IBISLIN_FFIELD_HPP
#define IBISLIN_FFIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace ibislin {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);
// Distinct prime factors, ascending.
std::vector<u64> prime_factors(u64 n);
bool is_prime(u64 n);

/// Element of GF(q^n), stored as a coordinate vector over the prime field
/// GF(p), low degree first, length e*n. The zero vector is 0.
struct FieldElement {
  std::vector<std::uint8_t> rep;

  bool operator==(const FieldElement&) const = default;
  bool is_zero() const {
    for (auto c : rep)
      if (c) return false;
    return true;
  }
};

/// The tower GF(p) <= GF(q) <= GF(q^n) with q = p^e, realized as
/// GF(p)[x]/(f) for a fixed monic irreducible f of degree e*n whose root is
/// primitive. Construction is deterministic: f is the least such polynomial
/// in lexicographic order on (a_{m-1}, ..., a_1, a_0).
///
/// Immutable after construction; all operations are const and pure.
class FieldTower {
 public:
  // Throws Error on non-prime p, zero degree, or size over budget (2^40).
  static FieldTower make(u64 p, unsigned e, unsigned n);

  u64 p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned n() const { return n_; }
  unsigned degree() const { return m_; }              // e*n over GF(p)
  u64 q() const { return q_; }                        // p^e
  u64 size() const { return size_; }                  // q^n
  u64 group_order() const { return size_ - 1; }       // q^n - 1
  const std::vector<std::uint8_t>& modulus() const { return modulus_; }
  const std::vector<u64>& group_order_factors() const { return m_factors_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;  // the root of the modulus; primitive

  // Dense integer encoding of the coordinate vector (base p, low digit =
  // constant coordinate); bijection with [0, size()).
  u64 code(const FieldElement& x) const;
  FieldElement from_code(u64 c) const;
  FieldElement from_dlog(u64 k) const;  // g^k

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement inv(const FieldElement& x) const;  // throws Error on 0
  // Exponents are reduced mod q^n - 1 for nonzero bases; 0^0 = 1, 0^k = 0
  // for k > 0, 0^negative throws.
  FieldElement pow(const FieldElement& x, i64 k) const;
  // x^(q^i); i arbitrary, reduced mod n.
  FieldElement frobenius(const FieldElement& x, i64 i) const;
  // Discrete log base g, in [0, q^n - 1). Throws Error on 0.
  u64 dlog(const FieldElement& x) const;

 private:
  FieldTower() = default;
  void check_element(const FieldElement& x) const;

  u64 p_ = 0, q_ = 0, size_ = 0;
  unsigned e_ = 0, n_ = 0, m_ = 0;
  std::vector<std::uint8_t> modulus_;  // monic, length m+1
  std::vector<u64> m_factors_;         // prime factors of q^n - 1

  // Dense tables for small fields, lazily built BSGS above.
  bool dense_ = false;
  std::vector<std::uint32_t> exp_table_;  // dlog -> code
  std::vector<std::uint32_t> log_table_;  // code -> dlog (codes of nonzero)
  struct Bsgs;
  std::shared_ptr<Bsgs> bsgs_;
};

}  // namespace ibislin

#endif
