#pragma once

#include <cstdint>
#include <vector>

#include "submax/pi_arith.hpp"

namespace submax {

// Element of GF(p^k) in polynomial-residue representation: coefficient
// vector of length k, low degree first, each entry in [0, p).
using FElem = std::vector<std::uint32_t>;

// GF(p^k) with the lexicographically least monic irreducible modulus
// (coefficients compared low-degree-first). Construction is deterministic,
// so point labellings derived from field elements are reproducible.
class Field {
 public:
  Field(std::uint64_t p, unsigned k);

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t size() const { return size_; }
  // modulus coefficients, length k+1, monic
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FElem zero() const;
  FElem one() const;
  FElem from_int(std::uint64_t c) const;  // constant polynomial c mod p

  bool is_zero(const FElem& a) const;
  FElem add(const FElem& a, const FElem& b) const;
  FElem sub(const FElem& a, const FElem& b) const;
  FElem neg(const FElem& a) const;
  FElem mul(const FElem& a, const FElem& b) const;
  FElem inv(const FElem& a) const;  // throws on zero
  FElem pow(const FElem& a, std::uint64_t e) const;

  // a^(p^e); frobenius(a, k) is the identity.
  FElem frobenius(const FElem& a, unsigned e) const;

  // x -> x^(2^((k+1)/2)) on GF(2^k), k odd >= 3. Applying it twice squares.
  FElem suzuki_twist(const FElem& a) const;

  // Canonical integer label sum c_i p^i; inverse of from_index.
  std::uint64_t index_of(const FElem& a) const;
  FElem from_index(std::uint64_t idx) const;

  // Least multiplicative generator in index order.
  FElem generator() const;

  std::uint64_t element_order(const FElem& a) const;

 private:
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t size_;
  std::vector<std::uint32_t> modulus_;

  FElem reduce_product(std::vector<std::uint64_t> prod) const;
};

}  // namespace submax
