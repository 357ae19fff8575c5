#include "submax/ffield.hpp"

#include <algorithm>

namespace submax {

namespace {

// Polynomial arithmetic over GF(p) on coefficient vectors (low degree first,
// trailing zeros allowed). Used only during field construction.
using Poly = std::vector<std::uint32_t>;

unsigned degree(const Poly& f) {
  for (std::size_t i = f.size(); i > 0; --i) {
    if (f[i - 1] != 0) return static_cast<unsigned>(i - 1);
  }
  return 0;
}

bool poly_is_zero(const Poly& f) {
  return std::all_of(f.begin(), f.end(), [](std::uint32_t c) { return c == 0; });
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  const unsigned dm = degree(m);
  std::uint64_t lead_inv = 1;
  {
    // modulus is monic in all call sites, but keep this general
    std::uint64_t lead = m[dm];
    std::uint64_t e = p - 2, b = lead, r = 1;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    lead_inv = r;
  }
  while (!poly_is_zero(a) && degree(a) >= dm && a.size() > dm) {
    unsigned da = degree(a);
    if (a[da] == 0) {
      a.pop_back();
      continue;
    }
    if (da < dm) break;
    std::uint64_t c = a[da] * lead_inv % p;
    for (unsigned i = 0; i <= dm; ++i) {
      std::uint64_t sub = c * m[i] % p;
      a[da - dm + i] =
          static_cast<std::uint32_t>((a[da - dm + i] + p - sub) % p);
    }
  }
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), m, p);
}

// Irreducibility over GF(p) by scanning monic divisors of degree <= deg/2.
bool is_irreducible(const Poly& f, std::uint64_t p) {
  const unsigned d = degree(f);
  if (d == 0) return false;
  if (d == 1) return true;
  // no roots (degree-1 divisors)
  for (std::uint64_t r = 0; r < p; ++r) {
    std::uint64_t v = 0, x = 1;
    for (unsigned i = 0; i <= d; ++i) {
      v = (v + f[i] * x) % p;
      x = x * r % p;
    }
    if (v == 0) return false;
  }
  // higher-degree monic divisors
  for (unsigned dd = 2; dd <= d / 2; ++dd) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(dd + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < dd; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[dd] = 1;
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(std::uint64_t p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p)) throw invalid_input("Field: p must be prime");
  if (k == 0) throw invalid_input("Field: k must be positive");
  size_ = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (size_ > (1ull << 31) / p) throw invalid_input("Field: p^k exceeds 2^31");
    size_ *= p;
  }

  // Least monic irreducible of degree k, lower coefficients compared
  // low-degree-first.
  std::vector<std::uint64_t> radix(k, 0);
  Poly candidate(k + 1, 0);
  candidate[k] = 1;
  while (true) {
    for (unsigned i = 0; i < k; ++i) {
      candidate[i] = static_cast<std::uint32_t>(radix[i]);
    }
    if (is_irreducible(candidate, p)) {
      modulus_ = candidate;
      return;
    }
    // increment with c_{k-1} as the fastest digit, so c_0 is most significant
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0) {
      if (++radix[pos] < p) break;
      radix[pos] = 0;
      --pos;
    }
    if (pos < 0) throw invalid_input("Field: no irreducible polynomial found");
  }
}

FElem Field::zero() const { return FElem(k_, 0); }

FElem Field::one() const {
  FElem e(k_, 0);
  e[0] = 1;
  return e;
}

FElem Field::from_int(std::uint64_t c) const {
  FElem e(k_, 0);
  e[0] = static_cast<std::uint32_t>(c % p_);
  return e;
}

bool Field::is_zero(const FElem& a) const {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

FElem Field::add(const FElem& a, const FElem& b) const {
  FElem r(k_);
  for (unsigned i = 0; i < k_; ++i) {
    r[i] = static_cast<std::uint32_t>((a[i] + static_cast<std::uint64_t>(b[i])) % p_);
  }
  return r;
}

FElem Field::sub(const FElem& a, const FElem& b) const {
  FElem r(k_);
  for (unsigned i = 0; i < k_; ++i) {
    r[i] = static_cast<std::uint32_t>((a[i] + p_ - b[i]) % p_);
  }
  return r;
}

FElem Field::neg(const FElem& a) const { return sub(zero(), a); }

FElem Field::mul(const FElem& a, const FElem& b) const {
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) {
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_;
    }
  }
  return reduce_product(std::move(prod));
}

FElem Field::reduce_product(std::vector<std::uint64_t> prod) const {
  // reduce degrees >= k using the monic modulus
  for (std::size_t d = prod.size(); d-- > k_;) {
    std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < k_; ++i) {
      std::uint64_t sub = c * modulus_[i] % p_;
      prod[d - k_ + i] = (prod[d - k_ + i] + p_ - sub) % p_;
    }
  }
  FElem r(k_);
  for (unsigned i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
  return r;
}

FElem Field::pow(const FElem& a, std::uint64_t e) const {
  FElem base = a;
  FElem r = one();
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FElem Field::inv(const FElem& a) const {
  if (is_zero(a)) throw invalid_input("Field: inversion of zero");
  return pow(a, size_ - 2);
}

FElem Field::frobenius(const FElem& a, unsigned e) const {
  e %= k_;
  FElem r = a;
  for (unsigned i = 0; i < e; ++i) r = pow(r, p_);
  return r;
}

FElem Field::suzuki_twist(const FElem& a) const {
  if (p_ != 2 || k_ % 2 == 0 || k_ < 3) {
    throw invalid_input("suzuki_twist: field must be GF(2^k) with k odd >= 3");
  }
  return pow(a, 1ull << ((k_ + 1) / 2));
}

std::uint64_t Field::index_of(const FElem& a) const {
  std::uint64_t idx = 0, base = 1;
  for (unsigned i = 0; i < k_; ++i) {
    idx += a[i] * base;
    base *= p_;
  }
  return idx;
}

FElem Field::from_index(std::uint64_t idx) const {
  FElem e(k_);
  for (unsigned i = 0; i < k_; ++i) {
    e[i] = static_cast<std::uint32_t>(idx % p_);
    idx /= p_;
  }
  return e;
}

std::uint64_t Field::element_order(const FElem& a) const {
  if (is_zero(a)) throw invalid_input("element_order: zero has no order");
  std::uint64_t n = size_ - 1;
  std::uint64_t ord = n;
  for (auto p : prime_support(n)) {
    while (ord % p == 0) {
      FElem t = pow(a, ord / p);
      if (t == one()) {
        ord /= p;
      } else {
        break;
      }
    }
  }
  return ord;
}

FElem Field::generator() const {
  for (std::uint64_t idx = 1; idx < size_; ++idx) {
    FElem a = from_index(idx);
    if (element_order(a) == size_ - 1) return a;
  }
  throw invalid_input("Field: no generator found");
}

}  // namespace submax
