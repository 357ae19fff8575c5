#include "submax/pi_arith.hpp"

#include <algorithm>
#include <sstream>

namespace submax {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_support(std::uint64_t n) {
  if (n == 0) throw invalid_input("prime_support: n must be positive");
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  for (auto p : primes_) {
    if (!is_prime(p)) {
      throw invalid_input("PrimeSet: " + std::to_string(p) + " is not prime");
    }
  }
}

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

PrimeSet PrimeSet::intersect_support(std::uint64_t n) const {
  std::vector<std::uint64_t> out;
  for (auto p : prime_support(n)) {
    if (contains(p)) out.push_back(p);
  }
  PrimeSet r;
  r.primes_ = std::move(out);
  return r;
}

PrimeSet PrimeSet::intersect(const PrimeSet& other) const {
  std::vector<std::uint64_t> out;
  std::set_intersection(primes_.begin(), primes_.end(), other.primes_.begin(),
                        other.primes_.end(), std::back_inserter(out));
  PrimeSet r;
  r.primes_ = std::move(out);
  return r;
}

std::string PrimeSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) os << ',';
    os << primes_[i];
  }
  os << '}';
  return os.str();
}

std::uint64_t pi_part(std::uint64_t n, const PrimeSet& pi) {
  if (n == 0) throw invalid_input("pi_part: n must be positive");
  std::uint64_t m = 1;
  for (auto p : pi.primes()) {
    while (n % p == 0) {
      n /= p;
      m *= p;
    }
  }
  return m;
}

std::uint64_t pi_prime_part(std::uint64_t n, const PrimeSet& pi) {
  return n / pi_part(n, pi);
}

bool is_pi_number(std::uint64_t n, const PrimeSet& pi) {
  return pi_part(n, pi) == n;
}

bool congruence_in(std::int64_t q, const std::vector<std::int64_t>& residues,
                   std::uint64_t modulus) {
  if (modulus < 2) throw invalid_input("congruence_in: modulus must be >= 2");
  const auto m = static_cast<std::int64_t>(modulus);
  auto reduce = [m](std::int64_t x) { return ((x % m) + m) % m; };
  const std::int64_t qr = reduce(q);
  for (auto r : residues) {
    if (reduce(r) == qr) return true;
  }
  return false;
}

unsigned prime_power_exponent(std::uint64_t q, std::uint64_t r) {
  if (q < 2 || r < 2) return 0;
  unsigned e = 0;
  while (q % r == 0) {
    q /= r;
    ++e;
  }
  return q == 1 ? e : 0;
}

namespace {
constexpr std::uint64_t kMaxQ = (1ull << 31) - 1;
}

bool thompson_family_check(const FamilyKey& key) {
  if (key.family == Family::L3_3) return true;
  const std::uint64_t q = key.q;
  if (q < 2 || q > kMaxQ) return false;
  switch (key.family) {
    case Family::L2_2P: {
      unsigned p = prime_power_exponent(q, 2);
      return p > 0 && is_prime(p);
    }
    case Family::L2_3P: {
      unsigned p = prime_power_exponent(q, 3);
      return p > 2 && is_prime(p);
    }
    case Family::L2_PRIME:
      return q > 3 && is_prime(q) && (q * q + 1) % 5 == 0;
    case Family::SZ: {
      unsigned p = prime_power_exponent(q, 2);
      return p > 2 && is_prime(p);
    }
    default:
      return false;
  }
}

std::string thompson_family_diagnostic(const FamilyKey& key) {
  const std::uint64_t q = key.q;
  if (key.family != Family::L3_3 && (q < 2 || q > kMaxQ))
    return "q out of range [2, 2^31-1]";
  switch (key.family) {
    case Family::L2_2P: {
      unsigned p = prime_power_exponent(q, 2);
      if (p == 0) return "q must be a power of 2";
      if (!is_prime(p)) return "exponent of q = 2^" + std::to_string(p) + " is not prime";
      return "";
    }
    case Family::L2_3P: {
      unsigned p = prime_power_exponent(q, 3);
      if (p == 0) return "q must be a power of 3";
      if (p == 1) return "q = 3 is excluded (exponent 1)";
      if (p % 2 == 0) return "exponent of q = 3^" + std::to_string(p) + " must be odd";
      if (!is_prime(p)) return "exponent of q = 3^" + std::to_string(p) + " is not prime";
      return "";
    }
    case Family::L2_PRIME: {
      if (!is_prime(q)) return "q must be prime";
      if (q <= 3) return "q must exceed 3";
      if ((q * q + 1) % 5 != 0) return "q^2+1 must be divisible by 5";
      return "";
    }
    case Family::SZ: {
      unsigned p = prime_power_exponent(q, 2);
      if (p == 0) return "q must be a power of 2";
      if (p % 2 == 0) return "exponent of q = 2^" + std::to_string(p) + " must be odd";
      if (p == 1) return "q = 2 is excluded";
      if (!is_prime(p)) return "exponent of q = 2^" + std::to_string(p) + " is not prime";
      return "";
    }
    case Family::L3_3:
      return "";
  }
  return "unknown family";
}

std::string family_name(Family f) {
  switch (f) {
    case Family::L2_2P: return "l2-2p";
    case Family::L2_3P: return "l2-3p";
    case Family::L2_PRIME: return "l2-prime";
    case Family::SZ: return "sz";
    case Family::L3_3: return "l3-3";
  }
  return "?";
}

bool parse_family(const std::string& s, Family& out) {
  if (s == "l2-2p") { out = Family::L2_2P; return true; }
  if (s == "l2-3p") { out = Family::L2_3P; return true; }
  if (s == "l2-prime") { out = Family::L2_PRIME; return true; }
  if (s == "sz") { out = Family::SZ; return true; }
  if (s == "l3-3") { out = Family::L3_3; return true; }
  return false;
}

}  // namespace submax
