#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace submax {

class invalid_input : public std::runtime_error {
 public:
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic primality by trial division. All inputs here are desk scale.
bool is_prime(std::uint64_t n);

// Set of prime divisors of n, sorted. Rejects n = 0.
std::vector<std::uint64_t> prime_support(std::uint64_t n);

// A finite set of primes, kept sorted and duplicate-free.
class PrimeSet {
 public:
  PrimeSet() = default;
  explicit PrimeSet(std::vector<std::uint64_t> primes);
  PrimeSet(std::initializer_list<std::uint64_t> primes)
      : PrimeSet(std::vector<std::uint64_t>(primes)) {}

  bool contains(std::uint64_t p) const;
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

  // pi restricted to the prime support of n (pi intersect pi(n)).
  PrimeSet intersect_support(std::uint64_t n) const;
  PrimeSet intersect(const PrimeSet& other) const;

  bool operator==(const PrimeSet&) const = default;

  std::string to_string() const;

 private:
  std::vector<std::uint64_t> primes_;
};

// Greatest divisor of n supported on pi. pi_part(n, pi) * pi_part(n, pi') = n.
std::uint64_t pi_part(std::uint64_t n, const PrimeSet& pi);

// pi'-part: the cofactor n / pi_part(n, pi).
std::uint64_t pi_prime_part(std::uint64_t n, const PrimeSet& pi);

bool is_pi_number(std::uint64_t n, const PrimeSet& pi);

// True iff q mod modulus lies in the residue set (residues reduced first;
// negative residues allowed).
bool congruence_in(std::int64_t q, const std::vector<std::int64_t>& residues,
                   std::uint64_t modulus);

enum class Family { L2_2P, L2_3P, L2_PRIME, SZ, L3_3 };

struct FamilyKey {
  Family family;
  std::uint64_t q;  // ignored for L3_3 (normalised to 3)
};

// Membership in Thompson's list of minimal simple groups:
//   L2(2^p) p prime; L2(3^p) p odd prime; L2(p) p>3 prime with p^2+1 = 0 (5);
//   Sz(2^p) p odd prime; L3(3).
bool thompson_family_check(const FamilyKey& key);

// Diagnostic for a failed check, naming the violated condition.
std::string thompson_family_diagnostic(const FamilyKey& key);

std::string family_name(Family f);
bool parse_family(const std::string& s, Family& out);

// Characteristic exponent: for q = r^p returns p, or 0 if q is not a power of
// the given prime r.
unsigned prime_power_exponent(std::uint64_t q, std::uint64_t r);

}  // namespace submax
