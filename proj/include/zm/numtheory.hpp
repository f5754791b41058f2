#pragma once

// Exact integer kernels. Operands are unsigned 64-bit; products are formed in
// 128 bits and anything that would not fit back into 64 bits raises
// ErrorKind::Capacity instead of wrapping.

#include <cstdint>
#include <vector>

namespace zm {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

struct PrimePower {
  u64 prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization, primes strictly increasing. factorize(1) is empty.
using Factorization = std::vector<PrimePower>;

u64 gcd(u64 a, u64 b);
u64 gcd3(u64 a, u64 b, u64 c);
u64 lcm(u64 a, u64 b);

/// a*b, throwing on 64-bit overflow.
u64 checked_mul(u64 a, u64 b);
/// Narrow a 128-bit intermediate, throwing if it does not fit.
u64 narrow(u128 x);

Factorization factorize(u64 n);
/// Sorted list of positive divisors.
std::vector<u64> divisors(u64 n);
std::vector<u64> divisors(const Factorization& f);
bool is_prime(u64 n);
/// Smallest prime dividing n; 0 for n = 1.
u64 smallest_prime_factor(u64 n);

u64 euler_phi(u64 n);
u64 euler_phi(const Factorization& f);
u64 tau(u64 n);
u64 tau(const Factorization& f);

u64 mul_mod(u64 a, u64 b, u64 modulus);
u64 pow_mod(u64 base, u64 exp, u64 modulus);

/// Least t >= 1 with r^t = 1 (mod k). Throws NoOrder if k > 1 and gcd(r,k) != 1.
u64 mult_order(u64 r, u64 k);

/// 1 + r + ... + r^(u-1) mod modulus (0 when u = 0), O(log u).
u64 geom_sum_mod(u64 r, u64 u, u64 modulus);

/// Sum over units x mod m of gcd(x-1, m).
u64 menon_sum(u64 m);

/// Sum of gcd(alpha, beta) over beta in [0, alpha).
u64 f_direct(u64 alpha);
/// Multiplicative closed form of f_direct.
u64 f_closed(u64 alpha);

/// Number of y in [0,n) with y = 1 (mod step) and gcd(y,n) = 1. Requires step | n.
u64 units_congruent_to_one(u64 n, u64 step);

}  // namespace zm
