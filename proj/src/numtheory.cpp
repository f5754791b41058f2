#include "zm/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "zm/error.hpp"

namespace zm {

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 gcd3(u64 a, u64 b, u64 c) { return gcd(gcd(a, b), c); }

u64 checked_mul(u64 a, u64 b) {
  u64 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::Capacity,
                "product " + std::to_string(a) + " * " + std::to_string(b) + " exceeds 64 bits");
  }
  return out;
}

u64 narrow(u128 x) {
  if (x > std::numeric_limits<u64>::max()) {
    throw Error(ErrorKind::Capacity, "intermediate value exceeds 64 bits");
  }
  return static_cast<u64>(x);
}

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) throw Error(ErrorKind::Precondition, "lcm requires positive arguments");
  return checked_mul(a / gcd(a, b), b);
}

Factorization factorize(u64 n) {
  if (n == 0) throw Error(ErrorKind::Precondition, "factorize(0)");
  Factorization out;
  auto strip = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel
  for (u64 p = 5; p <= n / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> divisors(u64 n) { return divisors(factorize(n)); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].exponent == 1;
}

u64 smallest_prime_factor(u64 n) {
  if (n <= 1) return 0;
  return factorize(n).front().prime;
}

u64 euler_phi(const Factorization& f) {
  u64 out = 1;
  for (const auto& [p, e] : f) {
    out *= p - 1;
    for (unsigned k = 1; k < e; ++k) out *= p;
  }
  return out;
}

u64 euler_phi(u64 n) { return euler_phi(factorize(n)); }

u64 tau(const Factorization& f) {
  u64 out = 1;
  for (const auto& pe : f) out *= pe.exponent + 1;
  return out;
}

u64 tau(u64 n) { return tau(factorize(n)); }

u64 mul_mod(u64 a, u64 b, u64 modulus) {
  return static_cast<u64>(static_cast<u128>(a) * b % modulus);
}

u64 pow_mod(u64 base, u64 exp, u64 modulus) {
  if (modulus == 0) throw Error(ErrorKind::Precondition, "pow_mod with modulus 0");
  u64 result = 1 % modulus;
  base %= modulus;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exp >>= 1;
  }
  return result;
}

u64 mult_order(u64 r, u64 k) {
  if (k == 0) throw Error(ErrorKind::Precondition, "mult_order modulus 0");
  if (k == 1) return 1;
  r %= k;
  if (gcd(r, k) != 1) {
    throw Error(ErrorKind::NoOrder,
                std::to_string(r) + " is not a unit modulo " + std::to_string(k));
  }
  u64 t = 1;
  u64 x = r;
  while (x != 1) {
    x = mul_mod(x, r, k);
    ++t;
  }
  return t;
}

u64 geom_sum_mod(u64 r, u64 u, u64 modulus) {
  if (modulus == 0) throw Error(ErrorKind::Precondition, "geom_sum_mod with modulus 0");
  r %= modulus;
  // (sum, power) = ([t]_r, r^t), walking the bits of u from the top:
  // [2t] = [t](1 + r^t), [t+1] = [t] r + 1.
  u64 sum = 0;
  u64 power = 1 % modulus;
  for (int bit = std::bit_width(u) - 1; bit >= 0; --bit) {
    sum = mul_mod(sum, (1 + power) % modulus, modulus);
    power = mul_mod(power, power, modulus);
    if ((u >> bit) & 1) {
      sum = (mul_mod(sum, r, modulus) + 1) % modulus;
      power = mul_mod(power, r, modulus);
    }
  }
  return sum;
}

u64 menon_sum(u64 m) {
  if (m == 0) throw Error(ErrorKind::Precondition, "menon_sum(0)");
  u64 total = 0;
  for (u64 x = 0; x < m; ++x) {
    if (gcd(x, m) != 1) continue;
    total += gcd((x + m - 1) % m, m);
  }
  return total;
}

u64 f_direct(u64 alpha) {
  if (alpha == 0) throw Error(ErrorKind::Precondition, "f_direct(0)");
  u64 total = 0;
  for (u64 beta = 0; beta < alpha; ++beta) total += gcd(alpha, beta);
  return total;
}

u64 f_closed(u64 alpha) {
  if (alpha == 0) throw Error(ErrorKind::Precondition, "f_closed(0)");
  // p^e (e + 1 - e/p) = p^(e-1) (p(e+1) - e)
  u64 out = 1;
  for (const auto& [p, e] : factorize(alpha)) {
    u64 term = checked_mul(p, e + 1) - e;
    for (unsigned k = 1; k < e; ++k) term = checked_mul(term, p);
    out = checked_mul(out, term);
  }
  return out;
}

u64 units_congruent_to_one(u64 n, u64 step) {
  if (n == 0 || step == 0 || n % step != 0) {
    throw Error(ErrorKind::Precondition, "units_congruent_to_one requires step | n");
  }
  u64 count = n / step;
  for (const auto& pe : factorize(n)) {
    if (step % pe.prime == 0) continue;
    count = count / pe.prime * (pe.prime - 1);
  }
  return count;
}

}  // namespace zm
