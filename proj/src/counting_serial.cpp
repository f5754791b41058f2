#include <string>

#include "zm/counting.hpp"
#include "zm/error.hpp"

namespace zm::serial {

u64 k_prime(const ZmParams& p) {
  const u64 aut = aut_order(p);
  if (aut > kBurnsideBudget) throw Error(ErrorKind::Capacity, "Aut(G) exceeds the enumeration budget");
  u128 total = 0;
  for (const AutTriple& phi : enumerate_aut(p)) total += fix_size(p, phi);
  if (total % aut != 0) throw Error(ErrorKind::Internal, "k' Burnside sum is not divisible by |Aut|");
  return narrow(total / aut);
}

u64 k_conj(const ZmParams& p) {
  const u64 inn = checked_mul(p.m(), p.d());
  if (inn > kBurnsideBudget) throw Error(ErrorKind::Capacity, "Inn(G) exceeds the enumeration budget");
  u128 total = 0;
  for (u64 alpha = 0; alpha < p.d(); ++alpha)
    for (u64 beta = 0; beta < p.m(); ++beta) total += fix_size(p, inner_aut(p, alpha, beta));
  if (total % inn != 0) throw Error(ErrorKind::Internal, "k Burnside sum is not divisible by md");
  return narrow(total / inn);
}

}  // namespace zm::serial
