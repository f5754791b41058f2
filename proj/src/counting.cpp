#include "zm/counting.hpp"

#include <algorithm>
#include <map>
#include <string>

#include <omp.h>

#include "zm/error.hpp"

namespace zm {

// ---------------------------------------------------------------------------
// Ratio

namespace {

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string to_string128(u128 x) {
  if (x == 0) return "0";
  std::string s;
  while (x > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

u64 exact_div(u128 num, u128 den, const char* what) {
  if (den == 0 || num % den != 0) {
    throw Error(ErrorKind::Internal, std::string(what) + ": " + to_string128(num) +
                                         " is not divisible by " + to_string128(den));
  }
  return narrow(num / den);
}

}  // namespace

Ratio::Ratio(u128 num, u128 den) {
  if (den == 0) throw Error(ErrorKind::Precondition, "zero denominator");
  const u128 g = gcd128(num, den);
  num_ = narrow(num / (g == 0 ? 1 : g));
  den_ = narrow(den / (g == 0 ? 1 : g));
}

std::string Ratio::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering Ratio::operator<=>(const Ratio& o) const {
  return static_cast<u128>(num_) * o.den_ <=> static_cast<u128>(o.num_) * den_;
}

// ---------------------------------------------------------------------------
// Burnside kernels

namespace {

// o_q(r) for every q | m, looked up by binary search over the divisor list.
class OrderTable {
 public:
  explicit OrderTable(const ZmParams& p) : divs_(p.divisors_m()), orders_(divs_.size()) {
    for (std::size_t i = 0; i < divs_.size(); ++i) orders_[i] = mult_order(p.r(), divs_[i]);
  }
  u64 operator()(u64 q) const {
    auto it = std::lower_bound(divs_.begin(), divs_.end(), q);
    return orders_[static_cast<std::size_t>(it - divs_.begin())];
  }

 private:
  std::vector<u64> divs_;
  std::vector<u64> orders_;
};

void require_budget(u64 terms, const char* what) {
  if (terms > kBurnsideBudget) {
    throw Error(ErrorKind::Capacity, std::string(what) + " sum has " + std::to_string(terms) +
                                         " terms, above the enumeration budget");
  }
}

}  // namespace

u64 k_prime(const ZmParams& p) {
  const u64 aut = aut_order(p);
  require_budget(aut, "Aut(G)");
  const u64 m = p.m();
  const u64 n = p.n();
  const OrderTable order(p);

  // n / (n, y - 1) for each admissible y
  std::vector<u64> y_part;
  for (u64 y : aut_exponents(p)) y_part.push_back(n / gcd(n, (y + n - 1) % n));

  const auto m_signed = static_cast<long long>(m);
  u128 total = 0;
#pragma omp parallel
  {
    u128 local = 0;
#pragma omp for schedule(dynamic, 16)
    for (long long i = 0; i < m_signed; ++i) {
      const u64 x1 = static_cast<u64>(i);
      if (gcd(x1, m) != 1) continue;
      const u64 e = gcd(m, (x1 + m - 1) % m);
      for (u64 x2 = 0; x2 < m; ++x2) {
        const u64 o = order(e / gcd(e, x2));
        for (u64 ny : y_part) local += e * (n / lcm(ny, o));
      }
    }
#pragma omp critical
    total += local;
  }
  return exact_div(total, aut, "k' Burnside sum");
}

u64 k_conj(const ZmParams& p) {
  const u64 m = p.m();
  const u64 n = p.n();
  const u64 d = p.d();
  const u64 inn = checked_mul(m, d);
  require_budget(inn, "Inn(G)");
  const OrderTable order(p);
  const u64 one_minus_r = (1 + m - p.r()) % m;

  const auto d_signed = static_cast<long long>(d);
  u128 total = 0;
#pragma omp parallel
  {
    u128 local = 0;
#pragma omp for schedule(dynamic, 1)
    for (long long i = 0; i < d_signed; ++i) {
      // conjugation by b^alpha a^beta is the triple (r^alpha, beta (1 - r), 1)
      const u64 x1 = pow_mod(p.r(), static_cast<u64>(i), m);
      const u64 e = gcd(m, (x1 + m - 1) % m);
      u64 x2 = 0;
      for (u64 beta = 0; beta < m; ++beta) {
        local += e * (n / order(e / gcd(e, x2)));
        x2 = (x2 + one_minus_r) % m;
      }
    }
#pragma omp critical
    total += local;
  }
  return exact_div(total, inn, "k Burnside sum");
}

// ---------------------------------------------------------------------------
// Regrouped k'

namespace {

// #{x in [0,m) : gcd(x,m) = 1, gcd(x-1,m) = e}, multiplicative over p^a || m.
u64 units_with_shift_gcd(const Factorization& fm, u64 e) {
  u64 count = 1;
  for (const auto& [prime, a] : fm) {
    unsigned b = 0;
    for (u64 t = e; t % prime == 0; t /= prime) ++b;
    u64 local;
    if (b == 0) {
      local = prime - 2;
      for (unsigned k = 1; k < a; ++k) local *= prime;
    } else if (b < a) {
      local = prime - 1;
      for (unsigned k = b + 1; k < a; ++k) local *= prime;
    } else {
      local = 1;
    }
    count *= local;
  }
  return count;
}

}  // namespace

u64 k_prime_fast(const ZmParams& p) {
  const u64 m = p.m();
  const u64 n = p.n();
  const OrderTable order(p);

  std::map<u64, u64> y_hist;  // n / (n, y - 1) -> multiplicity
  for (u64 y : aut_exponents(p)) ++y_hist[n / gcd(n, (y + n - 1) % n)];

  // sum over e = (m, x1 - 1), then q = e / (e, x2): x2 hits each such class
  // (m/e) phi(q) times.
  u128 total = 0;
  for (u64 e : p.divisors_m()) {
    const u64 x1_count = units_with_shift_gcd(p.factors_m(), e);
    if (x1_count == 0) continue;
    u128 inner = 0;
    for (u64 q : divisors(e)) {
      const u64 o = order(q);
      u128 over_y = 0;
      for (const auto& [ny, mult] : y_hist) over_y += static_cast<u128>(mult) * (n / lcm(ny, o));
      inner += static_cast<u128>(m / e) * euler_phi(q) * over_y;
    }
    total += static_cast<u128>(x1_count) * e * inner;
  }
  return exact_div(total, aut_order(p), "regrouped k' sum");
}

u64 k_prime_prime_n(const ZmParams& p) {
  if (!is_prime(p.n()) || p.d() != p.n()) {
    throw Error(ErrorKind::Precondition, "k_prime_prime_n needs n prime and d = n");
  }
  return p.n() - 1 + tau(p.factors_m());
}

// ---------------------------------------------------------------------------
// S and the closed forms for k

namespace {

u64 shifted_power_gcd_sum(const ZmParams& p, u64 terms) {
  const u64 m = p.m();
  u64 total = 0;
  u64 power = 1 % m;
  for (u64 alpha = 0; alpha < terms; ++alpha) {
    total += gcd(m, (power + m - 1) % m);
    power = mul_mod(power, p.r(), m);
  }
  return total;
}

}  // namespace

u64 s_sum(const ZmParams& p) { return shifted_power_gcd_sum(p, p.d()); }

u64 k_conj_prime_d(const ZmParams& p) {
  const u64 d = p.d();
  if (!is_prime(d)) throw Error(ErrorKind::Precondition, "k_conj_prime_d needs d prime");
  const u128 num = static_cast<u128>(p.n()) * (d * (d - 1) + s_sum(p));
  return exact_div(num, static_cast<u128>(d) * d, "prime-d class count");
}

u64 k_conj_prime_n(const ZmParams& p) {
  const u64 n = p.n();
  if (!is_prime(n)) throw Error(ErrorKind::Precondition, "k_conj_prime_n needs n prime");
  return n - 1 + exact_div(shifted_power_gcd_sum(p, n), n, "prime-n class count");
}

// ---------------------------------------------------------------------------
// Bounds

namespace {

CountBounds make_bounds(Ratio lo, Ratio hi) { return {lo.ceil(), hi.ceil(), lo, hi}; }

CountBounds collapsed(u64 k) { return make_bounds(Ratio(k), Ratio(k)); }

}  // namespace

CountBounds k_prime_bounds(const ZmParams& p) {
  if (p.m() == 1) return collapsed(k_prime_fast(p));
  const u64 d = p.d();
  const u64 t = tau(p.factors_m());
  const u128 upper = static_cast<u128>(d) * d * f_closed(p.n() / d) * t;
  return make_bounds(Ratio(t), Ratio(upper, p.n()));
}

Ratio k_prime_upper_admissible(const ZmParams& p) {
  const u64 n = p.n();
  const auto ys = aut_exponents(p);
  u128 total = 0;
  for (u64 y : ys) total += gcd(n, (y + n - 1) % n);
  return Ratio(total * tau(p.factors_m()), ys.size());
}

ConjugacyBounds k_conj_bounds(const ZmParams& p) {
  if (p.m() == 1) return {collapsed(p.n()), collapsed(p.n())};
  const u64 m = p.m();
  const u64 n = p.n();
  const u64 d = p.d();
  const u64 sp = smallest_prime_factor(d);
  const u64 S = s_sum(p);
  const u64 phi_tau = euler_phi(p.factors_m()) * tau(p.factors_m());
  ConjugacyBounds out{
      make_bounds(Ratio(static_cast<u128>(n) * (d * (d - 1) + S), static_cast<u128>(d) * d),
                  Ratio(static_cast<u128>(n) * (d * sp - d + S), static_cast<u128>(d) * sp)),
      make_bounds(Ratio(static_cast<u128>(n) * (m + d * d - 1), static_cast<u128>(d) * d),
                  Ratio(static_cast<u128>(n) * (phi_tau + d * (sp - 1)), static_cast<u128>(d) * sp)),
  };
  return out;
}

// ---------------------------------------------------------------------------
// Orbit sizes

namespace {

struct ElementGcds {
  u64 c;      // (m, [u]_r)
  u64 gstar;  // (m, [u]_r) / (m, [u]_r, v)
};

ElementGcds element_gcds(const ZmParams& p, GroupElement g) {
  const u64 c = gcd(p.m(), geom_sum_mod(p.r(), g.u, p.m()));
  return {c, c / gcd(c, g.v)};
}

}  // namespace

u64 orbit_size_aut(const ZmParams& p, GroupElement g) {
  const auto [c, gstar] = element_gcds(p, g);
  const u64 n = p.n();
  // y stabilizes b^u iff y = 1 mod lcm(d, n/(n,u)); x1, x2 contribute
  // (m,[u]_r) phi(m) / phi(g*) pairs.
  const u64 step = lcm(p.d(), n / gcd(n, g.u));
  const u128 num = static_cast<u128>(p.m()) * euler_phi(gstar) * units_congruent_to_one(n, p.d());
  const u128 den = static_cast<u128>(units_congruent_to_one(n, step)) * c;
  return exact_div(num, den, "Aut-orbit size");
}

u64 orbit_size_aut_unrestricted(const ZmParams& p, GroupElement g) {
  const auto [c, gstar] = element_gcds(p, g);
  const u64 n = p.n();
  const u64 nu = gcd(n, g.u);
  const u128 h = static_cast<u128>(nu) * gcd(n / nu, p.d());
  return exact_div(static_cast<u128>(p.m()) * n * euler_phi(gstar), h * c,
                   "unrestricted Aut-orbit size");
}

u64 orbit_size_conj(const ZmParams& p, GroupElement g) {
  const auto [c, gstar] = element_gcds(p, g);
  return checked_mul(p.m() / c, mult_order(p.r(), gstar));
}

u64 centralizer_order(const ZmParams& p, GroupElement g) {
  return p.group_order() / orbit_size_conj(p, g);
}

}  // namespace zm
