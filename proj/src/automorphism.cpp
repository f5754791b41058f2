#include "zm/automorphism.hpp"

#include <string>

#include "zm/error.hpp"

namespace zm {

namespace {

u64 reduce(i64 x, u64 modulus) {
  const i64 sm = static_cast<i64>(modulus);
  return static_cast<u64>(((x % sm) + sm) % sm);
}

}  // namespace

bool is_aut_triple(const ZmParams& p, const AutTriple& t) {
  return t.x1 < p.m() && t.x2 < p.m() && t.y < p.n() && gcd(t.x1, p.m()) == 1 &&
         t.y % p.d() == 1 % p.d() && gcd(t.y, p.n()) == 1;
}

AutTriple make_aut(const ZmParams& p, i64 x1, i64 x2, i64 y) {
  AutTriple t{reduce(x1, p.m()), reduce(x2, p.m()), reduce(y, p.n())};
  if (gcd(t.x1, p.m()) != 1) throw Error(ErrorKind::InvalidAutomorphism, "gcd(x1,m) != 1");
  if (t.y % p.d() != 1 % p.d()) throw Error(ErrorKind::InvalidAutomorphism, "y != 1 (mod d)");
  if (gcd(t.y, p.n()) != 1) throw Error(ErrorKind::InvalidAutomorphism, "gcd(y,n) != 1");
  return t;
}

GroupElement apply_aut(const ZmParams& p, const AutTriple& phi, GroupElement g) {
  const u64 m = p.m();
  const u64 u = static_cast<u64>(static_cast<u128>(phi.y) * g.u % p.n());
  const u64 v = (mul_mod(phi.x1, g.v, m) + mul_mod(phi.x2, geom_sum_mod(p.r(), g.u, m), m)) % m;
  return {u, v};
}

std::vector<u64> aut_exponents(const ZmParams& p) {
  std::vector<u64> ys;
  for (u64 y = 1 % p.n(); y < p.n(); y += p.d()) {
    if (gcd(y, p.n()) == 1) ys.push_back(y);
    if (p.n() == 1) break;
  }
  return ys;
}

u64 aut_order(const ZmParams& p) {
  return checked_mul(checked_mul(p.m(), euler_phi(p.factors_m())),
                     units_congruent_to_one(p.n(), p.d()));
}

u64 aut_order_unrestricted(const ZmParams& p) {
  return checked_mul(checked_mul(p.m(), euler_phi(p.factors_m())), p.n() / p.d());
}

bool unit_condition_automatic(const ZmParams& p) {
  for (const auto& pe : p.factors_n())
    if (p.d() % pe.prime != 0) return false;
  return true;
}

AutRange::AutRange(const ZmParams& p) : m_(p.m()), ys_(aut_exponents(p)) {}

u64 AutRange::size() const {
  u64 units = 0;
  for (u64 x = 0; x < m_; ++x) units += gcd(x, m_) == 1;
  return checked_mul(checked_mul(m_, units), ys_.size());
}

AutRange::iterator::iterator(const AutRange* range, bool done) : range_(range), done_(done) {
  if (done_) return;
  cur_ = {0, 0, range_->ys_.empty() ? 0 : range_->ys_.front()};
  yi_ = 0;
  done_ = range_->ys_.empty();
  if (!done_) settle_x1();
}

void AutRange::iterator::settle_x1() {
  while (cur_.x1 < range_->m_ && gcd(cur_.x1, range_->m_) != 1) ++cur_.x1;
  if (cur_.x1 >= range_->m_) done_ = true;
}

AutRange::iterator& AutRange::iterator::operator++() {
  if (done_) return *this;
  if (++yi_ < range_->ys_.size()) {
    cur_.y = range_->ys_[yi_];
    return *this;
  }
  yi_ = 0;
  cur_.y = range_->ys_.front();
  if (++cur_.x2 < range_->m_) return *this;
  cur_.x2 = 0;
  ++cur_.x1;
  settle_x1();
  return *this;
}

AutTriple inner_aut(const ZmParams& p, u64 alpha, u64 beta) {
  const u64 m = p.m();
  const u64 one_minus_r = (1 + m - p.r()) % m;
  return {pow_mod(p.r(), alpha, m), mul_mod(beta % m, one_minus_r, m), 1 % p.n()};
}

FixParameters fix_parameters(const ZmParams& p, const AutTriple& phi) {
  const u64 m = p.m();
  const u64 n = p.n();
  const u64 e = gcd(m, (phi.x1 + m - 1) % m);
  const u64 q = e / gcd(e, phi.x2);
  const u64 shift_gcd = gcd(n, (phi.y + n - 1) % n);
  return {m / e, lcm(n / shift_gcd, mult_order(p.r(), q))};
}

u64 fix_size(const ZmParams& p, const AutTriple& phi) {
  const auto [m1, n1] = fix_parameters(p, phi);
  return p.m() / m1 * (p.n() / n1);
}

}  // namespace zm
