#include <doctest.h>

#include <algorithm>
#include <map>

#include "support.hpp"
#include "zm/error.hpp"
#include "zm/oracle.hpp"

using namespace zm;
using namespace zm::oracle;
using zm::testing::triples_up_to;

namespace {

std::vector<std::size_t> block_sizes(const Partition& part) {
  std::vector<std::size_t> s;
  for (const auto& b : part.blocks) s.push_back(b.size());
  return s;
}

// Block index of each element.
std::vector<std::size_t> labels(const ZmParams& p, const Partition& part) {
  std::vector<std::size_t> out(p.group_order());
  for (std::size_t i = 0; i < part.blocks.size(); ++i)
    for (const auto& g : part.blocks[i]) out[p.index_of(g)] = i;
  return out;
}

void check_partition(const ZmParams& p, const Partition& part) {
  std::vector<int> seen(p.group_order(), 0);
  for (std::size_t i = 0; i < part.blocks.size(); ++i) {
    const auto& b = part.blocks[i];
    REQUIRE(!b.empty());
    REQUIRE(std::is_sorted(b.begin(), b.end()));
    for (const auto& g : b) ++seen[p.index_of(g)];
    if (i > 0) {
      const auto& prev = part.blocks[i - 1];
      REQUIRE(std::pair(prev.size(), prev.front()) < std::pair(b.size(), b.front()));
    }
  }
  REQUIRE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
}

}  // namespace

TEST_CASE("conjugacy_partition examples") {
  const auto dic3 = conjugacy_partition(validate(3, 4, 2));
  CHECK(block_sizes(dic3) == std::vector<std::size_t>{1, 1, 2, 2, 3, 3});
  CHECK(conjugacy_partition(validate(1, 1, 0)).size() == 1);
  CHECK(conjugacy_partition(validate(1, 8, 0)).size() == 8);
}

TEST_CASE("aut_orbit_partition examples") {
  CHECK(aut_orbit_partition(validate(3, 4, 2)).size() == 5);
  CHECK(aut_orbit_partition(validate(1, 1, 0)).size() == 1);
  CHECK(aut_orbit_partition(validate(1, 5, 0)).size() == 2);
}

TEST_CASE("brute_force_automorphisms examples") {
  CHECK(brute_force_automorphisms(validate(3, 4, 2)).size() == 12);
  CHECK(brute_force_automorphisms(validate(1, 1, 0)).size() == 1);
  CHECK(brute_force_automorphisms(validate(1, 5, 0)).size() == 4);
}

TEST_CASE("fixed_set examples") {
  const auto p = validate(3, 4, 2);
  CHECK(fixed_set(p, {1, 0, 1}).size() == 12);
  CHECK(fixed_set(p, {2, 0, 1}) == std::vector<GroupElement>{{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  CHECK(fixed_set(p, {1, 1, 1}) == std::vector<GroupElement>{{0, 0}, {0, 1}, {0, 2}, {2, 0}, {2, 1}, {2, 2}});
}

TEST_CASE("orbit_and_stabilizer examples") {
  const auto p = validate(3, 4, 2);
  const auto e = orbit_and_stabilizer(p, p.identity(), Action::Conjugation);
  CHECK(e.orbit == std::vector<GroupElement>{{0, 0}});
  CHECK(e.stabilizer_size == p.m() * p.d());

  const auto a = orbit_and_stabilizer(p, p.gen_a(), Action::Conjugation);
  CHECK(a.orbit.size() == 2);
  CHECK(a.stabilizer_size == 3);
  CHECK(a.acting_order == 6);

  const auto b = orbit_and_stabilizer(p, p.gen_b(), Action::Automorphism);
  CHECK(b.orbit.size() == 6);
  CHECK(b.stabilizer_size == 2);
  CHECK(b.acting_order == 12);
}

TEST_CASE("brute_force_subgroups examples") {
  CHECK(brute_force_subgroups(validate(3, 4, 2)).size() == 8);
  CHECK(brute_force_subgroups(validate(1, 1, 0)).size() == 1);
  CHECK(brute_force_subgroups(validate(1, 4, 0)).size() == 3);
}

TEST_CASE("budgets are enforced") {
  const auto big = validate(1, 2001, 0);
  CHECK_THROWS_AS(conjugacy_partition(big), Error);
  CHECK_THROWS_AS(aut_orbit_partition(validate(1, 201, 0)), Error);
  CHECK_THROWS_AS(brute_force_subgroups(validate(1, 361, 0)), Error);
}

TEST_CASE("partitions are well formed and consistent (mn <= 200)") {
  for (const auto& p : triples_up_to(200)) {
    const auto conj = conjugacy_partition(p);
    const auto aut = aut_orbit_partition(p);
    check_partition(p, conj);
    check_partition(p, aut);

    for (const auto& block : conj.blocks)
      for (const auto& g : block) REQUIRE(element_order(p, g) == element_order(p, block.front()));

    // each conjugacy class lies inside one Aut-orbit
    const auto aut_label = labels(p, aut);
    for (const auto& block : conj.blocks)
      for (const auto& g : block) REQUIRE(aut_label[p.index_of(g)] == aut_label[p.index_of(block.front())]);
  }
}

TEST_CASE("Burnside consistency (mn <= 200)") {
  for (const auto& p : triples_up_to(200)) {
    const auto auts = brute_force_automorphisms(p);
    u64 fixed = 0;
    for (const auto& perm : auts)
      for (std::size_t i = 0; i < perm.size(); ++i) fixed += perm[i] == i;
    REQUIRE(fixed == auts.size() * aut_orbit_partition(p).size());

    u64 inner_fixed = 0;
    for (u64 alpha = 0; alpha < p.d(); ++alpha)
      for (u64 beta = 0; beta < p.m(); ++beta) inner_fixed += fixed_set(p, inner_aut(p, alpha, beta)).size();
    REQUIRE(inner_fixed == p.m() * p.d() * conjugacy_partition(p).size());
  }
}

TEST_CASE("automorphism search matches the triple enumeration (mn <= 200)") {
  for (const auto& p : triples_up_to(200)) {
    auto brute = brute_force_automorphisms(p);
    std::vector<Permutation> ours;
    for (const auto& phi : enumerate_aut(p)) ours.push_back(permutation_of(p, phi));
    std::sort(brute.begin(), brute.end());
    std::sort(ours.begin(), ours.end());
    REQUIRE(brute == ours);
  }
}

TEST_CASE("orbit times stabilizer is the acting order (mn <= 200)") {
  for (const auto& p : triples_up_to(200)) {
    for (auto action : {Action::Conjugation, Action::Automorphism}) {
      const ActionOracle oracle(p, action, kElementOracleBudget);
      for (const auto& g : all_elements(p)) {
        const auto os = oracle(g);
        REQUIRE(os.orbit.size() * os.stabilizer_size == os.acting_order);
      }
    }
  }
}

TEST_CASE("two-generator subgroup search matches full closure (mn <= 60)") {
  for (const auto& p : triples_up_to(kFullClosureBudget)) {
    auto two = brute_force_subgroups(p);
    auto full = brute_force_subgroups_full(p);
    std::sort(two.begin(), two.end());
    std::sort(full.begin(), full.end());
    REQUIRE(two == full);
    for (const auto& h : full) REQUIRE(is_subgroup(p, h));
  }
}

TEST_CASE("subgroup predicates on small cases") {
  const auto p = validate(3, 4, 2);
  const ElementSet a3{{0, 0}, {0, 1}, {0, 2}};
  const ElementSet b4{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  const ElementSet not_closed{{0, 0}, {1, 0}};
  CHECK(is_subgroup(p, a3));
  CHECK(is_normal_subgroup(p, a3));
  CHECK(is_cyclic_subgroup(p, a3));
  CHECK_FALSE(is_normal_subgroup(p, b4));
  CHECK(is_cyclic_subgroup(p, b4));
  CHECK_FALSE(is_subgroup(p, not_closed));
  CHECK_FALSE(is_cyclic_subgroup(p, all_elements(p)));
  CHECK_FALSE(are_conjugate(p, a3, b4));
  CHECK(are_conjugate(p, b4, {{0, 0}, {1, 1}, {2, 0}, {3, 1}}));
}
