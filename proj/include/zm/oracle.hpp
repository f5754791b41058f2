#pragma once

// Brute-force ground truth built only from element arithmetic: orbits, fixed
// sets, stabilizers, automorphisms found by generator-image search, and
// subgroups found by closure. Nothing here calls the counting formulas.

#include <cstdint>
#include <vector>

#include "zm/automorphism.hpp"
#include "zm/group.hpp"

namespace zm::oracle {

inline constexpr u64 kElementOracleBudget = 2000;
inline constexpr u64 kAutOracleBudget = 200;
inline constexpr u64 kSubgroupOracleBudget = 360;
inline constexpr u64 kFullClosureBudget = 60;

/// Orbits; each block sorted, blocks ordered by (size, first element).
struct Partition {
  std::vector<std::vector<GroupElement>> blocks;
  std::size_t size() const { return blocks.size(); }
};

/// Images of all_elements() indices.
using Permutation = std::vector<std::uint32_t>;

/// Element set of a subgroup, sorted.
using ElementSet = std::vector<GroupElement>;

enum class Action { Conjugation, Automorphism };

struct OrbitStabilizer {
  std::vector<GroupElement> orbit;  // sorted
  u64 stabilizer_size;
  u64 acting_order;  // |Inn(G)| or |Aut(G)| as found by brute force
};

Partition conjugacy_partition(const ZmParams& p, u64 budget = kElementOracleBudget);
Partition aut_orbit_partition(const ZmParams& p, u64 budget = kAutOracleBudget);

/// Every bijective map extending a -> g1, b -> g2 that respects the defining relations.
std::vector<Permutation> brute_force_automorphisms(const ZmParams& p, u64 budget = kAutOracleBudget);
/// The permutation of all_elements() induced by a triple.
Permutation permutation_of(const ZmParams& p, const AutTriple& phi);

std::vector<GroupElement> fixed_set(const ZmParams& p, const AutTriple& phi,
                                    u64 budget = kElementOracleBudget);

/// Orbit-stabilizer data for many elements of one group; the acting group
/// (center or automorphism list) is computed once.
class ActionOracle {
 public:
  ActionOracle(const ZmParams& p, Action action, u64 budget);
  OrbitStabilizer operator()(GroupElement g) const;
  u64 acting_order() const { return acting_order_; }

 private:
  ZmParams p_;
  Action action_;
  ElementArithmetic arith_;
  std::vector<Permutation> auts_;
  u64 acting_order_ = 0;
};

OrbitStabilizer orbit_and_stabilizer(const ZmParams& p, GroupElement g, Action action,
                                     u64 budget = kElementOracleBudget);

u64 brute_force_centralizer_order(const ZmParams& p, GroupElement g);
std::vector<GroupElement> brute_force_center(const ZmParams& p, u64 budget = kElementOracleBudget);

/// Closures <g,h> over all pairs; sorted by (size, elements).
std::vector<ElementSet> brute_force_subgroups(const ZmParams& p, u64 budget = kSubgroupOracleBudget);
/// Closure of the cyclic subgroups under joins, with no 2-generator assumption.
std::vector<ElementSet> brute_force_subgroups_full(const ZmParams& p, u64 budget = kFullClosureBudget);

/// Label per subgroup; equal labels mean conjugate. The list must be closed under conjugation.
std::vector<std::size_t> subgroup_conjugacy_classes(const ZmParams& p, const std::vector<ElementSet>& subgroups);

bool is_subgroup(const ZmParams& p, const ElementSet& h);
bool is_normal_subgroup(const ZmParams& p, const ElementSet& h);
bool is_cyclic_subgroup(const ZmParams& p, const ElementSet& h);
bool are_conjugate(const ZmParams& p, const ElementSet& h1, const ElementSet& h2);

}  // namespace zm::oracle
