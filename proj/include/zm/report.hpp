#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zm/counting.hpp"
#include "zm/group.hpp"
#include "zm/oracle.hpp"

namespace zm {

struct Budgets {
  u64 elements = oracle::kElementOracleBudget;     // per-class listings, conjugacy oracle
  u64 automorphisms = oracle::kAutOracleBudget;    // default cap for verify
};

/// Reads ZMTOOL_BUDGET ("N" sets the element budget, "N:M" sets both).
/// Returns defaults when unset; throws Precondition when malformed.
Budgets budgets_from_env();
Budgets parse_budgets(const std::string& spec);

/// Above this |Aut(G)|, reports use k_prime_fast instead of the direct sum.
inline constexpr u64 kDirectAutLimit = 2'000'000;
u64 k_prime_auto(const ZmParams& p);

struct ClassRecord {
  GroupElement representative;  // least element of the class
  u64 class_size;
  u64 aut_orbit_size;
  u64 element_order;
  u64 centralizer_order;
};

/// One record per conjugacy class, ordered by (size, representative).
/// Classes are found by closing under conjugation by a and b; their sizes are
/// checked against orbit_size_conj. Throws Capacity when mn > budget.
std::vector<ClassRecord> class_records(const ZmParams& p, u64 budget);

struct ClassReport {
  u64 m, n, r, d;
  u64 group_order;
  u64 center_order;
  u64 aut_order;
  u64 k;
  u64 k_prime;
  ConjugacyBounds k_bounds;
  CountBounds k_prime_bounds;
  u64 subgroup_count;
  std::optional<std::vector<ClassRecord>> classes;
};

ClassReport build_report(const ZmParams& p, std::optional<u64> class_budget);

nlohmann::ordered_json to_json(const ClassReport& report);
nlohmann::ordered_json to_json(const ClassRecord& record);
std::string to_text(const ClassReport& report);

struct TableRow {
  u64 m, n, r, d, group_order, k, k_prime, subgroup_count;
};

inline constexpr const char* kTableHeader = "m,n,r,d,group_order,k,k_prime,subgroup_count";
std::string to_csv(const TableRow& row);

/// Every valid triple with m <= m_max, n <= n_max, ordered by (m, n, r).
std::vector<TableRow> table_rows(u64 m_max, u64 n_max);

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyResult {
  std::vector<Check> checks;
  bool ok() const;
  const Check* first_failure() const;
};

/// Closed forms against the brute-force oracle for one triple. Oracles run
/// with the given budget; throws Capacity when mn exceeds it.
VerifyResult verify(const ZmParams& p, u64 budget);

}  // namespace zm
