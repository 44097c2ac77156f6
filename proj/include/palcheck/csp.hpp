#pragma once

// Small complete solver for table-constrained CSPs: variables over finite
// integer domains, each constraint a scope of variables plus a shared list
// of allowed value rows. Backtracking in a caller-fixed variable order with
// forward checking (surviving-row filtering and domain narrowing after each
// assignment). Because the variable order is static and values are tried
// ascending, the first witness found is the lexicographically least
// solution with respect to that order.

#include <cstdint>
#include <vector>

namespace palcheck {

struct TableConstraint {
  std::vector<int> vars;  // scope: variable indices, repeats allowed
  const std::vector<std::vector<int>>* rows;  // allowed rows, not owned
};

enum class CspStatus { witness, none, unknown };

struct CspResult {
  CspStatus status = CspStatus::none;
  std::vector<int> assignment;  // complete assignment when status==witness
  uint64_t nodes = 0;           // value-assignment attempts performed
};

// `domains[v]` lists candidate values for variable v in ascending order;
// `var_order` is a permutation of 0..num_vars-1; `node_budget` caps
// value-assignment attempts (0 = unlimited) and exhaustion yields status
// unknown. A `none` result is an exhaustive refutation.
CspResult solve_table_csp(int num_vars,
                          const std::vector<std::vector<int>>& domains,
                          const std::vector<TableConstraint>& constraints,
                          const std::vector<int>& var_order,
                          uint64_t node_budget = 0);

}  // namespace palcheck
