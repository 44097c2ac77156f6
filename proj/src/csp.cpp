#include "palcheck/csp.hpp"

#include <algorithm>

#include "palcheck/errors.hpp"

namespace palcheck {

namespace {

struct Solver {
  const std::vector<TableConstraint>& constraints;
  std::vector<std::vector<int>> domains;          // current candidates
  std::vector<std::vector<int>> alive;            // surviving row indices
  std::vector<std::vector<int>> watching;         // var -> constraint ids
  std::vector<int> assignment;
  const std::vector<int>& var_order;
  uint64_t node_budget;
  uint64_t nodes = 0;

  enum class Step { none, witness, unknown };

  // Restores domains and alive-row lists saved since a choice point.
  struct Trail {
    std::vector<std::pair<int, std::vector<int>>> saved_domains;
    std::vector<std::pair<size_t, std::vector<int>>> saved_alive;
  };

  bool propagate(int var, int value, Trail& trail) {
    for (const int ci : watching[static_cast<size_t>(var)]) {
      const TableConstraint& c = constraints[static_cast<size_t>(ci)];
      const auto& rows = *c.rows;
      std::vector<int> survivors;
      survivors.reserve(alive[static_cast<size_t>(ci)].size());
      for (const int r : alive[static_cast<size_t>(ci)]) {
        bool ok = true;
        for (size_t p = 0; p < c.vars.size(); ++p) {
          if (c.vars[p] == var &&
              rows[static_cast<size_t>(r)][p] != value) {
            ok = false;
            break;
          }
        }
        if (ok) survivors.push_back(r);
      }
      if (survivors.empty()) return false;
      if (survivors.size() != alive[static_cast<size_t>(ci)].size()) {
        trail.saved_alive.emplace_back(static_cast<size_t>(ci),
                                       std::move(alive[static_cast<size_t>(ci)]));
        alive[static_cast<size_t>(ci)] = std::move(survivors);
      }
      // Narrow the domains of the other, still-unassigned scope variables
      // to values that occur in some surviving row.
      for (size_t p = 0; p < c.vars.size(); ++p) {
        const int u = c.vars[p];
        if (assignment[static_cast<size_t>(u)] != -1) continue;
        std::vector<int> allowed;
        allowed.reserve(alive[static_cast<size_t>(ci)].size());
        for (const int r : alive[static_cast<size_t>(ci)]) {
          allowed.push_back(rows[static_cast<size_t>(r)][p]);
        }
        std::sort(allowed.begin(), allowed.end());
        allowed.erase(std::unique(allowed.begin(), allowed.end()),
                      allowed.end());
        std::vector<int> narrowed;
        narrowed.reserve(domains[static_cast<size_t>(u)].size());
        for (const int v : domains[static_cast<size_t>(u)]) {
          if (std::binary_search(allowed.begin(), allowed.end(), v)) {
            narrowed.push_back(v);
          }
        }
        if (narrowed.empty()) return false;
        if (narrowed.size() != domains[static_cast<size_t>(u)].size()) {
          trail.saved_domains.emplace_back(
              u, std::move(domains[static_cast<size_t>(u)]));
          domains[static_cast<size_t>(u)] = std::move(narrowed);
        }
      }
    }
    return true;
  }

  void undo(Trail& trail) {
    for (auto& [ci, old_rows] : trail.saved_alive) {
      alive[ci] = std::move(old_rows);
    }
    for (auto& [v, old_dom] : trail.saved_domains) {
      domains[static_cast<size_t>(v)] = std::move(old_dom);
    }
  }

  Step search(size_t pos) {
    if (pos == var_order.size()) return Step::witness;
    const int var = var_order[pos];
    // Iterate over a copy: propagation below may rewrite domains[var].
    const std::vector<int> values = domains[static_cast<size_t>(var)];
    for (const int value : values) {
      if (node_budget != 0 && nodes >= node_budget) return Step::unknown;
      ++nodes;
      assignment[static_cast<size_t>(var)] = value;
      Trail trail;
      if (propagate(var, value, trail)) {
        const Step s = search(pos + 1);
        if (s != Step::none) {
          undo(trail);  // harmless for witness; assignment carries the answer
          if (s == Step::witness) {
            assignment[static_cast<size_t>(var)] = value;
          } else {
            assignment[static_cast<size_t>(var)] = -1;
          }
          return s;
        }
      }
      undo(trail);
      assignment[static_cast<size_t>(var)] = -1;
    }
    return Step::none;
  }
};

}  // namespace

CspResult solve_table_csp(int num_vars,
                          const std::vector<std::vector<int>>& domains,
                          const std::vector<TableConstraint>& constraints,
                          const std::vector<int>& var_order,
                          uint64_t node_budget) {
  if (static_cast<int>(domains.size()) != num_vars ||
      static_cast<int>(var_order.size()) != num_vars) {
    throw InputError("solve_table_csp: domain/order size mismatch");
  }
  {
    std::vector<bool> seen(static_cast<size_t>(num_vars), false);
    for (const int v : var_order) {
      if (v < 0 || v >= num_vars || seen[static_cast<size_t>(v)]) {
        throw InputError("solve_table_csp: var_order is not a permutation");
      }
      seen[static_cast<size_t>(v)] = true;
    }
  }

  Solver s{constraints, domains, {}, {}, {}, var_order, node_budget};
  s.assignment.assign(static_cast<size_t>(num_vars), -1);
  s.watching.assign(static_cast<size_t>(num_vars), {});
  s.alive.resize(constraints.size());

  // Prefilter each constraint's rows: values must lie in the initial
  // domains, and positions sharing a variable must agree.
  for (size_t ci = 0; ci < constraints.size(); ++ci) {
    const TableConstraint& c = constraints[ci];
    const auto& rows = *c.rows;
    for (const int v : c.vars) {
      if (v < 0 || v >= num_vars) {
        throw InputError("solve_table_csp: constraint scope out of range");
      }
    }
    std::vector<int> seen_vars = c.vars;
    std::sort(seen_vars.begin(), seen_vars.end());
    seen_vars.erase(std::unique(seen_vars.begin(), seen_vars.end()),
                    seen_vars.end());
    for (const int v : seen_vars) s.watching[static_cast<size_t>(v)].push_back(
        static_cast<int>(ci));

    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != c.vars.size()) {
        throw InputError("solve_table_csp: row width does not match scope");
      }
      bool ok = true;
      for (size_t p = 0; p < c.vars.size() && ok; ++p) {
        const auto& dom = s.domains[static_cast<size_t>(c.vars[p])];
        if (!std::binary_search(dom.begin(), dom.end(), rows[r][p])) {
          ok = false;
        }
        for (size_t q = p + 1; q < c.vars.size() && ok; ++q) {
          if (c.vars[p] == c.vars[q] && rows[r][p] != rows[r][q]) ok = false;
        }
      }
      if (ok) s.alive[ci].push_back(static_cast<int>(r));
    }
    if (s.alive[ci].empty()) {
      return CspResult{CspStatus::none, {}, 0};
    }
  }

  // One initial narrowing pass so unary information in the tables prunes
  // domains before search begins.
  for (size_t ci = 0; ci < constraints.size(); ++ci) {
    const TableConstraint& c = constraints[ci];
    const auto& rows = *c.rows;
    for (size_t p = 0; p < c.vars.size(); ++p) {
      const int u = c.vars[p];
      std::vector<int> allowed;
      allowed.reserve(s.alive[ci].size());
      for (const int r : s.alive[ci]) {
        allowed.push_back(rows[static_cast<size_t>(r)][p]);
      }
      std::sort(allowed.begin(), allowed.end());
      allowed.erase(std::unique(allowed.begin(), allowed.end()),
                    allowed.end());
      auto& dom = s.domains[static_cast<size_t>(u)];
      std::vector<int> narrowed;
      for (const int v : dom) {
        if (std::binary_search(allowed.begin(), allowed.end(), v)) {
          narrowed.push_back(v);
        }
      }
      if (narrowed.empty()) return CspResult{CspStatus::none, {}, 0};
      dom = std::move(narrowed);
    }
  }

  const Solver::Step st = s.search(0);
  CspResult out;
  out.nodes = s.nodes;
  switch (st) {
    case Solver::Step::witness:
      out.status = CspStatus::witness;
      out.assignment = s.assignment;
      break;
    case Solver::Step::none:
      out.status = CspStatus::none;
      break;
    case Solver::Step::unknown:
      out.status = CspStatus::unknown;
      break;
  }
  return out;
}

}  // namespace palcheck
