#include <algorithm>
#include <set>
#include <stdexcept>

#include "skein/adams.hpp"

namespace skein {

namespace {

using Row = std::vector<Scalar>;

// Solves the square system rows * u = rhs; returns nullopt if singular.
std::optional<std::vector<Scalar>> solve_square(std::vector<Row> rows, std::vector<Scalar> rhs) {
  const std::size_t n = rows.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(rows[pivot], rows[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Scalar inv = rows[col][col].inverse();
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || rows[r][col].is_zero()) continue;
      const Scalar f = rows[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= f * rows[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Scalar> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = rhs[i] / rows[i][i];
  return u;
}

struct Equations {
  std::vector<Partition> keys;
  std::vector<Row> rows;
  std::vector<Scalar> rhs;
};

Equations build_equations(const PatternSystem& sys) {
  std::set<Partition> keys;
  for (const auto& [k, c] : sys.target.terms()) keys.insert(k);
  for (const auto& p : sys.patterns) {
    for (const auto& [k, c] : p.terms()) keys.insert(k);
  }
  Equations eq;
  for (const auto& k : keys) {
    Row row;
    for (const auto& p : sys.patterns) row.push_back(p.coefficient(k));
    eq.keys.push_back(k);
    eq.rows.push_back(std::move(row));
    eq.rhs.push_back(sys.target.coefficient(k));
  }
  return eq;
}

// Greedy row basis by elimination. Returns the chosen equation indices and
// the pivot column of each.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> row_basis(const Equations& eq, std::size_t unknowns) {
  std::vector<Row> reduced;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < eq.rows.size(); ++i) {
    Row r = eq.rows[i];
    for (std::size_t b = 0; b < reduced.size(); ++b) {
      const std::size_t pc = pivots[b];
      if (r[pc].is_zero()) continue;
      const Scalar f = r[pc] / reduced[b][pc];
      for (std::size_t c = 0; c < unknowns; ++c) r[c] -= f * reduced[b][c];
    }
    std::size_t pc = 0;
    while (pc < unknowns && r[pc].is_zero()) ++pc;
    if (pc == unknowns) continue;
    reduced.push_back(std::move(r));
    pivots.push_back(pc);
    chosen.push_back(i);
    if (chosen.size() == unknowns) break;
  }
  return {chosen, pivots};
}

std::vector<Scalar> solve_subset(const Equations& eq, const std::vector<std::size_t>& subset,
                                 const std::vector<std::size_t>& columns, std::size_t unknowns, bool* ok) {
  std::vector<Row> rows;
  std::vector<Scalar> rhs;
  for (std::size_t i : subset) {
    Row r;
    for (std::size_t c : columns) r.push_back(eq.rows[i][c]);
    rows.push_back(std::move(r));
    rhs.push_back(eq.rhs[i]);
  }
  auto u = solve_square(std::move(rows), std::move(rhs));
  std::vector<Scalar> full(unknowns);
  *ok = u.has_value();
  if (u) {
    for (std::size_t k = 0; k < columns.size(); ++k) full[columns[k]] = (*u)[k];
  }
  return full;
}

Scalar residual(const Equations& eq, std::size_t i, const std::vector<Scalar>& u) {
  Scalar r = -eq.rhs[i];
  for (std::size_t c = 0; c < u.size(); ++c) {
    if (!eq.rows[i][c].is_zero() && !u[c].is_zero()) r += eq.rows[i][c] * u[c];
  }
  return r;
}

}  // namespace

PatternResult solve_pattern(const PatternSystem& sys) {
  if (sys.patterns.empty()) throw std::invalid_argument("solve_pattern: empty pattern list");
  const std::size_t unknowns = sys.patterns.size();
  const Equations eq = build_equations(sys);
  auto [basis, pivot_cols] = row_basis(eq, unknowns);

  std::vector<std::size_t> columns = pivot_cols;
  std::sort(columns.begin(), columns.end());
  std::vector<int> free_unknowns;
  for (std::size_t c = 0; c < unknowns; ++c) {
    if (std::find(columns.begin(), columns.end(), c) == columns.end()) free_unknowns.push_back(static_cast<int>(c));
  }

  bool ok = true;
  const std::vector<Scalar> u = solve_subset(eq, basis, columns, unknowns, &ok);
  if (!ok) throw std::logic_error("solve_pattern: chosen row basis is singular");

  for (std::size_t i = 0; i < eq.rows.size(); ++i) {
    if (residual(eq, i, u).is_zero()) continue;
    PatternInconsistency bad;
    for (std::size_t b : basis) bad.first_equations.push_back(eq.keys[b]);
    bad.first_solution = u;
    // Swap the failing equation into the basis in place of one it depends on.
    for (std::size_t slot = 0; slot < basis.size(); ++slot) {
      std::vector<std::size_t> other = basis;
      other[slot] = i;
      bool other_ok = true;
      const std::vector<Scalar> w = solve_subset(eq, other, columns, unknowns, &other_ok);
      if (!other_ok) continue;
      for (std::size_t b : other) bad.second_equations.push_back(eq.keys[b]);
      bad.second_solution = w;
      for (std::size_t c = 0; c < unknowns; ++c) {
        if (!(w[c] == u[c])) {
          bad.unknown = static_cast<int>(c);
          break;
        }
      }
      return bad;
    }
    // The failing equation has no unknowns at all: it reads 0 = nonzero.
    bad.second_equations = {eq.keys[i]};
    bad.unknown = -1;
    return bad;
  }
  return PatternSolution{u, free_unknowns};
}

}  // namespace skein
