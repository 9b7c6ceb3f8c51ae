#pragma once

#include "eulerian/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace eulerian {

enum class Family { A, B, D, Dtilde, BrentiD };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// Triangle of one family: rows_[n] = [T(n,0), ..., T(n,n)].
/// Immutable once built; row n of every family has exactly n+1 entries
/// (the A triangle keeps its trailing zero column so that shapes agree
/// across families).
class Triangle {
public:
    Triangle(Family family, std::vector<Row> rows);

    Family family() const { return family_; }
    int max_row() const { return static_cast<int>(rows_.size()) - 1; }
    const Row& row(int n) const;

    // Hard range check: indexing outside 0..n is an error, never zero.
    const BigInt& at(int n, int k) const;

    // Enforces the structural invariants (shape, nonnegativity, boundary
    // columns, row sums). Throws std::logic_error on violation.
    void validate() const;

private:
    Family family_;
    std::vector<Row> rows_;
};

// Builds rows 0..n_max incrementally by the family's recurrence.
// BrentiD has no recurrence route and is rejected here.
Triangle build_triangle(Family family, int n_max);

// --- Type A ---------------------------------------------------------------

// Row n by the two-term recurrence; boundary T(n,0) = 1, T(n,n) = 0 (n >= 1).
Row row_a(int n);

// Alternating-sum closed form; must agree with row_a entrywise.
BigInt closed_form_a(int n, int k);

// --- Type B ---------------------------------------------------------------

Row row_b(int n);
BigInt closed_form_b(int n, int k);

// --- Type D ---------------------------------------------------------------

// Both rows at once from the coupled recurrence (each family's row n mixes
// both families' rows n-1). First component is the primary triangle, second
// the complementary one.
std::pair<Row, Row> coupled_rows_d(int n);

// Self-contained recurrence for one D family; the binomial correction term
// replaces the coupling. family must be D or Dtilde.
Row independent_row_d(int n, Family family);

// Entry from the type-B triangle: (B(n,k) +/- (-1)^k C(n,k)) / 2. The parity
// assertion (the sum is always even) guards against arithmetic bugs.
BigInt d_from_b(int n, int k, Family family);

// D(n,k) - Dtilde(n,k) == (-1)^k C(n,k) across row n.
bool difference_check(int n);

// Parity-dependent row reversal: even n maps each D family to itself,
// odd n swaps the two families.
bool symmetry_check_d(int n);

// --- Conjecture scan (empirical evidence only, never proof) ----------------

struct ConjectureScan {
    int n_max = 0;
    int rows_checked = 0;
    int diagonals_checked = 0;
    // Strict violations: a non-unimodal row, or a decrease inside a diagonal.
    std::vector<std::string> violations;
    // Adjacent-equal pairs in the diagonals (fail the strict reading of
    // "increasing" but not the weak one); reported separately.
    std::vector<std::string> weak_ties;

    bool clean() const { return violations.empty(); }
};

// Scans rows of D and Dtilde up to n_max for unimodality, and the column /
// offset diagonals for strict monotonicity.
ConjectureScan scan_conjectures(int n_max);

// Unimodal with ties allowed: non-decreasing up to some index, then
// non-increasing.
bool is_unimodal(const Row& row);

}  // namespace eulerian
