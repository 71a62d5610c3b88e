#include "bpmc/linear.hpp"

#include "bpmc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace bpmc {

namespace {

// Phase-I simplex on the standard-form tableau for { x >= 0, Ax <= b }.
// Rows are rewritten as  A x + s = b  with slacks s >= 0; rows with b_i < 0
// are negated and given an artificial variable. Minimising the sum of
// artificials with Bland's rule terminates; the system is feasible iff the
// optimum is 0.
class PhaseOneSimplex {
  public:
    PhaseOneSimplex(const RationalMatrix& A, const std::vector<Rational>& b) {
        rows_ = A.size();
        n_ = rows_ ? A[0].size() : 0;
        // Columns: n_ structural, rows_ slacks, then artificials for negative rows.
        std::size_t artificials = 0;
        for (const Rational& bi : b) {
            if (bi < 0) ++artificials;
        }
        cols_ = n_ + rows_ + artificials;
        tableau_.assign(rows_, std::vector<Rational>(cols_ + 1, Rational(0)));
        basis_.assign(rows_, 0);

        std::size_t next_artificial = n_ + rows_;
        for (std::size_t i = 0; i < rows_; ++i) {
            bool negate = b[i] < 0;
            Rational sign = negate ? Rational(-1) : Rational(1);
            for (std::size_t j = 0; j < n_; ++j) tableau_[i][j] = sign * A[i][j];
            tableau_[i][n_ + i] = sign;  // slack (negated with the row)
            tableau_[i][cols_] = sign * b[i];
            if (negate) {
                tableau_[i][next_artificial] = 1;
                basis_[i] = next_artificial++;
            } else {
                basis_[i] = n_ + i;
            }
        }
        first_artificial_ = n_ + rows_;
    }

    bool feasible() {
        // Objective: minimise sum of artificial variables. Reduced costs are
        // maintained implicitly: cost row = sum of rows whose basic variable
        // is artificial (since each artificial has cost 1).
        while (true) {
            // Compute reduced costs for nonbasic columns (Bland: pick the
            // lowest-index column with negative reduced cost of the
            // minimisation, i.e. positive row-sum coefficient here).
            std::ptrdiff_t entering = -1;
            for (std::size_t j = 0; j < cols_; ++j) {
                Rational reduced(0);
                for (std::size_t i = 0; i < rows_; ++i) {
                    if (basis_[i] >= first_artificial_) reduced += tableau_[i][j];
                }
                if (is_basic(j)) continue;
                if (j >= first_artificial_) continue;  // never re-enter artificials
                if (reduced > 0) {
                    entering = static_cast<std::ptrdiff_t>(j);
                    break;
                }
            }
            if (entering < 0) break;  // optimal

            // Ratio test with Bland's rule on ties.
            std::ptrdiff_t leaving = -1;
            Rational best_ratio(0);
            for (std::size_t i = 0; i < rows_; ++i) {
                const Rational& a = tableau_[i][entering];
                if (a <= 0) continue;
                Rational ratio = tableau_[i][cols_] / a;
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = static_cast<std::ptrdiff_t>(i);
                    best_ratio = ratio;
                }
            }
            if (leaving < 0) {
                // Unbounded phase-I objective cannot happen (bounded below by 0);
                // treat defensively as optimal.
                break;
            }
            pivot(static_cast<std::size_t>(leaving), static_cast<std::size_t>(entering));
        }
        Rational objective(0);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (basis_[i] >= first_artificial_) objective += tableau_[i][cols_];
        }
        return objective == 0;
    }

  private:
    bool is_basic(std::size_t column) const {
        return std::find(basis_.begin(), basis_.end(), column) != basis_.end();
    }

    void pivot(std::size_t row, std::size_t column) {
        Rational pivot_value = tableau_[row][column];
        for (Rational& cell : tableau_[row]) cell /= pivot_value;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            Rational factor = tableau_[i][column];
            if (factor == 0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) {
                tableau_[i][j] -= factor * tableau_[row][j];
            }
        }
        basis_[row] = column;
    }

    std::size_t rows_ = 0, n_ = 0, cols_ = 0, first_artificial_ = 0;
    std::vector<std::vector<Rational>> tableau_;
    std::vector<std::size_t> basis_;
};

}  // namespace

bool lp_feasible_nonneg(const RationalMatrix& A, const std::vector<Rational>& b) {
    if (A.size() != b.size()) throw std::invalid_argument("lp_feasible_nonneg: size mismatch");
    if (A.empty()) return true;
    PhaseOneSimplex simplex(A, b);
    return simplex.feasible();
}

std::optional<std::vector<double>> solve_double(std::vector<std::vector<double>> A,
                                                std::vector<double> b) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::fabs(A[row][col]) > std::fabs(A[pivot][col])) pivot = row;
        }
        if (std::fabs(A[pivot][col]) < 1e-300) return std::nullopt;
        std::swap(A[col], A[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t row = col + 1; row < n; ++row) {
            double factor = A[row][col] / A[col][col];
            if (factor == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) A[row][j] -= factor * A[col][j];
            b[row] -= factor * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= A[i][j] * x[j];
        x[i] = acc / A[i][i];
        if (!std::isfinite(x[i])) return std::nullopt;
    }
    return x;
}

bool strongly_connected(const RationalMatrix& M) {
    const std::size_t n = M.size();
    if (n == 0) return true;
    auto reach = [&](bool transpose) {
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n; ++v) {
                const Rational& entry = transpose ? M[v][u] : M[u][v];
                if (entry != 0 && !seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        return seen;
    };
    auto forward = reach(false);
    auto backward = reach(true);
    for (std::size_t i = 0; i < n; ++i) {
        if (!forward[i] || !backward[i]) return false;
    }
    return true;
}

bool spectral_radius_le_one(const RationalMatrix& J) {
    const std::size_t n = J.size();
    for (const auto& row : J) {
        if (row.size() != n) throw std::invalid_argument("spectral_radius_le_one: not square");
        for (const Rational& entry : row) {
            if (entry < 0) throw std::invalid_argument("spectral_radius_le_one: negative entry");
        }
    }
    if (!strongly_connected(J)) throw NotIrreducibleError();
    if (n == 0) return true;

    // rho(J) <= 1  iff  exists v >= 1 with J v <= v. Substituting v = 1 + w
    // (w >= 0) turns this into (J - I) w <= (I - J) 1.
    RationalMatrix A(n, std::vector<Rational>(n));
    std::vector<Rational> b(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            A[i][j] = J[i][j] - (i == j ? Rational(1) : Rational(0));
            b[i] -= J[i][j];
        }
        b[i] += 1;
    }
    return lp_feasible_nonneg(A, b);
}

}  // namespace bpmc
