#include "gitstab/lp.hpp"

#include <stdexcept>

#include "gitstab/types.hpp"

namespace gitstab::lp {

namespace {

// Dense tableau:
//   rows_   : m x (n_total + 1), last column is the rhs
//   basis_  : basic variable per row
//   zrow_   : reduced costs, entry n_total holds -objective
class Tableau {
public:
    Tableau(std::vector<std::vector<Rat>> rows, std::vector<int> basis, int n_total)
        : rows_(std::move(rows)), basis_(std::move(basis)), n_(n_total) {}

    void load_costs(const std::vector<Rat>& cost) {
        zrow_.assign(static_cast<size_t>(n_) + 1, Rat(0));
        for (int j = 0; j <= n_; ++j) {
            Rat z = j < n_ ? cost[static_cast<size_t>(j)] : Rat(0);
            for (size_t i = 0; i < rows_.size(); ++i) {
                const Rat& cb = cost[static_cast<size_t>(basis_[i])];
                if (cb != 0) z -= cb * rows_[i][static_cast<size_t>(j)];
            }
            zrow_[static_cast<size_t>(j)] = z;
        }
    }

    // Bland: entering = least index with negative reduced cost; leaving = the
    // minimal-ratio row, ties broken by least basic variable index.
    // Returns false when unbounded.
    bool iterate(const std::vector<bool>& allowed) {
        while (true) {
            int enter = -1;
            for (int j = 0; j < n_; ++j) {
                if (allowed[static_cast<size_t>(j)] && zrow_[static_cast<size_t>(j)] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rat best_ratio;
            for (size_t i = 0; i < rows_.size(); ++i) {
                const Rat& a = rows_[i][static_cast<size_t>(enter)];
                if (a <= 0) continue;
                Rat ratio = rhs(i) / a;
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[static_cast<size_t>(leave)])) {
                    leave = static_cast<int>(i);
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(static_cast<size_t>(leave), enter);
        }
    }

    void pivot(size_t row, int col) {
        auto& pr = rows_[row];
        Rat pv = pr[static_cast<size_t>(col)];
        for (auto& x : pr) x /= pv;
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (i == row) continue;
            Rat f = rows_[i][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int j = 0; j <= n_; ++j)
                rows_[i][static_cast<size_t>(j)] -= f * pr[static_cast<size_t>(j)];
        }
        Rat f = zrow_[static_cast<size_t>(col)];
        if (f != 0)
            for (int j = 0; j <= n_; ++j)
                zrow_[static_cast<size_t>(j)] -= f * pr[static_cast<size_t>(j)];
        basis_[row] = col;
    }

    const Rat& rhs(size_t i) const { return rows_[i].back(); }
    Rat objective() const { return -zrow_.back(); }
    const Rat& reduced_cost(int j) const { return zrow_[static_cast<size_t>(j)]; }
    const std::vector<int>& basis() const { return basis_; }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }
    int total_cols() const { return n_; }

    // Pivot basic variable `col` out of the basis if any allowed column in its
    // row has a nonzero entry; otherwise the row is redundant.
    void drive_out(int col, const std::vector<bool>& allowed) {
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (basis_[i] != col) continue;
            for (int j = 0; j < n_; ++j) {
                if (!allowed[static_cast<size_t>(j)]) continue;
                if (rows_[i][static_cast<size_t>(j)] != 0) {
                    pivot(i, j);
                    return;
                }
            }
            return;  // redundant row, artificial stays basic at value zero
        }
    }

private:
    std::vector<std::vector<Rat>> rows_;
    std::vector<int> basis_;
    int n_;
    std::vector<Rat> zrow_;
};

}  // namespace

Solution solve(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
               const std::vector<Rat>& c) {
    const size_t m = A.size();
    const size_t n = c.size();
    if (b.size() != m) throw validation_error("lp: rhs length mismatch");
    for (const auto& row : A)
        if (row.size() != n) throw validation_error("lp: row length mismatch");

    const int total = static_cast<int>(n + m);
    std::vector<std::vector<Rat>> rows(m, std::vector<Rat>(static_cast<size_t>(total) + 1, Rat(0)));
    std::vector<int> sign(m, 1);
    for (size_t i = 0; i < m; ++i) {
        bool neg = b[i] < 0;
        if (neg) sign[i] = -1;
        for (size_t j = 0; j < n; ++j) rows[i][j] = neg ? -A[i][j] : A[i][j];
        rows[i][n + i] = 1;
        rows[i].back() = neg ? -b[i] : b[i];
    }
    Tableau t(std::move(rows), [&] {
        std::vector<int> basis(m);
        for (size_t i = 0; i < m; ++i) basis[i] = static_cast<int>(n + i);
        return basis;
    }(), total);

    // Phase I: minimize the artificial mass.
    std::vector<Rat> phase1_cost(static_cast<size_t>(total), Rat(0));
    for (size_t i = 0; i < m; ++i) phase1_cost[n + i] = 1;
    std::vector<bool> all_cols(static_cast<size_t>(total), true);
    t.load_costs(phase1_cost);
    if (!t.iterate(all_cols)) throw internal_error("lp: phase I unbounded");

    Solution out;
    if (t.objective() > 0) {
        out.status = Status::Infeasible;
        out.farkas.assign(m, Rat(0));
        // Simplex multipliers off the artificial columns: y_i = 1 - rcost(art_i),
        // undoing any row negations.
        for (size_t i = 0; i < m; ++i) {
            Rat y = Rat(1) - t.reduced_cost(static_cast<int>(n + i));
            out.farkas[i] = sign[i] < 0 ? -y : y;
        }
        // y^T A <= 0 columnwise and y^T b > 0, by strong duality of phase I.
        for (size_t j = 0; j < n; ++j) {
            Rat dot = 0;
            for (size_t i = 0; i < m; ++i) dot += out.farkas[i] * A[i][j];
            if (dot > 0) throw internal_error("lp: invalid Farkas certificate (column)");
        }
        Rat dotb = 0;
        for (size_t i = 0; i < m; ++i) dotb += out.farkas[i] * b[i];
        if (dotb <= 0) throw internal_error("lp: invalid Farkas certificate (rhs)");
        return out;
    }

    // Feasible: forbid artificials and clean them out of the basis.
    std::vector<bool> orig_cols(static_cast<size_t>(total), false);
    for (size_t j = 0; j < n; ++j) orig_cols[j] = true;
    for (size_t j = n; j < static_cast<size_t>(total); ++j)
        t.drive_out(static_cast<int>(j), orig_cols);

    std::vector<Rat> phase2_cost(static_cast<size_t>(total), Rat(0));
    for (size_t j = 0; j < n; ++j) phase2_cost[j] = c[j];
    t.load_costs(phase2_cost);
    if (!t.iterate(orig_cols)) {
        out.status = Status::Unbounded;
        return out;
    }
    out.status = Status::Optimal;
    out.objective = t.objective();
    out.x.assign(n, Rat(0));
    for (size_t i = 0; i < m; ++i)
        if (t.basis()[i] < static_cast<int>(n)) out.x[static_cast<size_t>(t.basis()[i])] = t.rhs(i);
    return out;
}

}  // namespace gitstab::lp
