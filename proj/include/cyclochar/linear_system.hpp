#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "affine.hpp"
#include "free_vector.hpp"
#include "rational.hpp"

namespace cyclochar {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

struct LinearSystem {
    std::vector<std::string> unknowns;
    Matrix rows;  // row width == unknowns.size()
    Row rhs;      // one entry per row

    void add_row(Row r, Rational b) {
        if (r.size() != unknowns.size())
            throw std::invalid_argument("row width does not match unknown count");
        rows.push_back(std::move(r));
        rhs.push_back(std::move(b));
    }
};

// Build a homogeneous system from affine constraints "expr = 0".
inline LinearSystem system_from_constraints(const std::vector<std::string>& unknowns,
                                            const std::vector<Affine>& constraints) {
    LinearSystem sys;
    sys.unknowns = unknowns;
    for (const Affine& a : constraints) {
        Row r(unknowns.size(), Rational(0));
        for (std::size_t i = 0; i < unknowns.size(); ++i)
            r[i] = a.coeff_of(unknowns[i]);
        for (const auto& [u, c] : a.linear())
            if (std::find(unknowns.begin(), unknowns.end(), u) == unknowns.end() && !c.is_zero())
                throw std::invalid_argument("constraint mentions unlisted unknown " + u);
        sys.add_row(std::move(r), -a.constant());
    }
    return sys;
}

// In-place reduced row echelon form; returns pivot columns.  Pivot choice is
// the first nonzero entry in row-major order, so results are deterministic.
inline std::vector<std::size_t> rref_inplace(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    const std::size_t ncols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero())
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[row], m[sel]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row])
            x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero())
                continue;
            Rational f = m[r][col];
            for (std::size_t c2 = 0; c2 < ncols; ++c2)
                m[r][c2] -= f * m[row][c2];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);  // drop zero rows
    return pivots;
}

inline Matrix rref(Matrix m) {
    rref_inplace(m);
    return m;
}

inline std::size_t rank_of(Matrix m) { return rref_inplace(m).size(); }

// Same row space <=> identical RREF.
inline bool row_equivalent(const Matrix& a, const Matrix& b) {
    if (a.empty() || b.empty())
        return a.empty() == b.empty();
    if (a[0].size() != b[0].size())
        return false;
    return rref(a) == rref(b);
}

struct AffineSolutionSet {
    bool consistent = false;
    Row particular;                // one solution
    std::vector<Row> nullspace;    // basis of the homogeneous solutions
    std::size_t rank = 0;
};

// Exact Gaussian elimination; the solution is verified by substitution.
inline AffineSolutionSet solve_linear_system(const LinearSystem& sys) {
    AffineSolutionSet out;
    const std::size_t nu = sys.unknowns.size();
    Matrix aug;
    aug.reserve(sys.rows.size());
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        Row row = sys.rows[r];
        row.push_back(sys.rhs[r]);
        aug.push_back(std::move(row));
    }
    std::vector<std::size_t> pivots = rref_inplace(aug);
    for (std::size_t p : pivots)
        if (p == nu)
            return out;  // pivot in the rhs column: INCONSISTENT
    out.consistent = true;
    out.rank = pivots.size();
    out.particular.assign(nu, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        out.particular[pivots[r]] = aug[r][nu];

    std::vector<bool> is_pivot(nu, false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;
    for (std::size_t free = 0; free < nu; ++free) {
        if (is_pivot[free])
            continue;
        Row v(nu, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -aug[r][free];
        out.nullspace.push_back(std::move(v));
    }

    auto check = [&](const Row& x) {
        for (std::size_t r = 0; r < sys.rows.size(); ++r) {
            Rational acc(0);
            for (std::size_t c = 0; c < nu; ++c)
                acc += sys.rows[r][c] * x[c];
            if (acc != sys.rhs[r])
                return false;
        }
        return true;
    };
    if (!check(out.particular))
        throw std::logic_error("solver postcondition failed: particular solution");
    for (const Row& v : out.nullspace) {
        Row x = out.particular;
        for (std::size_t c = 0; c < nu; ++c)
            x[c] += v[c];
        if (!check(x))
            throw std::logic_error("solver postcondition failed: nullspace vector");
    }
    return out;
}

struct KernelResult {
    std::size_t rank = 0;
    std::vector<Row> kernel;
};

inline KernelResult kernel_and_rank(const Matrix& m) {
    KernelResult out;
    if (m.empty())
        return out;
    const std::size_t ncols = m[0].size();
    for (const Row& r : m)
        if (r.size() != ncols)
            throw std::invalid_argument("kernel_and_rank: ragged matrix");
    Matrix red = m;
    std::vector<std::size_t> pivots = rref_inplace(red);
    out.rank = pivots.size();
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free])
            continue;
        Row v(ncols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -red[r][free];
        out.kernel.push_back(std::move(v));
    }
    for (const Row& v : out.kernel) {
        for (const Row& r : m) {
            Rational acc(0);
            for (std::size_t c = 0; c < ncols; ++c)
                acc += r[c] * v[c];
            if (!acc.is_zero())
                throw std::logic_error("kernel vector does not map to zero");
        }
    }
    return out;
}

// Does the homogeneous solution set of sys equal span(vectors)?
inline bool solution_space_is(const LinearSystem& sys, const std::vector<Row>& vectors) {
    for (const Row& v : vectors) {
        for (std::size_t r = 0; r < sys.rows.size(); ++r) {
            Rational acc(0);
            for (std::size_t c = 0; c < v.size(); ++c)
                acc += sys.rows[r][c] * v[c];
            if (acc != sys.rhs[r])
                return false;
        }
    }
    KernelResult k = kernel_and_rank(sys.rows);
    if (k.kernel.size() != vectors.size())
        return false;
    Matrix span = vectors;
    return rank_of(span) == vectors.size();
}

}  // namespace cyclochar
