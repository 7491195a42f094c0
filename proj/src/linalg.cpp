#include "certify/linalg.hpp"

#include <algorithm>
#include <map>

namespace certify {

LinearSystem::LinearSystem(std::vector<std::vector<GR>> rows, std::vector<GR> rhs)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
    if (rows.size() != rhs.size())
        throw Error("linear system: rhs length must equal row count");
    a_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw Error("linear system: ragged matrix");
        for (const auto& v : row)
            a_.push_back(v);
    }
    rhs_ = std::move(rhs);
}

namespace {

// sparse row: (column, coefficient) sorted by column, plus right-hand side
struct Row {
    std::vector<std::pair<std::size_t, GR>> a;
    GR rhs;
    std::size_t head() const { return a.empty() ? SIZE_MAX : a.front().first; }
};

// dst += f * src (matching columns merged, zeros dropped)
void axpy(Row& dst, const Row& src, const GR& f) {
    std::vector<std::pair<std::size_t, GR>> merged;
    merged.reserve(dst.a.size() + src.a.size());
    std::size_t i = 0, j = 0;
    while (i < dst.a.size() || j < src.a.size()) {
        if (j == src.a.size() || (i < dst.a.size() && dst.a[i].first < src.a[j].first)) {
            merged.push_back(dst.a[i++]);
        } else if (i == dst.a.size() || src.a[j].first < dst.a[i].first) {
            GR v = f * src.a[j].second;
            if (!v.is_zero())
                merged.emplace_back(src.a[j].first, std::move(v));
            ++j;
        } else {
            GR v = dst.a[i].second + f * src.a[j].second;
            if (!v.is_zero())
                merged.emplace_back(dst.a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    dst.a = std::move(merged);
    dst.rhs += f * src.rhs;
}

void verify_product(const LinearSystem& sys, const std::vector<GR>& x, bool against_rhs) {
    for (std::size_t r = 0; r < sys.rows(); ++r) {
        GR acc;
        for (std::size_t c = 0; c < sys.cols(); ++c) {
            if (!sys.at(r, c).is_zero() && !x[c].is_zero())
                acc += sys.at(r, c) * x[c];
        }
        if (acc != (against_rhs ? sys.rhs(r) : GR::zero()))
            throw Error("solve_linear: back-substitution check failed");
    }
}

}  // namespace

SolutionSet solve_linear(const LinearSystem& sys) {
    const std::size_t m = sys.rows();
    const std::size_t n = sys.cols();

    std::vector<Row> rows(m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            if (!sys.at(r, c).is_zero())
                rows[r].a.emplace_back(c, sys.at(r, c));
        rows[r].rhs = sys.rhs(r);
    }

    // forward elimination; heads only ever move right, so one sweep suffices
    std::vector<Row> pivot_rows;          // normalized, in increasing head order
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t found = SIZE_MAX;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].head() == col) {
                found = r;
                break;
            }
        }
        if (found == SIZE_MAX)
            continue;
        Row piv = std::move(rows[found]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(found));
        const GR inv = piv.a.front().second.inverse();
        for (auto& [c, v] : piv.a)
            v *= inv;
        piv.rhs *= inv;
        for (auto& row : rows) {
            if (row.head() == col)
                axpy(row, piv, -row.a.front().second);
        }
        pivot_rows.push_back(std::move(piv));
        pivot_col.push_back(col);
    }

    SolutionSet out;
    for (const auto& row : rows) {
        if (!row.rhs.is_zero())
            return out;  // inconsistent
    }
    out.consistent = true;

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col)
        is_pivot[c] = true;

    // back-substitution helpers over the triangular pivot rows
    auto back_substitute = [&](std::vector<GR>& x) {
        for (std::size_t k = pivot_rows.size(); k-- > 0;) {
            const Row& row = pivot_rows[k];
            GR acc = row.rhs;
            for (std::size_t idx = 1; idx < row.a.size(); ++idx) {
                const auto& [c, v] = row.a[idx];
                if (!x[c].is_zero())
                    acc -= v * x[c];
            }
            x[pivot_col[k]] = acc;
        }
    };

    out.solution.assign(n, GR::zero());
    back_substitute(out.solution);

    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<GR> v(n, GR::zero());
        v[free] = GR::one();
        // rhs is zero for nullspace vectors
        for (std::size_t k = pivot_rows.size(); k-- > 0;) {
            const Row& row = pivot_rows[k];
            GR acc;
            for (std::size_t idx = 1; idx < row.a.size(); ++idx) {
                const auto& [c, val] = row.a[idx];
                if (!v[c].is_zero())
                    acc -= val * v[c];
            }
            v[pivot_col[k]] = acc;
        }
        out.nullspace.push_back(std::move(v));
    }

    verify_product(sys, out.solution, true);
    for (const auto& v : out.nullspace)
        verify_product(sys, v, false);
    return out;
}

}  // namespace certify
