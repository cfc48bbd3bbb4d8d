// Integer matrices and Smith normal form.
//
// smith_normal_form runs in two phases. The sparse phase repeatedly takes a
// unit pivot (|a| = 1), clears its row with column operations and drops the
// pivot row and column; boundary matrices of simplicial complexes are
// eliminated almost entirely this way. Whatever is left has no unit entries and
// goes to a dense reduction that always pivots on a minimal-|a| entry. The
// collected diagonal is finally put into divisibility order.

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

#include "cutnerve/homology.hpp"

namespace cutnerve {

using Entry = IntegerMatrix::Entry;
using Column = std::vector<Entry>;

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<Integer>>& dense) {
    const std::size_t r = dense.size();
    const std::size_t c = r ? dense.front().size() : 0;
    IntegerMatrix m(r, c);
    for (std::size_t j = 0; j < c; ++j)
        for (std::size_t i = 0; i < r; ++i)
            if (dense[i][j] != 0) m.columns_[j].push_back({static_cast<int>(i), dense[i][j]});
    return m;
}

std::size_t IntegerMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

Integer IntegerMatrix::at(std::size_t r, std::size_t c) const {
    const auto& col = columns_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), static_cast<int>(r),
                               [](const Entry& e, int row) { return e.row < row; });
    return (it != col.end() && it->row == static_cast<int>(r)) ? it->value : Integer(0);
}

void IntegerMatrix::set(std::size_t r, std::size_t c, const Integer& value) {
    auto& col = columns_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), static_cast<int>(r),
                               [](const Entry& e, int row) { return e.row < row; });
    const bool present = it != col.end() && it->row == static_cast<int>(r);
    if (value == 0) {
        if (present) col.erase(it);
    } else if (present) {
        it->value = value;
    } else {
        col.insert(it, Entry{static_cast<int>(r), value});
    }
}

std::vector<std::vector<Integer>> IntegerMatrix::dense() const {
    std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols(), Integer(0)));
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& e : columns_[j]) d[static_cast<std::size_t>(e.row)][j] = e.value;
    return d;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols(), rows_);
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& e : columns_[j]) t.columns_[static_cast<std::size_t>(e.row)].push_back({static_cast<int>(j), e.value});
    return t;
}

bool IntegerMatrix::operator==(const IntegerMatrix& o) const {
    return rows_ == o.rows_ && columns_ == o.columns_;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::vector<std::pair<int, Integer>> acc;
        for (const auto& eb : b.column(j))
            for (const auto& ea : a.column(static_cast<std::size_t>(eb.row))) acc.emplace_back(ea.row, ea.value * eb.value);
        std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (std::size_t i = 0; i < acc.size();) {
            Integer sum = 0;
            std::size_t k = i;
            for (; k < acc.size() && acc[k].first == acc[i].first; ++k) sum += acc[k].second;
            if (sum != 0) out.set(static_cast<std::size_t>(acc[i].first), j, sum);
            i = k;
        }
    }
    return out;
}

namespace {

// target := target - factor * source, both sorted by row. Calls on_add / on_remove
// for rows that appear in / vanish from target.
template <class OnAdd, class OnRemove>
void axpy(Column& target, const Integer& factor, const Column& source, OnAdd on_add, OnRemove on_remove) {
    Column out;
    out.reserve(target.size() + source.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < source.size()) {
        if (j == source.size() || (i < target.size() && target[i].row < source[j].row)) {
            out.push_back(std::move(target[i++]));
        } else if (i == target.size() || source[j].row < target[i].row) {
            out.push_back({source[j].row, -factor * source[j].value});
            on_add(source[j].row);
            ++j;
        } else {
            Integer v = target[i].value - factor * source[j].value;
            if (v == 0) on_remove(target[i].row);
            else out.push_back({target[i].row, std::move(v)});
            ++i;
            ++j;
        }
    }
    target = std::move(out);
}

// Dense diagonalisation with minimal-|a| pivoting. Returns the nonzero diagonal
// (absolute values, not yet in divisibility order).
std::vector<Integer> dense_diagonal(std::vector<std::vector<Integer>> a) {
    std::vector<Integer> diag;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a.front().size() : 0;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // smallest nonzero |a_ij| in the trailing block, first in index order
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) return diag;
            std::swap(a[t], a[pr]);
            for (auto& row : a) std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Integer q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Integer q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (clean) break;
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

// Turn any nonzero diagonal into the Smith invariants.
std::vector<Integer> divisibility_chain(std::vector<Integer> d) {
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (d[j] % d[i] == 0) continue;
            Integer g = gcd(d[i], d[j]);
            Integer l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

std::vector<Integer> smith_normal_form(const IntegerMatrix& m) {
    const std::size_t n_rows = m.rows();
    const std::size_t n_cols = m.cols();
    std::vector<Column> cols(n_cols);
    std::vector<std::vector<int>> row_cols(n_rows);
    std::vector<std::size_t> row_count(n_rows, 0);
    for (std::size_t j = 0; j < n_cols; ++j) {
        cols[j] = m.column(j);
        for (const auto& e : cols[j]) {
            row_cols[static_cast<std::size_t>(e.row)].push_back(static_cast<int>(j));
            ++row_count[static_cast<std::size_t>(e.row)];
        }
    }

    std::vector<Integer> diag;
    std::vector<bool> col_alive(n_cols, true);
    using Item = std::pair<std::size_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (std::size_t j = 0; j < n_cols; ++j) queue.emplace(cols[j].size(), static_cast<int>(j));

    while (!queue.empty()) {
        auto [size, c] = queue.top();
        queue.pop();
        auto& col = cols[static_cast<std::size_t>(c)];
        if (!col_alive[static_cast<std::size_t>(c)] || col.size() != size) continue;
        if (col.empty()) {
            col_alive[static_cast<std::size_t>(c)] = false;
            continue;
        }
        // unit entry whose row is sparsest
        const Entry* pivot = nullptr;
        for (const auto& e : col)
            if (abs(e.value) == 1 && (!pivot || row_count[static_cast<std::size_t>(e.row)] < row_count[static_cast<std::size_t>(pivot->row)]))
                pivot = &e;
        if (!pivot) continue;  // revisited if a later elimination changes this column
        const int r = pivot->row;
        const Integer p = pivot->value;

        const std::vector<int> hits = row_cols[static_cast<std::size_t>(r)];
        for (int c2 : hits) {
            if (c2 == c || !col_alive[static_cast<std::size_t>(c2)]) continue;
            auto& other = cols[static_cast<std::size_t>(c2)];
            auto it = std::lower_bound(other.begin(), other.end(), r, [](const Entry& e, int row) { return e.row < row; });
            if (it == other.end() || it->row != r) continue;
            const Integer factor = it->value * p;
            axpy(
                other, factor, col,
                [&](int row) {
                    row_cols[static_cast<std::size_t>(row)].push_back(c2);
                    ++row_count[static_cast<std::size_t>(row)];
                },
                [&](int row) { --row_count[static_cast<std::size_t>(row)]; });
            queue.emplace(other.size(), c2);
        }
        for (const auto& e : col) --row_count[static_cast<std::size_t>(e.row)];
        row_cols[static_cast<std::size_t>(r)].clear();
        col_alive[static_cast<std::size_t>(c)] = false;
        col.clear();
        diag.emplace_back(1);
    }

    // Residual block without unit entries.
    std::vector<int> live_cols;
    std::vector<int> row_pos(n_rows, -1);
    int live_rows = 0;
    for (std::size_t j = 0; j < n_cols; ++j) {
        if (!col_alive[j] || cols[j].empty()) continue;
        live_cols.push_back(static_cast<int>(j));
        for (const auto& e : cols[j])
            if (row_pos[static_cast<std::size_t>(e.row)] < 0) row_pos[static_cast<std::size_t>(e.row)] = live_rows++;
    }
    if (!live_cols.empty()) {
        std::vector<std::vector<Integer>> block(static_cast<std::size_t>(live_rows),
                                                std::vector<Integer>(live_cols.size(), Integer(0)));
        for (std::size_t j = 0; j < live_cols.size(); ++j)
            for (const auto& e : cols[static_cast<std::size_t>(live_cols[j])])
                block[static_cast<std::size_t>(row_pos[static_cast<std::size_t>(e.row)])][j] = e.value;
        auto rest = dense_diagonal(std::move(block));
        diag.insert(diag.end(), rest.begin(), rest.end());
    }
    return divisibility_chain(std::move(diag));
}

}  // namespace cutnerve
