// Exact Smith normal form over the integers.
//
// Only the rank and the elementary divisors are produced; the unimodular
// transforms are never materialized.

#ifndef TRACEHOM_SMITH_HPP
#define TRACEHOM_SMITH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tracehom {

using Integer = boost::multiprecision::cpp_int;

struct Triplet {
    std::size_t row;
    std::size_t col;
    Integer value;

    bool operator==(const Triplet&) const = default;
};

/// Sparse integer matrix stored column-major; stored entries are nonzero.
class SparseIntMatrix {
public:
    using Column = std::map<std::size_t, Integer>;

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static SparseIntMatrix from_dense(const std::vector<std::vector<Integer>>& dense) {
        const std::size_t r = dense.size();
        const std::size_t c = r ? dense.front().size() : 0;
        SparseIntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (dense[i].size() != c)
                throw std::invalid_argument("ragged dense matrix");
            for (std::size_t j = 0; j < c; ++j)
                m.add(i, j, dense[i][j]);
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    /// Adds `v` to entry (r, c); an entry summing to zero is erased.
    void add(std::size_t r, std::size_t c, const Integer& v) {
        check(r, c);
        if (v == 0)
            return;
        auto& col = column_ref(c);
        auto [it, inserted] = col.try_emplace(r, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0)
                col.erase(it);
        }
    }

    Integer at(std::size_t r, std::size_t c) const {
        check(r, c);
        if (c >= data_.size())
            return 0;
        auto it = data_[c].find(r);
        return it == data_[c].end() ? Integer(0) : it->second;
    }

    const Column& column(std::size_t c) const {
        static const Column empty;
        if (c >= cols_)
            throw std::out_of_range("column index out of range");
        return c < data_.size() ? data_[c] : empty;
    }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& col : data_)
            n += col.size();
        return n;
    }

    /// Entries in column-major order.
    std::vector<Triplet> triplets() const {
        std::vector<Triplet> out;
        for (std::size_t c = 0; c < data_.size(); ++c)
            for (const auto& [r, v] : data_[c])
                out.push_back({r, c, v});
        return out;
    }

    std::vector<std::vector<Integer>> dense() const {
        std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_, 0));
        for (std::size_t c = 0; c < data_.size(); ++c)
            for (const auto& [r, v] : data_[c])
                out[r][c] = v;
        return out;
    }

    bool is_zero() const { return nonzeros() == 0; }

    friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.triplets() == b.triplets();
    }

private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_)
            throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                                    ") out of range for " + std::to_string(rows_) + "x" +
                                    std::to_string(cols_));
    }

    Column& column_ref(std::size_t c) {
        if (data_.size() < cols_)
            data_.resize(cols_);
        return data_[c];
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Column> data_;
};

/// Product a * b.
inline SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("dimension mismatch in matrix product");
    SparseIntMatrix out(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (const auto& [k, bkj] : b.column(j))
            for (const auto& [i, aik] : a.column(k))
                out.add(i, j, aik * bkj);
    return out;
}

struct SmithDecomposition {
    std::size_t rank = 0;
    std::vector<Integer> divisors;  // delta_1 | delta_2 | ... | delta_rank, all positive

    bool operator==(const SmithDecomposition&) const = default;
};

namespace detail {

// Working copy with both row and column adjacency so that row and column
// operations only touch nonzero entries.
class SmithWorkspace {
public:
    explicit SmithWorkspace(const SparseIntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
        for (const auto& t : m.triplets()) {
            rows_[t.row].emplace(t.col, t.value);
            cols_[t.col].insert(t.row);
        }
    }

    bool empty() const {
        return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
    }

    // Minimum |value|; ties broken by smallest row, then smallest column.
    std::pair<std::size_t, std::size_t> global_pivot() const {
        std::size_t br = 0, bc = 0;
        const Integer* best = nullptr;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (const auto& [c, v] : rows_[r]) {
                if (!best || abs(v) < abs(*best)) {
                    best = &v;
                    br = r;
                    bc = c;
                    if (abs(v) == 1)
                        return {br, bc};
                }
            }
        }
        return {br, bc};
    }

    // Isolates the entry at (r, c) by Euclidean row and column steps, moving
    // the pivot whenever a smaller remainder appears. Returns |pivot|.
    Integer isolate(std::size_t r, std::size_t c) {
        for (;;) {
            const Integer p = rows_[r].at(c);
            // Clear column c with row operations.
            std::vector<std::size_t> others;
            for (auto i : cols_[c])
                if (i != r)
                    others.push_back(i);
            for (auto i : others) {
                Integer q = rows_[i].at(c) / p;
                if (q != 0)
                    add_row_multiple(i, r, -q);
            }
            if (cols_[c].size() > 1) {
                r = smallest_in_column(c, r);
                continue;
            }
            // Column c holds only the pivot; clear row r with column operations.
            std::vector<std::pair<std::size_t, Integer>> row_entries;
            for (const auto& [j, v] : rows_[r])
                if (j != c)
                    row_entries.emplace_back(j, v);
            for (const auto& [j, v] : row_entries) {
                Integer q = v / p;
                if (q != 0)
                    add_col_multiple(j, c, -q);
            }
            if (rows_[r].size() > 1) {
                c = smallest_in_row(r, c);
                continue;
            }
            Integer pivot = abs(p);
            erase(r, c);
            return pivot;
        }
    }

private:
    std::size_t smallest_in_column(std::size_t c, std::size_t skip) const {
        std::size_t best = skip;
        for (auto i : cols_[c])
            if (i != skip && (best == skip || abs(rows_[i].at(c)) < abs(rows_[best].at(c))))
                best = i;
        return best;
    }

    std::size_t smallest_in_row(std::size_t r, std::size_t skip) const {
        std::size_t best = skip;
        for (const auto& [j, v] : rows_[r])
            if (j != skip && (best == skip || abs(v) < abs(rows_[r].at(best))))
                best = j;
        return best;
    }

    void set(std::size_t r, std::size_t c, Integer v) {
        if (v == 0) {
            erase(r, c);
            return;
        }
        rows_[r][c] = std::move(v);
        cols_[c].insert(r);
    }

    void erase(std::size_t r, std::size_t c) {
        rows_[r].erase(c);
        cols_[c].erase(r);
    }

    // row dst += factor * row src
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
        const auto& src_row = rows_[src];
        for (const auto& [c, v] : src_row) {
            auto it = rows_[dst].find(c);
            Integer nv = (it == rows_[dst].end() ? Integer(0) : it->second) + factor * v;
            set(dst, c, std::move(nv));
        }
    }

    // col dst += factor * col src
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
        const auto& src_rows = cols_[src];
        for (auto r : src_rows) {
            const Integer v = rows_[r].at(src);
            auto it = rows_[r].find(dst);
            Integer nv = (it == rows_[r].end() ? Integer(0) : it->second) + factor * v;
            set(r, dst, std::move(nv));
        }
    }

    std::vector<std::map<std::size_t, Integer>> rows_;
    std::vector<std::set<std::size_t>> cols_;
};

// Turns any list of positive diagonal entries into the divisibility chain
// with the same diagonal class, using diag(a, b) ~ diag(gcd, lcm).
inline void fix_divisibility(std::vector<Integer>& d) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (d[j] % d[i] == 0)
                continue;
            Integer g = gcd(d[i], d[j]);
            Integer l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    }
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const SparseIntMatrix& m) {
    detail::SmithWorkspace work(m);
    SmithDecomposition out;
    while (!work.empty()) {
        auto [r, c] = work.global_pivot();
        out.divisors.push_back(work.isolate(r, c));
    }
    detail::fix_divisibility(out.divisors);
    out.rank = out.divisors.size();
    return out;
}

inline std::size_t rank(const SparseIntMatrix& m) { return smith_normal_form(m).rank; }

}  // namespace tracehom

#endif  // TRACEHOM_SMITH_HPP
