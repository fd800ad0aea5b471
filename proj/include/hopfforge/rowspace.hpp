#pragma once

#include <cstddef>
#include <vector>

#include "hopfforge/ratfunc.hpp"

namespace hopfforge {

// Incrementally maintained reduced echelon basis of a subspace of F^n.
// Rows are kept pivot-sorted with pivot entries 1 and cleared columns, so
// membership tests and quotient coordinates fall out of reduce().
template <class F>
class RowSpace {
public:
    RowSpace(std::size_t n, const F& one) : n_(n), one_(one) {}

    std::size_t dim() const { return rows_.size(); }
    const std::vector<std::vector<F>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return piv_; }

    void reduce(std::vector<F>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (is_zero(v[piv_[r]])) continue;
            F f = v[piv_[r]];
            for (std::size_t j = piv_[r]; j < n_; ++j)
                sub_mul(v[j], f, rows_[r][j]);
        }
    }

    bool contains(std::vector<F> v) const {
        reduce(v);
        for (const auto& x : v)
            if (!is_zero(x)) return false;
        return true;
    }

    // true when v was independent of the current rows (the space grew)
    bool add(std::vector<F> v) {
        reduce(v);
        std::size_t lead = n_;
        for (std::size_t j = 0; j < n_; ++j) {
            if (!is_zero(v[j])) {
                lead = j;
                break;
            }
        }
        if (lead == n_) return false;
        F inv = one_ / v[lead];
        for (std::size_t j = lead; j < n_; ++j) v[j] = v[j] * inv;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (is_zero(rows_[r][lead])) continue;
            F f = rows_[r][lead];
            for (std::size_t j = lead; j < n_; ++j)
                sub_mul(rows_[r][j], f, v[j]);
        }
        std::size_t pos = 0;
        while (pos < piv_.size() && piv_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        piv_.insert(piv_.begin() + pos, lead);
        return true;
    }

    // coordinates never used as pivots: a transversal of the quotient
    std::vector<std::size_t> complement() const {
        std::vector<bool> hit(n_, false);
        for (std::size_t c : piv_) hit[c] = true;
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < n_; ++j)
            if (!hit[j]) out.push_back(j);
        return out;
    }

private:
    std::size_t n_;
    F one_;
    std::vector<std::vector<F>> rows_;
    std::vector<std::size_t> piv_;
};

} // namespace hopfforge
