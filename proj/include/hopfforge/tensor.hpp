#ifndef HOPFFORGE_TENSOR_HPP
#define HOPFFORGE_TENSOR_HPP

#include <cstddef>
#include <vector>

#include "hopfforge/ratfunc.hpp"

namespace hopfforge {

// ===========================================================================
// Tensor3<F>: an n x n x n array of scalars with 0-based dense accessors and
// a nonzero-support view.  Multiplication tensors store C(i,j,k) = coefficient
// of e_k in e_i * e_j; comultiplication tensors store D(i,j,k) = coefficient
// of e_j (x) e_k in Delta(e_i).  External 1-based indices exist only at the
// JSON / report boundary.
// ===========================================================================

template <class F>
class Tensor3 {
public:
    Tensor3() : n_(0), one_(one_like(F())) {}
    Tensor3(std::size_t n, const F& zero)
        : n_(n), one_(one_like(zero)), a_(n * n * n, zero) {}

    std::size_t dim() const { return n_; }

    F& at(std::size_t i, std::size_t j, std::size_t k) { return a_[(i * n_ + j) * n_ + k]; }
    const F& at(std::size_t i, std::size_t j, std::size_t k) const {
        return a_[(i * n_ + j) * n_ + k];
    }

    bool operator==(const Tensor3& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const Tensor3& o) const { return !(*this == o); }

    struct Entry {
        std::size_t i, j, k;
        const F* value;
    };

    // nonzero support in lexicographic (i, j, k) order
    std::vector<Entry> nonzeros() const {
        std::vector<Entry> out;
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k, ++idx)
                    if (!is_zero(a_[idx])) out.push_back({i, j, k, &a_[idx]});
        return out;
    }

    std::size_t nonzero_count() const {
        std::size_t c = 0;
        for (const F& v : a_)
            if (!is_zero(v)) ++c;
        return c;
    }

private:
    std::size_t n_;
    F one_;
    std::vector<F> a_;
};

} // namespace hopfforge

#endif
