#ifndef HOPFFORGE_STRUCTURE_HPP
#define HOPFFORGE_STRUCTURE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfforge/matrix.hpp"
#include "hopfforge/tensor.hpp"

namespace hopfforge {

// ===========================================================================
// StructureData<F>: a finite-dimensional (bi)algebra presented by structure
// constants over the field of fractions generated by F, with the unit pinned
// to the first basis vector e_1.
//
//   C(i,j,k)  coefficient of e_k in e_i * e_j
//   D(i,j,k)  coefficient of e_j (x) e_k in Delta(e_i)
//   xi[i]     counit value on e_i
//   S         optional antipode matrix, S(i,j) = coefficient of e_i in S(e_j)
//
// Nothing here is validated on construction; run the verifier for that.
// HopfData fixes the scalars to a cyclotomic field, FamilyData to univariate
// rational functions over one (one-parameter families in t).
// ===========================================================================

struct Meta {
    std::string name;                        // display identifier, may be empty
    std::map<std::string, std::string> info; // free-form key/value annotations
};

template <class F>
struct StructureData {
    std::size_t n = 0;
    F one;                     // scalar exemplar; carries the coefficient field
    Tensor3<F> C;
    Tensor3<F> D;
    std::vector<F> xi;
    std::optional<Matrix<F>> S;
    Meta meta;

    static StructureData zeroed(std::size_t n, const F& one) {
        StructureData H;
        H.n = n;
        H.one = one;
        F z = one;
        z -= one;
        H.C = Tensor3<F>(n, z);
        H.D = Tensor3<F>(n, z);
        H.xi.assign(n, z);
        return H;
    }

    F zero() const {
        F z = one;
        z -= one;
        return z;
    }

    bool same_constants(const StructureData& o) const {
        if (n != o.n || C != o.C || D != o.D || xi != o.xi) return false;
        if (S.has_value() != o.S.has_value()) return false;
        if (S && !(*S == *o.S)) return false;
        return true;
    }
};

using HopfData = StructureData<CycScalar>;
using FamilyData = StructureData<RatFunc>;

// Pre-normalization presentation where the unit is an arbitrary vector u
// rather than e_1.  Produced by dualization; consumed by normalize_unit.
template <class F>
struct RawStructure {
    std::size_t n = 0;
    F one;
    Tensor3<F> C;
    Tensor3<F> D;
    std::vector<F> unit;
    std::vector<F> xi;
    std::optional<Matrix<F>> S;
    Meta meta;
};

// Embed a fixed structure into the family scalar ring (constant in t).
inline FamilyData family_constant(const HopfData& H) {
    FamilyData G;
    G.n = H.n;
    G.one = RatFunc::from_scalar(one_like(H.one));
    RatFunc z = RatFunc::zero(H.one.conductor());
    G.C = Tensor3<RatFunc>(H.n, z);
    G.D = Tensor3<RatFunc>(H.n, z);
    G.xi.assign(H.n, z);
    for (std::size_t i = 0; i < H.n; ++i)
        for (std::size_t j = 0; j < H.n; ++j)
            for (std::size_t k = 0; k < H.n; ++k) {
                if (!is_zero(H.C.at(i, j, k))) G.C.at(i, j, k) = RatFunc::from_scalar(H.C.at(i, j, k));
                if (!is_zero(H.D.at(i, j, k))) G.D.at(i, j, k) = RatFunc::from_scalar(H.D.at(i, j, k));
            }
    for (std::size_t i = 0; i < H.n; ++i) G.xi[i] = RatFunc::from_scalar(H.xi[i]);
    if (H.S) {
        Matrix<RatFunc> SM(H.n, H.n, z);
        for (std::size_t i = 0; i < H.n; ++i)
            for (std::size_t j = 0; j < H.n; ++j)
                if (!is_zero(H.S->at(i, j))) SM.at(i, j) = RatFunc::from_scalar(H.S->at(i, j));
        G.S = std::move(SM);
    }
    G.meta = H.meta;
    return G;
}

} // namespace hopfforge

#endif
