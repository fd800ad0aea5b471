#pragma once

#include <cstddef>
#include <optional>

#include "hopfforge/structure.hpp"
#include "hopfforge/matrix.hpp"

namespace hopfforge {

bool is_commutative(const HopfData& H);
bool is_cocommutative(const HopfData& H);

// Matrix of the composite v -> mul(comul(v)) on the ambient basis:
// column i holds the coordinates of mul(comul(e_i)).
CycMatrix mu_delta_matrix(const HopfData& H);

// Number of grouplike elements over the algebraic closure, counted without
// root extraction: characters of the dual algebra, obtained as the rank of
// the trace form on the abelianisation of that algebra.
std::size_t grouplike_count(const HopfData& H);

// Same count for the dual, i.e. characters of H itself as an algebra.
std::size_t dual_grouplike_count(const HopfData& H);

// Number of simple blocks of H over the closure: the dimension of the centre
// of H modulo its trace-form radical (which in characteristic zero is the
// Jacobson radical).
std::size_t block_count(const HopfData& H);

// Same count for the dual algebra.
std::size_t dual_block_count(const HopfData& H);

// Least k with S^k = id, searched up to 2*dim^2; nullopt past the bound.
// Requires a stored antipode.
std::optional<std::size_t> antipode_order(const HopfData& H);

// Dimension of the space of maps L with L(1) = 0, counit(L(x)) = 0 that are
// derivations for mul and coderivations for comul: the tangent space of the
// symmetry group at the identity.
std::size_t biderivation_dim(const HopfData& H);

// dim^2 minus biderivation_dim: the dimension of the basis-change orbit.
std::size_t orbit_dimension(const HopfData& H);

struct Fingerprint {
    std::size_t dim = 0;
    bool commutative = false;
    bool cocommutative = false;
    std::size_t grouplike_count = 0;
    std::size_t dual_grouplike_count = 0;
    std::size_t block_count = 0;
    std::size_t dual_block_count = 0;
    std::optional<std::size_t> antipode_order; // nullopt: exceeds the bound
    CycScalar trace_S;
    std::size_t rank_mu_delta = 0;
    CycScalar trace_mu_delta;
    std::size_t biderivation_dim = 0;

    bool operator==(const Fingerprint& o) const;
    bool operator!=(const Fingerprint& o) const { return !(*this == o); }
};

// All invariants in one record. Requires a stored antipode; equality of two
// records never proves isomorphism, inequality always rules it out.
Fingerprint fingerprint(const HopfData& H);

} // namespace hopfforge
