#pragma once

#include <cstddef>

#include "hopfforge/matrix.hpp"

namespace hopfforge {

// Stable splitting of the space under iteration of a linear map phi:
// kernel and image of phi^n are complementary phi-invariant subspaces,
// phi is invertible on the image part and nilpotent on the kernel part.
struct FittingData {
    CycMatrix phi;
    CycMatrix P_R; // projector onto the stable image, along the stable kernel
    CycMatrix P_N; // the complementary projector
    std::size_t q = 0; // least q with phi^q vanishing on the kernel part
    CycMatrix psi; // inverts phi on the image part, kills the kernel part
};

FittingData fitting_decompose(const CycMatrix& phi);

} // namespace hopfforge
