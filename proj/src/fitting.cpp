#include "hopfforge/fitting.hpp"

#include <stdexcept>

#include "hopfforge/rowspace.hpp"

namespace hopfforge {

FittingData fitting_decompose(const CycMatrix& phi) {
    const std::size_t n = phi.rows();
    if (n == 0 || phi.cols() != n)
        throw std::invalid_argument("fitting_decompose: map must be square and nonempty");
    const CycScalar zero = zero_like(phi.at(0, 0));
    const CycScalar one = one_like(zero);

    // stable power: image and kernel of phi^n no longer move
    CycMatrix P = CycMatrix::identity(n, one);
    for (std::size_t s = 0; s < n; ++s) P = phi * P;

    // basis of the stable image: independent columns of phi^n
    RowSpace<CycScalar> span(n, one);
    std::vector<std::vector<CycScalar>> image_basis;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<CycScalar> col(n, zero);
        for (std::size_t i = 0; i < n; ++i) col[i] = P.at(i, j);
        if (span.add(col)) image_basis.push_back(std::move(col));
    }
    std::vector<std::vector<CycScalar>> kernel_basis = P.kernel_basis();
    const std::size_t r = image_basis.size();
    if (r + kernel_basis.size() != n)
        throw std::logic_error("fitting_decompose: image and kernel ranks do not add up");

    // adapted basis: image vectors first, then kernel vectors
    CycMatrix T(n, n, zero);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < n; ++i) T.at(i, j) = image_basis[j][i];
    for (std::size_t j = r; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) T.at(i, j) = kernel_basis[j - r][i];
    auto Tinv = T.inverse();
    if (!Tinv)
        throw std::logic_error("fitting_decompose: adapted basis is singular");

    CycMatrix selector(n, n, zero);
    for (std::size_t i = 0; i < r; ++i) selector.at(i, i) = one;
    CycMatrix P_R = T * selector * *Tinv;
    CycMatrix P_N = CycMatrix::identity(n, one) - P_R;

    // nilpotency index of phi on the kernel part
    std::size_t q = 0;
    CycMatrix M = P_N;
    while (!M.is_zero_matrix()) {
        M = phi * M;
        ++q;
        if (q > n)
            throw std::logic_error("fitting_decompose: nilpotent part did not vanish");
    }

    // invert the image block of phi in the adapted basis, kill the rest
    CycMatrix conj = *Tinv * phi * T;
    CycMatrix A(r, r, zero);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) A.at(i, j) = conj.at(i, j);
    auto Ainv = A.inverse();
    if (!Ainv)
        throw std::logic_error("fitting_decompose: map is singular on its stable image");
    CycMatrix block(n, n, zero);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) block.at(i, j) = Ainv->at(i, j);
    CycMatrix psi = T * block * *Tinv;

    if (psi * phi != P_R || phi * psi != P_R)
        throw std::logic_error("fitting_decompose: pseudo-inverse identities failed");

    return FittingData{phi, std::move(P_R), std::move(P_N), q, std::move(psi)};
}

} // namespace hopfforge
