#ifndef HOPFFORGE_CATALOG_HPP
#define HOPFFORGE_CATALOG_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hopfforge/structure.hpp"

namespace hopfforge {

// ===========================================================================
// Builders for the stock examples: group algebras (cyclic, products,
// dihedral, quaternion, alternating), the Taft algebras T_4 and T_9, and the
// two x-extension families in dimensions 8 and 12, together with a read-only
// registry of named entries.  Builders are pure and every registry entry
// passes full verification (asserted in the test suite, not at build time).
// ===========================================================================

// Finite group given by its multiplication table, 0-based, identity at 0.
struct GroupTable {
    std::size_t order = 0;
    std::vector<std::vector<std::size_t>> mul; // mul[i][j] = index of g_i g_j
};

GroupTable cyclic_group(std::size_t n);
GroupTable product_group(const GroupTable& a, const GroupTable& b);
GroupTable dihedral_group(std::size_t n); // order 2n, n >= 3
GroupTable symmetric_group_3();
GroupTable quaternion_group();
GroupTable alternating_group_4();

// throws std::invalid_argument when the table is not a group
void validate_group_table(const GroupTable& g);

// Basis = group elements; grouplike comultiplication; S = inversion.
HopfData group_algebra(const GroupTable& g, const std::string& name);

// Taft algebra of dimension p^2 over Q(zeta_p), p in {2, 3}.  Basis ordered
// 1, y, ..., y^{p-1}, x, yx, ..., y^{p-1}x with relations x^p = 0, y^p = 1,
// xy = q yx (q = zeta_p), Delta(y) = y(x)y, Delta(x) = x(x)y + 1(x)x.
HopfData taft_algebra(unsigned p);

// Dimension-2N algebra on basis 1, g, ..., g^{N-1}, x, gx, ..., g^{N-1}x with
// g^N = 1, xg = -gx, Delta(g) = g(x)g, Delta(x) = x(x)g + 1(x)x and
//   N = 4:  x^2 = alpha (1 - g^2)
//   N = 6:  x^2 = alpha (g^2 - 1)
// Templated over the scalar so alpha may be the family parameter t.
template <class F>
StructureData<F> x2_structure(std::size_t N, const F& alpha);

HopfData x2_point(std::size_t N, const Rational& alpha); // conductor 1
FamilyData x2_generic(std::size_t N);                    // alpha = t

struct CatalogEntry {
    std::string id;      // stable lookup key
    std::string display; // customary name
    std::size_t dim;
    std::string kind;     // "group" | "group-dual" | "taft" | "x2" | "x2-dual"
    std::string rigidity; // "rigid" | "not rigid"
    std::function<HopfData()> build;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry* catalog_find(const std::string& id); // null when unknown
HopfData catalog_get(const std::string& id);             // throws std::out_of_range

// extern template declarations for the two scalar types in use
extern template StructureData<CycScalar> x2_structure<CycScalar>(std::size_t, const CycScalar&);
extern template StructureData<RatFunc> x2_structure<RatFunc>(std::size_t, const RatFunc&);

} // namespace hopfforge

#endif
