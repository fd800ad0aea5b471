#ifndef HOPFFORGE_DEGENERATION_HPP
#define HOPFFORGE_DEGENERATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopfforge/fitting.hpp"
#include "hopfforge/structure.hpp"

namespace hopfforge {

// ===========================================================================
// Degenerations along a one-parameter family of basis changes f_t = phi + t*id
// and their limits at t = 0.
//
// Two independent routes compute the same limit:
//   degenerate_closed_form  checks two pointwise compatibility conditions on
//                           (H, phi) built from the Fitting splitting of phi
//                           and assembles the limit structure directly;
//   degenerate_symbolic     transports H by f_t over the rational-function
//                           field and takes entry-wise limits, reporting a
//                           pole when no limit exists.
// A pole among the multiplication entries occurs exactly when the
// multiplication condition fails, and likewise for comultiplication; the two
// routes are cross-checked against each other in the test suite.
//
// Both routes normalize the limit's unit back to e_1 and recover the counit
// by a linear solve (unit and counit are unique when they exist, so the
// routes cannot disagree there).  The antipode of H is kept when it still
// satisfies the antipode laws for the limit, and recomputed otherwise.
// ===========================================================================

// A failed pointwise check: which family of identities, and the 1-based
// index tuple of the first offending entry in scan order.
struct ConditionViolation {
    std::string where;
    std::vector<std::size_t> index;
};

std::string describe_violation(const ConditionViolation& v);

// Multiplication compatibility: with mu_N = P_N o mu,
//   phi^2 o mu_N - phi o mu_N o (phi (x) id) - phi o mu_N o (id (x) phi)
//     + mu_N o (phi (x) phi) = 0
// on all basis pairs.  Returns the first violating (i, j, k) or nothing.
std::optional<ConditionViolation> check_mul_condition(const HopfData& H, const FittingData& fit);

// Comultiplication compatibility: for every basis element x, writing
// Delta(x) as a matrix, the four identities
//   1: (P_R (x) phi P_N) Delta(x) = (P_R (x) P_N) Delta(phi x)
//   2: (phi P_N (x) P_R) Delta(x) = (P_N (x) P_R) Delta(phi x)
//   3: (P_N (x) P_N) Delta(x) = 0
//   4: (P_N (x) P_N) Delta(phi x) = (P_N (x) phi P_N) Delta(x)
// hold.  Returns the first violation (identity number in `where`) or nothing.
std::optional<ConditionViolation> check_comul_condition(const HopfData& H,
                                                        const FittingData& fit);

struct DegenerationReport {
    bool mul_condition_holds = false;
    bool comul_condition_holds = false;
    std::optional<ConditionViolation> mul_violation;
    std::optional<ConditionViolation> comul_violation;
    std::optional<HopfData> limit;
    bool unit_found = false;
    bool counit_found = false;
    bool antipode_found = false;
    std::optional<bool> oracle_agreement; // filled only when both routes ran
    std::string verdict;                  // one-line human-readable summary
};

DegenerationReport degenerate_closed_form(const HopfData& H, const CycMatrix& phi);
DegenerationReport degenerate_symbolic(const HopfData& H, const CycMatrix& phi);

// Runs both routes, cross-checks them, and merges the reports.  The merged
// report carries oracle_agreement; disagreement shows up there rather than
// as an exception so the caller can surface it.
DegenerationReport degenerate_both(const HopfData& H, const CycMatrix& phi);

// Reduce a general family v + t*w (w invertible) to the normal form
// phi + t*id with phi = v o w^{-1}; the two families differ by the fixed
// basis change w, which does not affect whether a limit exists.
CycMatrix phi_from_pair(const CycMatrix& v, const CycMatrix& w);

struct FamilyLimit {
    std::optional<HopfData> limit;
    std::string pole_entry; // first offending entry when the limit fails
};

// Entry-wise limit at t = 0 of a one-parameter structure whose tables are
// rational functions of t.  Throws std::invalid_argument when the family
// does not satisfy the bialgebra identities as identities in t.
FamilyLimit family_limit(const FamilyData& F);

// Non-negative degrees d_1..d_n with d_1 = 0, interpreted through the
// diagonal family f_t = diag(t^{d_1}, ..., t^{d_n}).
struct GradingVector {
    std::vector<std::size_t> degrees;
};

// Associated graded structure: keeps exactly the degree-homogeneous
// structure constants.  The degrees must define a filtration (no structure
// constant may raise degree); violations are reported with the offending
// tuple and no limit is produced.
DegenerationReport graded_degeneration(const HopfData& H, const GradingVector& d);

} // namespace hopfforge

#endif
