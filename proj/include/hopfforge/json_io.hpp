#ifndef HOPFFORGE_JSON_IO_HPP
#define HOPFFORGE_JSON_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hopfforge/matrix.hpp"
#include "hopfforge/structure.hpp"

namespace hopfforge {

// ===========================================================================
// Interchange format, one JSON document per structure:
//   dim        dimension n
//   conductor  cyclotomic conductor m of the coefficient field
//   mul        array of [i, j, k, scalar]: coefficient of e_k in e_i e_j
//   comul      array of [i, j, k, scalar]: coefficient of e_j (x) e_k in
//              Delta(e_i)
//   counit     array of n scalar strings
//   antipode   optional array of [i, j, scalar]: coefficient of e_i in S(e_j)
//   meta       {"name": ..., "info": {...}}, free-form
// Indices are 1-based; absent entries are zero; triples are sorted.  Scalar
// strings follow the scalars grammar; family documents additionally admit t.
//
// Linear maps use {"dim", "conductor", "rows": [[scalar, ...], ...]} (dense).
// ===========================================================================

nlohmann::ordered_json hopf_to_json(const HopfData& H);
nlohmann::ordered_json family_to_json(const FamilyData& F);
HopfData hopf_from_json(const nlohmann::json& j);     // throws std::runtime_error
FamilyData family_from_json(const nlohmann::json& j); // throws std::runtime_error

nlohmann::ordered_json matrix_to_json(const Matrix<CycScalar>& M, unsigned conductor);
Matrix<CycScalar> matrix_from_json(const nlohmann::json& j);

// canonical on-disk rendering (stable across runs, newline terminated)
std::string pretty(const nlohmann::ordered_json& j);

std::uint64_t fnv1a64(std::string_view bytes);

std::string read_text_file(const std::string& path); // throws std::runtime_error
void write_text_file(const std::string& path, const std::string& text);

} // namespace hopfforge

#endif
