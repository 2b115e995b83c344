#pragma once

#include <json.hpp>

#include "symqcs/projtop.hpp"

namespace symqcs {

using Json = nlohmann::json;

// Scalars serialize to "p/q" (reduced, q > 0) or "r mod p"; matrices as
// row-major nested arrays of such strings. Zero-row matrices need shape hints
// from the enclosing object on the way back in.

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, Field f, int rows_hint = -1, int cols_hint = -1);

Json perm_to_json(const Permutation& p);
Permutation perm_from_json(const Json& j);

Json snmodule_to_json(const SnModule& m);
SnModule snmodule_from_json(const Json& j, Field f);

Json symseq_to_json(const SymSeq& s);
SymSeq symseq_from_json(const Json& j, Field f);

Json algebra_to_json(const SymAlgebra& e);
SymAlgebra algebra_from_json(const Json& j);

Json emodule_to_json(const EModule& m);
EModule emodule_from_json(const Json& j);

Json graded_to_json(const GradedModule& m);
GradedModule graded_from_json(const Json& j, const GradedRing& r);

Json ideal_to_json(const SigmaIdeal& i);
SigmaIdeal ideal_from_json(const Json& j, std::shared_ptr<const SymAlgebra> e);

/// Scan scalar strings for a prime-field marker; defaults to the rationals.
Field detect_field(const Json& j);

}  // namespace symqcs
