#pragma once

#include "grasscf/matrix.hpp"
#include "grasscf/plucker.hpp"
#include "grasscf/transforms.hpp"
#include "grasscf/reconstruct.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace grasscf {

using Json = nlohmann::ordered_json;

// --- text formats ---
// Pluecker vector: `k n : e_0 e_1 ... e_{N-1}`, decimal integers.
// Matrix: one whitespace-separated row per line; `#` starts a comment.

PluckerVector plucker_from_text(const std::string& text);
LatticeMatrix matrix_from_text(const std::string& text);
std::string matrix_to_text(const LatticeMatrix& m);

// --- JSON formats (integers as decimal strings to keep full precision) ---
// Pluecker vector: {"k":2,"n":4,"entries":["10",...]}
// Trace: {"k":..,"n":..,"steps":[{"label":..,"n":..,"matrix":[["1",..],..]},..],
//         "p_hat":".."}
// Result: {"matrix":[[..],..],"p_hat":"..","index":".."}

Json plucker_to_json(const PluckerVector& p);
PluckerVector plucker_from_json(const Json& j);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json trace_to_json(const Trace& t);
Trace trace_from_json(const Json& j);

Json result_to_json(const ReconstructionResult& r);

// Detects `{` as JSON, otherwise text.
PluckerVector plucker_from_any(const std::string& text);
LatticeMatrix matrix_from_any(const std::string& text);

// --- deterministic random instances ---

// Seeded full-rank k x n matrix with entries in [-bound, bound]. Bit-stable
// for a fixed seed. Throws InternalError after max_tries rank-deficient
// draws.
LatticeMatrix random_full_rank_matrix(int k, int n, std::uint64_t bound, std::uint64_t seed,
                                      int max_tries = 1000);

} // namespace grasscf
