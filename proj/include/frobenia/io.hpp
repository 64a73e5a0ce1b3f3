#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "frobenia/decomp.hpp"

namespace frobenia {

using Json = nlohmann::ordered_json;

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Field& f, const Json& j);

/// {"rows", "cols", "entries": [[scalar strings]]}
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Field& f, const Json& j);

/// {"name", "field", "dim", "basis_labels", "unit", "tau", "structure": [[i, j, k, "c"]]}
Json algebra_to_json(const Algebra& A);
AlgebraPtr algebra_from_json(const Json& j);

/// {"algebra", "dim", "action": [matrix per basis element]}
Json module_to_json(const RightModule& M);
RightModule module_from_json(const AlgebraPtr& A, const Json& j);

Json adapted_pim_to_json(const AdaptedPim& P);
Json prime_to_json(const PrimeSpec& p);
Json decomposition_to_json(const DecompositionMatrix& d);

/// Human-readable element, e.g. "1/2 + 1/2*g".
std::string format_element(const Algebra& A, const Vec& x);

Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

/// FROBENIA_SEED when set, otherwise the flag value, otherwise 1.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

/// Lower-case hex SHA-256.
std::string sha256_hex(const std::string& data);

}  // namespace frobenia
