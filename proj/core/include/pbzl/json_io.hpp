#ifndef PBZL_JSON_IO_HPP
#define PBZL_JSON_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "pbzl/algebra.hpp"

namespace pbzl {

/// Document shape, bit-exact: {"name": str, "size": n, "leq": n rows of 0/1
/// including reflexivity, "prime": [int...], "tilde": [int...] | null}.
/// Indices are 0-based with bottom 0 and top n-1.
nlohmann::ordered_json algebra_to_json(const FiniteAlgebra& a);

/// Parses and validates; throws AlgebraError (BadInput for shape problems,
/// validation codes otherwise).
FiniteAlgebra algebra_from_json(const nlohmann::json& doc);

FiniteAlgebra load_algebra(const std::string& path);
FiniteAlgebra read_algebra(std::istream& in, const std::string& origin);

}  // namespace pbzl

#endif
