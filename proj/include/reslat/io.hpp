#pragma once

#include <filesystem>
#include <string>

#include "reslat/finalg.hpp"

namespace reslat {

/// Parses the algebra JSON format. Missing division tables are completed.
/// Throws MalformedAlgebra (bad JSON / shapes) or NotResiduated.
FinAlg algebra_from_json(const std::string& text);
FinAlg load_algebra(const std::filesystem::path& path);

/// Serializes with fixed field order; `stamp` (if nonempty) is added as an
/// extra "stamp" field.
std::string algebra_to_json(const FinAlg& alg, const std::string& stamp = {});
void save_algebra(const FinAlg& alg, const std::filesystem::path& path, const std::string& stamp = {});

}  // namespace reslat
