#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "extspec/report.hpp"

namespace extspec {

// specfun, spectral, kernel, boundary, forms
const std::vector<std::string>& suite_names();

// Runs the invariant checks of one module with a seeded generator.
// DomainError for an unknown suite name.
Report verify_suite(const std::string& suite, std::uint64_t seed);

}  // namespace extspec
