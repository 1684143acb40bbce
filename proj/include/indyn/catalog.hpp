#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "indyn/cylinder.hpp"
#include "indyn/system.hpp"

namespace indyn {

using CatalogSystem = std::variant<FiniteSystem, CylinderSystem>;

/// Named example systems:
///   cycle       param = length, single cycle with distance |i-j|/p
///   harmonic    param = depth, the reciprocal space with doubling blocks
///   odometer    the dyadic adding machine (param ignored)
///   full-shift  param = alphabet size (default 2)
CatalogSystem make_catalog_system(const std::string& name, std::uint64_t param);

}  // namespace indyn
