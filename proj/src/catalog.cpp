#include "indyn/catalog.hpp"

#include <stdexcept>

namespace indyn {

CatalogSystem make_catalog_system(const std::string& name, std::uint64_t param) {
    if (name == "cycle") return make_cycle(static_cast<std::size_t>(param));
    if (name == "harmonic") return make_harmonic(static_cast<std::size_t>(param));
    if (name == "odometer") return CylinderSystem::odometer();
    if (name == "full-shift") {
        return CylinderSystem::full_shift(param == 0 ? 2 : static_cast<std::size_t>(param));
    }
    throw std::invalid_argument("unknown catalog system '" + name +
                                "' (expected cycle, harmonic, odometer or full-shift)");
}

}  // namespace indyn
