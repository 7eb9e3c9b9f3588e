#pragma once

#include <string>

#include <json.hpp>

#include "opensteady/density.hpp"

namespace opensteady::cli {

/// {"model", "dim", "rho": row-major [re, im] pairs, "U", "S", "residual"}
nlohmann::json steady_dump(const std::string& model, const DensityMatrix& rho, double energy,
                           double entropy, double residual);

}  // namespace opensteady::cli
