#include "opensteady/cli/dump.hpp"

namespace opensteady::cli {

nlohmann::json steady_dump(const std::string& model, const DensityMatrix& rho, double energy,
                           double entropy, double residual) {
  nlohmann::json entries = nlohmann::json::array();
  for (int m = 0; m < rho.dim(); ++m)
    for (int n = 0; n < rho.dim(); ++n)
      entries.push_back({rho(m, n).real(), rho(m, n).imag()});
  return {{"model", model}, {"dim", rho.dim()}, {"rho", std::move(entries)},
          {"U", energy},    {"S", entropy},     {"residual", residual}};
}

}  // namespace opensteady::cli
