#pragma once

#include "chazy/transforms.hpp"

namespace chazy::internal_charts {

std::vector<Chart> chazy_III_charts();
std::vector<Chart> chazy_IX_pde_charts();
std::vector<Chart> chazy_X_charts();
std::vector<Chart> chazy_VIII_charts();
std::vector<Chart> appC_charts();
std::vector<Chart> appD_charts();
std::vector<Chart> appE_charts();
std::vector<Chart> appE_gen_charts();
std::vector<Chart> chazy_I_charts();

}  // namespace chazy::internal_charts
