#include "nomaee/units.hpp"

#include <cmath>

namespace nomaee {

double dbm_to_watts(double x_dbm) { return std::pow(10.0, x_dbm / 10.0) / 1000.0; }

double watts_to_dbm(double x_w) { return 10.0 * std::log10(x_w * 1000.0); }

}  // namespace nomaee
