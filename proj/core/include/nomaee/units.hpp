#pragma once

namespace nomaee {

/// dBm -> linear watts. 30 dBm is 1 W.
double dbm_to_watts(double x_dbm);

/// Linear watts -> dBm. Inverse of dbm_to_watts for positive inputs.
double watts_to_dbm(double x_w);

}  // namespace nomaee
