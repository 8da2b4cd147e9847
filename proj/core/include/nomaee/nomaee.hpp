#pragma once

#include "nomaee/allocation.hpp"
#include "nomaee/errors.hpp"
#include "nomaee/montecarlo.hpp"
#include "nomaee/optimizer.hpp"
#include "nomaee/qos.hpp"
#include "nomaee/report.hpp"
#include "nomaee/rng.hpp"
#include "nomaee/system_model.hpp"
#include "nomaee/tdma.hpp"
#include "nomaee/units.hpp"
#include "nomaee/version.hpp"
