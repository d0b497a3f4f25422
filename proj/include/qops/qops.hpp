// qops.hpp
// Umbrella header for the whole library.

#pragma once

#include "qops/channel.hpp"
#include "qops/complex_matrix.hpp"
#include "qops/constants.hpp"
#include "qops/demon.hpp"
#include "qops/eigen.hpp"
#include "qops/entropy.hpp"
#include "qops/errors.hpp"
#include "qops/json_writer.hpp"
#include "qops/measurement.hpp"
#include "qops/report.hpp"
#include "qops/rng.hpp"
#include "qops/sampling.hpp"
#include "qops/scenarios.hpp"
#include "qops/state.hpp"
