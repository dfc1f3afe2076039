#pragma once

// Umbrella header: exact catalysis arithmetic, thermal spectra, Renyi
// divergences, error lower bounds, the rational LP certifier, and JSON I/O.

#include "thermocat/numeric.hpp"
#include "thermocat/prob_vec.hpp"
#include "thermocat/hamiltonians.hpp"
#include "thermocat/catalysts.hpp"
#include "thermocat/divergences.hpp"
#include "thermocat/bounds.hpp"
#include "thermocat/lp.hpp"
#include "thermocat/io.hpp"
