#pragma once

#include "vacfluc/fluctuation.hpp"
#include "vacfluc/gaussian_beam.hpp"
#include "vacfluc/mode_network.hpp"
#include "vacfluc/overlap.hpp"
#include "vacfluc/quadrature.hpp"
#include "vacfluc/sweep.hpp"
#include "vacfluc/sweep_io.hpp"
#include "vacfluc/validation.hpp"
#include "vacfluc/version.hpp"
