#pragma once

// Umbrella header: geometric phases of degenerate mixed two-qubit states
// under the transverse-field XX model.

#include "geomphase/matrix.hpp"
#include "geomphase/spin_model.hpp"
#include "geomphase/phase_engine.hpp"
#include "geomphase/closed_form.hpp"
#include "geomphase/sweep.hpp"
#include "geomphase/figures.hpp"
