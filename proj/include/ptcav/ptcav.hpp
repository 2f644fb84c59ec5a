#pragma once

// Umbrella header for the PT-symmetric coupled-cavity moment simulator.

#include "ptcav/hyperbolic.hpp"
#include "ptcav/mat2.hpp"
#include "ptcav/moment_state.hpp"
#include "ptcav/moments.hpp"
#include "ptcav/noise.hpp"
#include "ptcav/oracle.hpp"
#include "ptcav/propagator.hpp"
#include "ptcav/states.hpp"
#include "ptcav/system.hpp"
#include "ptcav/table.hpp"
#include "ptcav/verify.hpp"
#include "ptcav/witnesses.hpp"
