#pragma once

// Umbrella header for the stair-convexity stabbing toolkit.

#include "stairconv/census.hpp"
#include "stairconv/convex_stab.hpp"
#include "stairconv/diag3.hpp"
#include "stairconv/errors.hpp"
#include "stairconv/geometry.hpp"
#include "stairconv/monte_carlo.hpp"
#include "stairconv/optimize.hpp"
#include "stairconv/path_type.hpp"
#include "stairconv/rational.hpp"
#include "stairconv/recfsd.hpp"
#include "stairconv/recfsg.hpp"
#include "stairconv/rng.hpp"
#include "stairconv/run_record.hpp"
#include "stairconv/staircore.hpp"
#include "stairconv/stretched.hpp"
#include "stairconv/targets.hpp"
#include "stairconv/transference.hpp"
#include "stairconv/version.hpp"
