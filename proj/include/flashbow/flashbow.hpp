#pragma once

// Umbrella header: the complete flashbow library.

#include "flashbow/bounds.hpp"
#include "flashbow/construct.hpp"
#include "flashbow/core.hpp"
#include "flashbow/detect.hpp"
#include "flashbow/digraph.hpp"
#include "flashbow/io.hpp"
#include "flashbow/rng.hpp"
#include "flashbow/search.hpp"
#include "flashbow/structure.hpp"
