#pragma once

// Umbrella header for the aurea library.

#include "aurea/errors.hpp"
#include "aurea/rational.hpp"
#include "aurea/fibonacci.hpp"
#include "aurea/decimal.hpp"
#include "aurea/golden.hpp"
#include "aurea/measure.hpp"
#include "aurea/identities.hpp"
#include "aurea/subdivision.hpp"
#include "aurea/measures.hpp"
#include "aurea/errata.hpp"
#include "aurea/render.hpp"
