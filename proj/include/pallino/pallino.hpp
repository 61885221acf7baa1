#pragma once

// Umbrella header for the whole toolkit.

#include "pallino/card.hpp"
#include "pallino/cipher.hpp"
#include "pallino/error.hpp"
#include "pallino/grid.hpp"
#include "pallino/rng.hpp"
#include "pallino/sim.hpp"
#include "pallino/turtle.hpp"
#include "pallino/worksheet.hpp"
