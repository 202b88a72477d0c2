#pragma once

// Exact-arithmetic workbench for degree-9 scrolls, nodal hyperelliptic
// curves and the genus-22 lattice numerology, over a configurable prime
// field.

#include "census.hpp"
#include "runner.hpp"
