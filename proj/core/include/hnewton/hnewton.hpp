#pragma once

// umbrella header

#include "hnewton/certify.hpp"
#include "hnewton/function_spec.hpp"
#include "hnewton/harmonic_map.hpp"
#include "hnewton/laurent.hpp"
#include "hnewton/newton.hpp"
#include "hnewton/parallel.hpp"
#include "hnewton/polynomial.hpp"
#include "hnewton/search.hpp"
#include "hnewton/seeding.hpp"
#include "hnewton/types.hpp"
#include "hnewton/viz.hpp"
