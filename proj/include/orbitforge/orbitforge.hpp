// orbitforge.hpp
// Umbrella header.

#pragma once

#include "catalog.hpp"
#include "canonical3.hpp"
#include "classify.hpp"
#include "equivalence.hpp"
#include "invariants.hpp"
#include "io.hpp"
#include "lie.hpp"
#include "orbit.hpp"
#include "random.hpp"
#include "rank.hpp"
#include "schmidt.hpp"
#include "state.hpp"
