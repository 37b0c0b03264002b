#pragma once

#include "expind/constructors.hpp"
#include "expind/dyadic.hpp"
#include "expind/experiments.hpp"
#include "expind/families.hpp"
#include "expind/graph.hpp"
#include "expind/random.hpp"
#include "expind/solvers.hpp"
#include "expind/version.hpp"
#include "expind/weights.hpp"
