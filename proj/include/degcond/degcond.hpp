#pragma once

#include "degcond/bounds.hpp"
#include "degcond/conditions.hpp"
#include "degcond/degree_sequence.hpp"
#include "degcond/errors.hpp"
#include "degcond/graph.hpp"
#include "degcond/oracles.hpp"
#include "degcond/rational.hpp"
#include "degcond/sinks.hpp"
#include "degcond/witnesses.hpp"
