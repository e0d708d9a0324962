#pragma once

#include "tutte/derived.hpp"
#include "tutte/engine.hpp"
#include "tutte/errors.hpp"
#include "tutte/generators.hpp"
#include "tutte/heuristics.hpp"
#include "tutte/invariants.hpp"
#include "tutte/io.hpp"
#include "tutte/multigraph.hpp"
#include "tutte/oracle.hpp"
#include "tutte/ordering.hpp"
#include "tutte/polynomial.hpp"
