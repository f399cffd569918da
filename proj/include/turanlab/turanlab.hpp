#pragma once

#include "turanlab/blowup.hpp"
#include "turanlab/brute_force.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/exact_cover.hpp"
#include "turanlab/extremal.hpp"
#include "turanlab/hypergraph.hpp"
#include "turanlab/json_io.hpp"
#include "turanlab/lagrangian.hpp"
#include "turanlab/metric.hpp"
#include "turanlab/patterns.hpp"
#include "turanlab/rational.hpp"
#include "turanlab/steiner.hpp"
#include "turanlab/symmetrize.hpp"
