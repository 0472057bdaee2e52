#pragma once

#include "apollodom/bounds.hpp"
#include "apollodom/domination.hpp"
#include "apollodom/dyadic.hpp"
#include "apollodom/errors.hpp"
#include "apollodom/graph.hpp"
#include "apollodom/io.hpp"
#include "apollodom/metrics.hpp"
#include "apollodom/network.hpp"
#include "apollodom/solver.hpp"
#include "apollodom/version.hpp"

//! Exact exponential domination on Apollonian networks.
namespace apollodom {}
