#pragma once

#include "pdtree/brute_force.hpp"
#include "pdtree/constants.hpp"
#include "pdtree/error.hpp"
#include "pdtree/fixtures.hpp"
#include "pdtree/format.hpp"
#include "pdtree/gw_sampler.hpp"
#include "pdtree/offspring.hpp"
#include "pdtree/paired_domination.hpp"
#include "pdtree/rng.hpp"
#include "pdtree/rooted_tree.hpp"
#include "pdtree/simulation.hpp"
#include "pdtree/statistics.hpp"
#include "pdtree/tree_builders.hpp"
#include "pdtree/tree_io.hpp"
