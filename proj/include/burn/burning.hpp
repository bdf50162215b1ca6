// Umbrella header.
#pragma once

#include "burn/approx_general.hpp"
#include "burn/approx_tree.hpp"
#include "burn/bincover.hpp"
#include "burn/common.hpp"
#include "burn/exact.hpp"
#include "burn/generate.hpp"
#include "burn/graph.hpp"
#include "burn/ptas_paths.hpp"
#include "burn/schedule.hpp"
