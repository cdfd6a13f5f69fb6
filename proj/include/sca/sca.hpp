#pragma once

// Umbrella header: exact solvers, feasibility characterizations, brute-force
// oracle, instance generators, and text formats.  The command-line driver
// lives in sca/cli.hpp and is not pulled in here, so that library consumers
// do not need the CLI11 dependency on their include path.

#include "sca/connectivity.hpp"
#include "sca/cover.hpp"
#include "sca/generators.hpp"
#include "sca/graph.hpp"
#include "sca/instance.hpp"
#include "sca/mapping.hpp"
#include "sca/matching.hpp"
#include "sca/oracle.hpp"
#include "sca/solve_connect.hpp"
#include "sca/solve_two_connect.hpp"
#include "sca/unweighted.hpp"
