#pragma once

#include "ussp/chain_solver.hpp"
#include "ussp/coverage.hpp"
#include "ussp/dispatch.hpp"
#include "ussp/errors.hpp"
#include "ussp/generator.hpp"
#include "ussp/instance.hpp"
#include "ussp/multi_solver.hpp"
#include "ussp/nat.hpp"
#include "ussp/numtheory.hpp"
#include "ussp/oracle.hpp"
#include "ussp/rational.hpp"
#include "ussp/subset_finder.hpp"
#include "ussp/two_term.hpp"
