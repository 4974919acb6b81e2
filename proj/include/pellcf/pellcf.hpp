#pragma once

#include "pellcf/bigint.hpp"
#include "pellcf/cf_engine.hpp"
#include "pellcf/error.hpp"
#include "pellcf/lucas_seq.hpp"
#include "pellcf/oracle.hpp"
#include "pellcf/pell_core.hpp"
#include "pellcf/quadratic.hpp"
#include "pellcf/solution.hpp"
#include "pellcf/solver.hpp"
#include "pellcf/special_family.hpp"
#include "pellcf/theorem_sweep.hpp"
