#pragma once

#include "deptree/baselines.hpp"
#include "deptree/conllu.hpp"
#include "deptree/error.hpp"
#include "deptree/features.hpp"
#include "deptree/generate.hpp"
#include "deptree/graphs.hpp"
#include "deptree/io.hpp"
#include "deptree/linarr.hpp"
#include "deptree/numeric.hpp"
#include "deptree/properties.hpp"
#include "deptree/utilities.hpp"
