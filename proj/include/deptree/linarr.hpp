#pragma once

#include "deptree/linarr/classify.hpp"
#include "deptree/linarr/flux.hpp"
#include "deptree/linarr/metrics.hpp"
#include "deptree/linarr/min_d.hpp"
