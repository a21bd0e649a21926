#pragma once

#include "deptree/generate/arrangements.hpp"
#include "deptree/generate/counting.hpp"
#include "deptree/generate/exhaustive_trees.hpp"
#include "deptree/generate/random_trees.hpp"
#include "deptree/generate/rng.hpp"
