#pragma once

#include "deptree/graphs/arrangement.hpp"
#include "deptree/graphs/head_vector.hpp"
#include "deptree/graphs/trees.hpp"
#include "deptree/graphs/types.hpp"
