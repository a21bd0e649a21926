#pragma once

#include "deptree/properties/centre.hpp"
#include "deptree/properties/metrics.hpp"
#include "deptree/properties/shape.hpp"
