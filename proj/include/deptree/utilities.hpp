#pragma once

#include "deptree/utilities/isomorphism.hpp"
