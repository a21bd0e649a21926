#pragma once

#include "deptree/io/process.hpp"
#include "deptree/io/treebank.hpp"
