#pragma once

#include "tetra/reduction/checks.hpp"
#include "tetra/reduction/s_matrix.hpp"
