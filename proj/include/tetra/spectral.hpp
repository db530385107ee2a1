#pragma once

#include "tetra/spectral/eigen.hpp"
#include "tetra/spectral/singular.hpp"
