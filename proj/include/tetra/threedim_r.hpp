#pragma once

#include "tetra/threedim_r/aq_sl3.hpp"
#include "tetra/threedim_r/checks.hpp"
#include "tetra/threedim_r/identities.hpp"
#include "tetra/threedim_r/r_matrix.hpp"
