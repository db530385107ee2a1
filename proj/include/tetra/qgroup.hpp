#pragma once

#include "tetra/qgroup/algebra.hpp"
#include "tetra/qgroup/intertwining.hpp"
#include "tetra/qgroup/relations.hpp"
