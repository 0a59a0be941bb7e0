#pragma once

#include "mirror/critical_solver.hpp"
#include "mirror/flag_core.hpp"
#include "mirror/json_io.hpp"
#include "mirror/matrix.hpp"
#include "mirror/mirror_graph.hpp"
#include "mirror/peterson_map.hpp"
#include "mirror/scalar.hpp"
#include "mirror/sparse_poly.hpp"
#include "mirror/symbolic.hpp"
