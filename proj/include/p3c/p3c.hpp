#pragma once

#include "p3c/convexity.hpp"
#include "p3c/error.hpp"
#include "p3c/families.hpp"
#include "p3c/graph.hpp"
#include "p3c/graph_io.hpp"
#include "p3c/radon.hpp"
#include "p3c/tree_canon.hpp"
#include "p3c/tree_dp.hpp"
#include "p3c/vertex_set.hpp"
#include "p3c/verify.hpp"
