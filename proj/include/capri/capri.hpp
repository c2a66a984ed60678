#pragma once

#include "capacity.hpp"
#include "cotree.hpp"
#include "generate.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "matching.hpp"
#include "oracle.hpp"
#include "product_alpha.hpp"
#include "ratio.hpp"
#include "split.hpp"
