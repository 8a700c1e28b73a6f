#pragma once

// Umbrella header: the whole library.

#include "grt/bitset.hpp"
#include "grt/colouring.hpp"
#include "grt/compress.hpp"
#include "grt/error.hpp"
#include "grt/formulas.hpp"
#include "grt/graph.hpp"
#include "grt/graph_file.hpp"
#include "grt/oracle.hpp"
#include "grt/pipeline.hpp"
#include "grt/sigma.hpp"
