#pragma once

#include "arith.hpp"
#include "congruence.hpp"
#include "distinct_count.hpp"
#include "errors.hpp"
#include "graph_enum.hpp"
#include "oracle.hpp"
#include "series.hpp"
