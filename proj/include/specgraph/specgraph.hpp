#pragma once

#include "specgraph/canonical.hpp"
#include "specgraph/charpoly.hpp"
#include "specgraph/cospectrality.hpp"
#include "specgraph/distance.hpp"
#include "specgraph/enumerate.hpp"
#include "specgraph/family_expr.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/spectrum.hpp"
#include "specgraph/table.hpp"
#include "specgraph/verify.hpp"
