#pragma once

#include "equipart/bounds.hpp"
#include "equipart/equitable.hpp"
#include "equipart/errors.hpp"
#include "equipart/generators.hpp"
#include "equipart/graph.hpp"
#include "equipart/io.hpp"
#include "equipart/number.hpp"
#include "equipart/report.hpp"
#include "equipart/search.hpp"
#include "equipart/spectral.hpp"
#include "equipart/vertex_set.hpp"
