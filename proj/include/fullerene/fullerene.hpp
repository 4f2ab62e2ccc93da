#pragma once

#include "fullerene/errors.hpp"
#include "fullerene/parallel.hpp"
#include "fullerene/spiral.hpp"
#include "fullerene/facetgraph.hpp"
#include "fullerene/integer.hpp"
#include "fullerene/spectral.hpp"
#include "fullerene/isomers.hpp"
#include "fullerene/cluster.hpp"
#include "fullerene/descriptors.hpp"
#include "fullerene/stats.hpp"
#include "fullerene/version.hpp"
