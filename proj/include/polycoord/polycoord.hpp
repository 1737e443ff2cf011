#pragma once

#include "polycoord/coords.hpp"
#include "polycoord/decomposition.hpp"
#include "polycoord/dihedral.hpp"
#include "polycoord/distribution.hpp"
#include "polycoord/errors.hpp"
#include "polycoord/json_io.hpp"
#include "polycoord/locator.hpp"
#include "polycoord/point.hpp"
#include "polycoord/polygon.hpp"
#include "polycoord/rational.hpp"
#include "polycoord/weights.hpp"
