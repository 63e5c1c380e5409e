#pragma once

#include "ostrowski/bounds.hpp"
#include "ostrowski/errors.hpp"
#include "ostrowski/expr.hpp"
#include "ostrowski/function.hpp"
#include "ostrowski/mconvex.hpp"
#include "ostrowski/means.hpp"
#include "ostrowski/quadrature.hpp"
#include "ostrowski/serialize.hpp"
