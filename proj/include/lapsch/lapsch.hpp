#pragma once

#include "lapsch/error.hpp"
#include "lapsch/oscillators.hpp"
#include "lapsch/parallel.hpp"
#include "lapsch/pathology.hpp"
#include "lapsch/quadrature.hpp"
#include "lapsch/rational.hpp"
#include "lapsch/sdomain.hpp"
#include "lapsch/specfun.hpp"
#include "lapsch/transforms.hpp"
