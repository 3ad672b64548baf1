#pragma once

#include "config.hpp"
#include "specfun/appell.hpp"
#include "specfun/gamma.hpp"
#include "specfun/hypergeometric.hpp"
#include "specfun/levin.hpp"
#include "variogram/dispatch.hpp"
#include "oracle/bessel.hpp"
#include "oracle/bessel_laplace.hpp"
#include "oracle/quadrature_variogram.hpp"
