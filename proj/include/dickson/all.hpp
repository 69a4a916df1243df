#pragma once

#include "chebyshev.hpp"
#include "dickson.hpp"
#include "errors.hpp"
#include "moments.hpp"
#include "poly.hpp"
#include "quadrature.hpp"
#include "roots.hpp"
#include "scalar.hpp"
#include "series.hpp"
#include "stieltjes.hpp"
#include "verify.hpp"
