#pragma once

#include "visang/special_functions.hpp"
#include "visang/kernels.hpp"
#include "visang/convex_body.hpp"
#include "visang/visual_function.hpp"
#include "visang/quadrature.hpp"
#include "visang/formulas.hpp"
#include "visang/bounds.hpp"
