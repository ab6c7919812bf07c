#pragma once

#include "salg/algebra.hpp"
#include "salg/catalog.hpp"
#include "salg/dense.hpp"
#include "salg/linear_solve.hpp"
#include "salg/linmap.hpp"
#include "salg/polymap.hpp"
#include "salg/random.hpp"
#include "salg/rational.hpp"
