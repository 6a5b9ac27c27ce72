#pragma once

#include "xform/fp_factor.hpp"
#include "xform/polynomial.hpp"
#include "xform/property_p.hpp"
#include "xform/roots.hpp"
#include "xform/squarefree.hpp"
#include "xform/sturm.hpp"
