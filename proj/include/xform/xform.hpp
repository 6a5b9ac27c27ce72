#pragma once

#include "xform/canon.hpp"
#include "xform/exactnum.hpp"
#include "xform/f3product.hpp"
#include "xform/matrixcore.hpp"
#include "xform/topology.hpp"
#include "xform/upoly.hpp"
