#pragma once

#include "xform/charpoly.hpp"
#include "xform/matrix.hpp"
#include "xform/minpoly.hpp"
