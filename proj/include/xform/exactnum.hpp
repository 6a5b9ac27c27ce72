#pragma once

#include "xform/field.hpp"
#include "xform/fp.hpp"
#include "xform/rational.hpp"
