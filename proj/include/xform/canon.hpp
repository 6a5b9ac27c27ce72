#pragma once

#include "xform/canon/blockspec.hpp"
#include "xform/canon/classify.hpp"
#include "xform/canon/decompose.hpp"
#include "xform/canon/frobenius.hpp"
#include "xform/canon/lemma21.hpp"
