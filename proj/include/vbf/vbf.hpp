#pragma once

#include "gf2.hpp"
#include "boolean_function.hpp"
#include "spectral.hpp"
#include "vectorial.hpp"
#include "analysis.hpp"
#include "apn.hpp"
#include "random.hpp"
#include "parallel.hpp"
#include "search.hpp"
#include "io.hpp"
#include "verify.hpp"
