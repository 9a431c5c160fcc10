#pragma once

#include "lune/polynomial.h"
#include "lune/roots.h"
#include "lune/zeros.h"
