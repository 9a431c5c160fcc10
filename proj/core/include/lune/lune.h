#pragma once

#include "lune/harness.h"
#include "lune/lunegeom.h"
#include "lune/polycore.h"
#include "lune/theorems.h"
