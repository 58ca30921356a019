#pragma once

#include "tricircle/batch.hpp"
#include "tricircle/common.hpp"
#include "tricircle/geometry.hpp"
#include "tricircle/oracle.hpp"
#include "tricircle/regions.hpp"
#include "tricircle/render.hpp"
#include "tricircle/symbolic.hpp"
