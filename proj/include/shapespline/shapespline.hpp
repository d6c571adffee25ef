#pragma once

#include "shapespline/criteria.hpp"
#include "shapespline/cubic_segment.hpp"
#include "shapespline/directions.hpp"
#include "shapespline/error.hpp"
#include "shapespline/oracle.hpp"
#include "shapespline/polygon.hpp"
#include "shapespline/spline.hpp"
#include "shapespline/tolerance.hpp"
#include "shapespline/vec.hpp"
#include "shapespline/verify.hpp"
