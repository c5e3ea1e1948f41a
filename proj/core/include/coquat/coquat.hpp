#pragma once

#include "coquat/bench.hpp"
#include "coquat/demoivre.hpp"
#include "coquat/error.hpp"
#include "coquat/expr.hpp"
#include "coquat/mat4.hpp"
#include "coquat/polar.hpp"
#include "coquat/split_quaternion.hpp"
