// qsd.hpp — umbrella header
#pragma once

#include "bounds.hpp"
#include "ensembles.hpp"
#include "entropy.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "measurement.hpp"
#include "montecarlo.hpp"
#include "sweep.hpp"
