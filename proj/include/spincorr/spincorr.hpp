// spincorr.hpp — umbrella header.
#pragma once

#include "spincorr/correlations.hpp"
#include "spincorr/eigensolver.hpp"
#include "spincorr/errors.hpp"
#include "spincorr/matrix.hpp"
#include "spincorr/model.hpp"
#include "spincorr/operators.hpp"
#include "spincorr/sweep.hpp"
#include "spincorr/thermal.hpp"
