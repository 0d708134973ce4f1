#pragma once

#include "gcur/bounds.hpp"
#include "gcur/cpqr.hpp"
#include "gcur/cur.hpp"
#include "gcur/errors.hpp"
#include "gcur/experiment.hpp"
#include "gcur/kernels.hpp"
#include "gcur/matrix.hpp"
#include "gcur/matrix_market.hpp"
#include "gcur/pair.hpp"
#include "gcur/projector.hpp"
#include "gcur/random.hpp"
#include "gcur/sketch.hpp"
#include "gcur/source.hpp"
#include "gcur/svd.hpp"
#include "gcur/triplet.hpp"
