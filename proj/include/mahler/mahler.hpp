#pragma once

#include "mahler/error.hpp"
#include "mahler/laurent.hpp"
#include "mahler/matrix.hpp"
#include "mahler/measure.hpp"
#include "mahler/montecarlo.hpp"
#include "mahler/poly.hpp"
#include "mahler/ratfun.hpp"
#include "mahler/rational.hpp"
#include "mahler/roots.hpp"
#include "mahler/serialize.hpp"
#include "mahler/spectral.hpp"
#include "mahler/symfun.hpp"
