#pragma once

#include "lmforge/exactalg/laurent.hpp"
#include "lmforge/exactalg/linalg.hpp"
#include "lmforge/exactalg/matrix.hpp"
#include "lmforge/exactalg/ratfunc.hpp"
#include "lmforge/exactalg/rational.hpp"
#include "lmforge/exactalg/ring.hpp"
