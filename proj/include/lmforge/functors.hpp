#pragma once

#include "lmforge/functors/config.hpp"
#include "lmforge/functors/constructors.hpp"
#include "lmforge/functors/ugfunctor.hpp"
#include "lmforge/functors/verify.hpp"
