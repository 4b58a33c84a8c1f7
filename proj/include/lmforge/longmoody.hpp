#pragma once

#include "lmforge/longmoody/checks.hpp"
#include "lmforge/longmoody/io.hpp"
#include "lmforge/longmoody/lm.hpp"
