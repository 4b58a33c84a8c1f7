#pragma once

#include "lmforge/polydeg/degree.hpp"
#include "lmforge/polydeg/kappa_delta.hpp"
#include "lmforge/polydeg/restrict.hpp"
#include "lmforge/polydeg/splitting.hpp"
#include "lmforge/polydeg/translate.hpp"
