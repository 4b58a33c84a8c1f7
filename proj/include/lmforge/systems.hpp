#pragma once

#include "lmforge/systems/config.hpp"
#include "lmforge/systems/group_word.hpp"
#include "lmforge/systems/system.hpp"
#include "lmforge/systems/verify.hpp"
