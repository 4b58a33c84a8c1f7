#pragma once

#include "lmforge/freefox/endomorphism.hpp"
#include "lmforge/freefox/fox.hpp"
#include "lmforge/freefox/groupring.hpp"
#include "lmforge/freefox/word.hpp"
