#pragma once
// Umbrella header for the whole library.

#include "seqcore.hpp"
#include "points.hpp"
#include "families.hpp"
#include "ktree.hpp"
#include "verify.hpp"
