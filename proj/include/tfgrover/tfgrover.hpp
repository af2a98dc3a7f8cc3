// Umbrella header.

#pragma once

#include "tfgrover/analytic.hpp"
#include "tfgrover/chi.hpp"
#include "tfgrover/dicke.hpp"
#include "tfgrover/fullspace.hpp"
#include "tfgrover/harness.hpp"
#include "tfgrover/spectral.hpp"
#include "tfgrover/verifier.hpp"
#include "tfgrover/walk.hpp"
