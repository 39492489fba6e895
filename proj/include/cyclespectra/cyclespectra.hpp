#pragma once

#include "core.hpp"
#include "quartic.hpp"
#include "cycle_matrix.hpp"
#include "region.hpp"
#include "criterion.hpp"
#include "synthesis.hpp"
#include "bivar_poly.hpp"
#include "identities.hpp"
#include "sampling.hpp"
#include "emit.hpp"
