#pragma once

// Umbrella header for the hyperinv library.

#include "hyperinv/error.hpp"
#include "hyperinv/rational.hpp"
#include "hyperinv/prime_field.hpp"
#include "hyperinv/domain.hpp"
#include "hyperinv/poly.hpp"
#include "hyperinv/curve.hpp"
#include "hyperinv/involution.hpp"
#include "hyperinv/invariants.hpp"
#include "hyperinv/numeric.hpp"
#include "hyperinv/numeric_invariants.hpp"
#include "hyperinv/models.hpp"
#include "hyperinv/classify.hpp"
#include "hyperinv/io.hpp"
