#pragma once

#include "ikor/algebra.hpp"
#include "ikor/eigenvalues.hpp"
#include "ikor/evalrep.hpp"
#include "ikor/field.hpp"
#include "ikor/loper.hpp"
#include "ikor/matrix.hpp"
#include "ikor/oracles.hpp"
#include "ikor/oscillator.hpp"
#include "ikor/rmatrix.hpp"
#include "ikor/roots.hpp"
#include "ikor/sampling.hpp"
#include "ikor/series.hpp"
#include "ikor/spinchain.hpp"
