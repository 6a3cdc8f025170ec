#pragma once

// Everything except the JSON layer (which needs nlohmann/json on the
// include path): include "spectral_class/json_io.hpp" for that.

#include "spectral_class/canonical.hpp"
#include "spectral_class/classifier.hpp"
#include "spectral_class/cospectral.hpp"
#include "spectral_class/equitable.hpp"
#include "spectral_class/exact_linalg.hpp"
#include "spectral_class/families.hpp"
#include "spectral_class/graph.hpp"
#include "spectral_class/graph6.hpp"
#include "spectral_class/harness.hpp"
#include "spectral_class/numeric.hpp"
#include "spectral_class/polynomial.hpp"
