#pragma once

// Umbrella header.

#include "kneading/error.hpp"
#include "kneading/symbolic_core.hpp"
#include "kneading/kneading_data.hpp"
#include "kneading/admissibility.hpp"
#include "kneading/trees.hpp"
#include "kneading/tree_io.hpp"
#include "kneading/star_product.hpp"
#include "kneading/polynomial.hpp"
#include "kneading/markov.hpp"
#include "kneading/spectral.hpp"
#include "kneading/decomposition.hpp"
#include "kneading/otimes.hpp"
#include "kneading/cubic_oracle.hpp"
