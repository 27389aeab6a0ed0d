#pragma once

#include "patchideal/errors.hpp"
#include "patchideal/groebner/groebner.hpp"
#include "patchideal/groebner/hilbert.hpp"
#include "patchideal/localgeom/dimension.hpp"
#include "patchideal/localgeom/local.hpp"
#include "patchideal/localgeom/survey.hpp"
#include "patchideal/patches/chart.hpp"
#include "patchideal/patches/hessenberg.hpp"
#include "patchideal/patches/recenter.hpp"
#include "patchideal/patches/richardson.hpp"
#include "patchideal/polycore/grading.hpp"
#include "patchideal/polycore/polynomial.hpp"
#include "patchideal/polycore/rational.hpp"
#include "patchideal/polycore/ring.hpp"
#include "patchideal/polycore/term_order.hpp"
#include "patchideal/polycore/univariate.hpp"
#include "patchideal/weyl/permutation.hpp"
