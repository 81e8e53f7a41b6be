#pragma once

// Umbrella header: the whole library.

#include "mzeta/atom.hpp"
#include "mzeta/cli.hpp"
#include "mzeta/dsl.hpp"
#include "mzeta/error.hpp"
#include "mzeta/factorize.hpp"
#include "mzeta/hodge.hpp"
#include "mzeta/integer.hpp"
#include "mzeta/intpoly.hpp"
#include "mzeta/irrationality.hpp"
#include "mzeta/linalg.hpp"
#include "mzeta/monoid.hpp"
#include "mzeta/report.hpp"
#include "mzeta/ring.hpp"
#include "mzeta/series.hpp"
