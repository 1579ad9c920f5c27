#pragma once

// Truncated grid-based log-exp transseries kernel: field arithmetic with
// log/exp, flat derivation and integration, composition, compositional
// inversion, and the Abel-equation / conjugacy toolbox.

#include "logex/calculus.hpp"
#include "logex/cli.hpp"
#include "logex/compose.hpp"
#include "logex/conjugacy.hpp"
#include "logex/context.hpp"
#include "logex/errors.hpp"
#include "logex/eval.hpp"
#include "logex/format.hpp"
#include "logex/invert.hpp"
#include "logex/monomial.hpp"
#include "logex/parser.hpp"
#include "logex/scalar.hpp"
#include "logex/series.hpp"
#include "logex/translog.hpp"
