#pragma once

#include "x5/core.hpp"
#include "x5/equivalence.hpp"
#include "x5/error.hpp"
#include "x5/parser.hpp"
#include "x5/print.hpp"
#include "x5/reduct.hpp"
#include "x5/semantics.hpp"
#include "x5/solver.hpp"
#include "x5/transform.hpp"
