#pragma once

#include "unasp/error.hpp"
#include "unasp/interval.hpp"
#include "unasp/program.hpp"
#include "unasp/parser.hpp"
#include "unasp/grounder.hpp"
#include "unasp/expr.hpp"
#include "unasp/transform.hpp"
#include "unasp/semantics.hpp"
#include "unasp/mi.hpp"
#include "unasp/depgraph.hpp"
#include "unasp/nmi.hpp"
#include "unasp/solver.hpp"
#include "unasp/io.hpp"
