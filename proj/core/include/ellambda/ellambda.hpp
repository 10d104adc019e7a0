#pragma once

#include "ellambda/error.hpp"
#include "ellambda/expr.hpp"
#include "ellambda/precision.hpp"
#include "ellambda/qseries.hpp"
#include "ellambda/quad_field.hpp"
#include "ellambda/radical_solver.hpp"
#include "ellambda/rational.hpp"
#include "ellambda/report.hpp"
#include "ellambda/tables.hpp"
#include "ellambda/transforms.hpp"
#include "ellambda/verdict.hpp"
#include "ellambda/verify.hpp"
