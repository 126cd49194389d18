#pragma once

#include "algdyn/action/action.hpp"
#include "algdyn/core/bivariate.hpp"
#include "algdyn/core/charpoly.hpp"
#include "algdyn/core/cyclotomic.hpp"
#include "algdyn/core/errors.hpp"
#include "algdyn/core/fp_poly.hpp"
#include "algdyn/core/integer.hpp"
#include "algdyn/core/laurent.hpp"
#include "algdyn/core/matrix.hpp"
#include "algdyn/core/polynomial.hpp"
#include "algdyn/core/subspace.hpp"
#include "algdyn/laurent/engine.hpp"
#include "algdyn/oracle/cross_validate.hpp"
#include "algdyn/oracle/demo_e2.hpp"
#include "algdyn/oracle/orbit.hpp"
#include "algdyn/toral/engine.hpp"
#include "algdyn/toral/verdict.hpp"
