#pragma once

#include "dsturan/errors.hpp"
#include "dsturan/graph.hpp"
#include "dsturan/graph_io.hpp"
#include "dsturan/canonical.hpp"
#include "dsturan/double_star.hpp"
#include "dsturan/formulas.hpp"
#include "dsturan/construct.hpp"
#include "dsturan/oracle.hpp"
