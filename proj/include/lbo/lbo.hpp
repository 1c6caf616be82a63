#pragma once

#include "lbo/error.hpp"
#include "lbo/magma.hpp"
#include "lbo/matrix.hpp"
#include "lbo/complex.hpp"
#include "lbo/snf.hpp"
#include "lbo/jones.hpp"
#include "lbo/realization.hpp"
#include "lbo/tables.hpp"
