#pragma once

#include "brim/corpus.hpp"
#include "brim/errors.hpp"
#include "brim/examples.hpp"
#include "brim/field.hpp"
#include "brim/ideal.hpp"
#include "brim/linalg.hpp"
#include "brim/module.hpp"
#include "brim/module_io.hpp"
#include "brim/monomial.hpp"
#include "brim/multiplicity.hpp"
#include "brim/options.hpp"
#include "brim/poly.hpp"
#include "brim/polymatrix.hpp"
#include "brim/report.hpp"
#include "brim/span.hpp"
#include "brim/structure.hpp"
#include "brim/trunc.hpp"
