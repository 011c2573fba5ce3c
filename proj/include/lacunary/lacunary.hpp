#ifndef LACUNARY_LACUNARY_HPP
#define LACUNARY_LACUNARY_HPP

#include "bi_poly.hpp"
#include "bigint.hpp"
#include "bivar_irred.hpp"
#include "capelli.hpp"
#include "error.hpp"
#include "int_poly.hpp"
#include "io.hpp"
#include "lacunary_reduce.hpp"
#include "pipeline.hpp"
#include "poly_ops.hpp"
#include "reciprocal.hpp"
#include "text.hpp"
#include "unifactor.hpp"

#endif  // LACUNARY_LACUNARY_HPP
