#pragma once

#include "abelian.hpp"
#include "code.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "gqc.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "sigma.hpp"
