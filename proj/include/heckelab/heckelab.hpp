#pragma once

#include "heckelab/errors.hpp"
#include "heckelab/laurent.hpp"
#include "heckelab/coxeter.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/bernstein.hpp"
#include "heckelab/linalg.hpp"
#include "heckelab/specht.hpp"
#include "heckelab/schur.hpp"
#include "heckelab/fqsl2.hpp"
