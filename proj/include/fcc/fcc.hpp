#ifndef FCC_FCC_HPP
#define FCC_FCC_HPP

#include "fcc/cubical.hpp"
#include "fcc/decomposition.hpp"
#include "fcc/error.hpp"
#include "fcc/folding.hpp"
#include "fcc/generators.hpp"
#include "fcc/generate.hpp"
#include "fcc/geodesic.hpp"
#include "fcc/io.hpp"
#include "fcc/link.hpp"
#include "fcc/rank.hpp"
#include "fcc/simplicial.hpp"
#include "fcc/union_find.hpp"
#include "fcc/validate.hpp"

#endif  // FCC_FCC_HPP
