#ifndef DIRAC_DIRAC_HPP
#define DIRAC_DIRAC_HPP

#include "dirac/acc_format.hpp"
#include "dirac/bounds.hpp"
#include "dirac/error.hpp"
#include "dirac/finite_plane.hpp"
#include "dirac/fixtures.hpp"
#include "dirac/incidence.hpp"
#include "dirac/kaleidoscope.hpp"
#include "dirac/rational.hpp"
#include "dirac/render.hpp"
#include "dirac/stats.hpp"
#include "dirac/wedge_format.hpp"

#endif  // DIRAC_DIRAC_HPP
