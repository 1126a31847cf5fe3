// Umbrella header for the library modules.

#ifndef BTSPEC_BTSPEC_HPP_
#define BTSPEC_BTSPEC_HPP_

#include "burnside.hpp"
#include "errors.hpp"
#include "ghost.hpp"
#include "group.hpp"
#include "group_spec.hpp"
#include "gset.hpp"
#include "labels.hpp"
#include "lattice.hpp"
#include "spectrum.hpp"
#include "verify.hpp"

#endif
