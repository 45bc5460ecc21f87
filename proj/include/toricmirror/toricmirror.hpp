#ifndef TORICMIRROR_TORICMIRROR_HPP
#define TORICMIRROR_TORICMIRROR_HPP

#include "lattice.hpp"
#include "subdivision.hpp"
#include "tropical.hpp"
#include "fan.hpp"
#include "bundles.hpp"
#include "spheres.hpp"
#include "winding.hpp"
#include "cohomology.hpp"
#include "ext.hpp"
#include "smoothing.hpp"
#include "catalog.hpp"
#include "svg.hpp"

#endif
