#ifndef SEAMCARVE_SEAMCARVE_HPP
#define SEAMCARVE_SEAMCARVE_HPP

#include "seamcarve/codec.hpp"
#include "seamcarve/energy.hpp"
#include "seamcarve/error.hpp"
#include "seamcarve/harness.hpp"
#include "seamcarve/metrics.hpp"
#include "seamcarve/raster.hpp"
#include "seamcarve/seam.hpp"

#endif // SEAMCARVE_SEAMCARVE_HPP
