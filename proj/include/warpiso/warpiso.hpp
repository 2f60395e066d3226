#pragma once

#include "warpiso/bounds.hpp"
#include "warpiso/cheeger.hpp"
#include "warpiso/curvature.hpp"
#include "warpiso/errors.hpp"
#include "warpiso/oracle.hpp"
#include "warpiso/profile_io.hpp"
#include "warpiso/profiles.hpp"
#include "warpiso/quadrature.hpp"
#include "warpiso/radial.hpp"
#include "warpiso/roots.hpp"
#include "warpiso/spectrum.hpp"
#include "warpiso/warp.hpp"
