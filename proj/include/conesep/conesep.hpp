#pragma once

// Umbrella header.

#include "conesep/augdual.hpp"
#include "conesep/cones.hpp"
#include "conesep/errors.hpp"
#include "conesep/hull.hpp"
#include "conesep/instances.hpp"
#include "conesep/io.hpp"
#include "conesep/lp.hpp"
#include "conesep/random.hpp"
#include "conesep/scalar.hpp"
#include "conesep/seminorms.hpp"
#include "conesep/separation.hpp"
#include "conesep/svg.hpp"
#include "conesep/vector.hpp"
