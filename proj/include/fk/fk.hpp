#pragma once

#include "fk/canonical.hpp"
#include "fk/config.hpp"
#include "fk/enumerate.hpp"
#include "fk/error.hpp"
#include "fk/io.hpp"
#include "fk/jacobi.hpp"
#include "fk/slo.hpp"
#include "fk/spectral.hpp"
#include "fk/supertree.hpp"
#include "fk/transforms.hpp"
#include "fk/random.hpp"
