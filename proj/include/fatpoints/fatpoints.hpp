#pragma once

#include "fatpoints/checked.hpp"
#include "fatpoints/cli.hpp"
#include "fatpoints/cohomology.hpp"
#include "fatpoints/configuration.hpp"
#include "fatpoints/errors.hpp"
#include "fatpoints/io.hpp"
#include "fatpoints/lattice.hpp"
#include "fatpoints/negcurves.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/prime_field.hpp"
#include "fatpoints/resolution.hpp"
#include "fatpoints/syzygy.hpp"
#include "fatpoints/zariski.hpp"
