// Umbrella header for the qls library.

#pragma once

#include "qls/energy.hpp"
#include "qls/errors.hpp"
#include "qls/fourier.hpp"
#include "qls/hamiltonian.hpp"
#include "qls/io.hpp"
#include "qls/models.hpp"
#include "qls/optimize.hpp"
#include "qls/rng.hpp"
#include "qls/roughness.hpp"
#include "qls/scan.hpp"
