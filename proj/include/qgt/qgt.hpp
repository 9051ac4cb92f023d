// Convenience umbrella for the whole library.
#pragma once

#include "qgt/bimatrix.hpp"
#include "qgt/eisert.hpp"
#include "qgt/equilibrium.hpp"
#include "qgt/game_spec.hpp"
#include "qgt/invasion.hpp"
#include "qgt/marinatto_weber.hpp"
#include "qgt/spectral.hpp"
#include "qgt/two_qubit.hpp"

namespace qgt {}
