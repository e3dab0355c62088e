// Umbrella header for the chowbso core library.
#pragma once

#include "chowbso/alphabet.hpp"
#include "chowbso/bigint.hpp"
#include "chowbso/euler_coefficient.hpp"
#include "chowbso/invariant_decomposition.hpp"
#include "chowbso/monomial.hpp"
#include "chowbso/multipoly.hpp"
#include "chowbso/parse.hpp"
#include "chowbso/pushforward.hpp"
#include "chowbso/ring_presentation.hpp"
#include "chowbso/weight_system.hpp"
#include "chowbso/weyl_group.hpp"
