#pragma once

#include "rigidpack/closedform.hpp"
#include "rigidpack/ensemble.hpp"
#include "rigidpack/errors.hpp"
#include "rigidpack/exact_scalar.hpp"
#include "rigidpack/fock.hpp"
#include "rigidpack/gridoracle.hpp"
#include "rigidpack/hierarchy.hpp"
#include "rigidpack/io.hpp"
#include "rigidpack/ladder.hpp"
#include "rigidpack/packet.hpp"
#include "rigidpack/rigidity.hpp"
#include "rigidpack/units.hpp"
