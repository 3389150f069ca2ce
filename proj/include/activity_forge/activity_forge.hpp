#ifndef ACTIVITY_FORGE_ACTIVITY_FORGE_HPP
#define ACTIVITY_FORGE_ACTIVITY_FORGE_HPP

#include "activity_forge/activity.hpp"
#include "activity_forge/bijection.hpp"
#include "activity_forge/errors.hpp"
#include "activity_forge/graph.hpp"
#include "activity_forge/graph_io.hpp"
#include "activity_forge/invariants.hpp"
#include "activity_forge/numbers.hpp"
#include "activity_forge/poly.hpp"

#endif  // ACTIVITY_FORGE_ACTIVITY_FORGE_HPP
