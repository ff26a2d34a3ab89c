#pragma once

#include "mtt/apf/forces.hpp"
#include "mtt/apf/rrt.hpp"
#include "mtt/apf/step.hpp"
#include "mtt/assoc/baselines.hpp"
#include "mtt/assoc/density.hpp"
#include "mtt/assoc/metrics.hpp"
#include "mtt/assoc/partition.hpp"
#include "mtt/channel/channel.hpp"
#include "mtt/core/errors.hpp"
#include "mtt/core/matrix.hpp"
#include "mtt/core/rng.hpp"
#include "mtt/core/scenario.hpp"
#include "mtt/core/state.hpp"
#include "mtt/core/vec3.hpp"
#include "mtt/io/config.hpp"
#include "mtt/io/export.hpp"
#include "mtt/mfg/mfg.hpp"
#include "mtt/sim/collab.hpp"
#include "mtt/sim/compare.hpp"
#include "mtt/sim/episode.hpp"
#include "mtt/sim/options.hpp"
