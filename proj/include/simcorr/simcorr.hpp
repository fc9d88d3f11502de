#pragma once

// Umbrella header: pulls in every public module.

#include "simcorr/association.hpp"
#include "simcorr/centering.hpp"
#include "simcorr/coherence.hpp"
#include "simcorr/commands.hpp"
#include "simcorr/csvio.hpp"
#include "simcorr/distance.hpp"
#include "simcorr/report.hpp"
#include "simcorr/scale_search.hpp"
#include "simcorr/symmat.hpp"
#include "simcorr/toyset.hpp"
#include "simcorr/types.hpp"
