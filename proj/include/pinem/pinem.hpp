#pragma once

#include "pinem/bessel.hpp"
#include "pinem/config.hpp"
#include "pinem/errors.hpp"
#include "pinem/fourier.hpp"
#include "pinem/interaction.hpp"
#include "pinem/observables.hpp"
#include "pinem/pipeline.hpp"
#include "pinem/presets.hpp"
#include "pinem/propagation.hpp"
#include "pinem/units.hpp"
#include "pinem/wavepacket.hpp"
