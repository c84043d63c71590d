#pragma once

// Umbrella header for the high-frequency feature toolkit.

#include "hff/common.hpp"
#include "hff/rng.hpp"
#include "hff/fft.hpp"
#include "hff/spectrum.hpp"
#include "hff/features.hpp"
#include "hff/trend.hpp"
#include "hff/wavelet.hpp"
#include "hff/testsignal.hpp"
#include "hff/nulltest.hpp"
#include "hff/io.hpp"
