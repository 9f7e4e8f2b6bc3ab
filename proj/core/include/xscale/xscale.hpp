#pragma once

#include "xscale/aggregate.hpp"
#include "xscale/baseline.hpp"
#include "xscale/color.hpp"
#include "xscale/config.hpp"
#include "xscale/error.hpp"
#include "xscale/graph.hpp"
#include "xscale/image.hpp"
#include "xscale/image_io.hpp"
#include "xscale/metrics.hpp"
#include "xscale/patch.hpp"
#include "xscale/resample.hpp"
#include "xscale/synthetic.hpp"
